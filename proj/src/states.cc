// Copyright 2026 The qduality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qduality/states.h"

#include <cmath>
#include <numeric>
#include <string>

#include "qduality/errors.h"

namespace qduality {

namespace {

constexpr double kStateTolerance = 1e-10;

ComplexMatrix4 kron_pauli(std::size_t k, std::size_t l) {
    return tensor_product(pauli(k), pauli(l));
}

double trace_with(const ComplexMatrix4 &rho, const ComplexMatrix4 &op) {
    // Tr(rho op) without forming the product.
    Complex acc = 0;
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            acc += rho(r, c) * op(c, r);
        }
    }
    return acc.real();
}

}  // namespace

ComplexMatrix2 TwoQubitState::marginal(Subsystem keep) const {
    return partial_trace(rho_, keep == Subsystem::S ? Subsystem::M : Subsystem::S);
}

double TwoQubitState::purity() const {
    return trace_with(rho_, rho_);
}

TwoQubitState validate(const ComplexMatrix4 &rho) {
    if (!all_finite(rho)) {
        throw NotDensityMatrixError("density matrix has non-finite entries");
    }
    double defect = hermiticity_defect(rho);
    if (defect > kStateTolerance) {
        throw NotDensityMatrixError("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    ComplexMatrix4 h = (rho + rho.adjoint()) * Complex(0.5);
    double tr = h.trace().real();
    if (std::abs(tr - 1) > kStateTolerance) {
        throw NotDensityMatrixError("density matrix trace is " + std::to_string(tr) + ", expected 1");
    }
    auto eig = hermitian_eigen(h);
    double lowest = eig.values[3];
    if (lowest < -kStateTolerance) {
        throw NotDensityMatrixError("density matrix has negative eigenvalue " + std::to_string(lowest));
    }
    if (lowest < 0) {
        ComplexMatrix4 fixed;
        double total = 0;
        for (std::size_t k = 0; k < 4; k++) {
            double lam = std::max(eig.values[k], 0.0);
            total += lam;
            std::array<Complex, 4> vec;
            for (std::size_t r = 0; r < 4; r++) {
                vec[r] = eig.vectors(r, k);
            }
            fixed += outer(vec, vec) * Complex(lam);
        }
        h = fixed * Complex(1 / total);
    }
    return TwoQubitState(h);
}

BlochForm bloch_decompose(const ComplexMatrix4 &rho) {
    BlochForm b;
    for (std::size_t k = 1; k <= 3; k++) {
        b.n[k - 1] = trace_with(rho, kron_pauli(k, 0));
        b.m[k - 1] = trace_with(rho, kron_pauli(0, k));
        for (std::size_t l = 1; l <= 3; l++) {
            b.t(k - 1, l - 1) = trace_with(rho, kron_pauli(k, l));
        }
    }
    return b;
}

BlochForm bloch_decompose(const TwoQubitState &s) {
    return bloch_decompose(s.rho());
}

TwoQubitState bloch_compose(const BlochForm &b) {
    ComplexMatrix4 rho = kron_pauli(0, 0);
    for (std::size_t k = 1; k <= 3; k++) {
        rho += kron_pauli(k, 0) * Complex(b.n[k - 1]);
        rho += kron_pauli(0, k) * Complex(b.m[k - 1]);
        for (std::size_t l = 1; l <= 3; l++) {
            rho += kron_pauli(k, l) * Complex(b.t(k - 1, l - 1));
        }
    }
    return validate(rho * Complex(0.25));
}

double max_singular_value(const ComplexMatrix2 &a) {
    return std::sqrt(std::max(hermitian_eigen(a.adjoint() * a).values[0], 0.0));
}

LocalFilter::LocalFilter(const ComplexMatrix2 &f) : f_(f) {
    if (!all_finite(f)) {
        throw BadParameterError("filter has non-finite entries");
    }
    double top = hermitian_eigen(f.adjoint() * f).values[0];
    if (top > 1 + 1e-10) {
        throw BadParameterError("filter violates F^dag F <= 1 (largest eigenvalue " + std::to_string(top) + ")");
    }
}

LocalFilter LocalFilter::normalized(const ComplexMatrix2 &f) {
    double s = max_singular_value(f);
    if (!(s > 0)) {
        throw BadParameterError("cannot normalize a zero filter");
    }
    return LocalFilter(f * Complex(1 / s));
}

std::array<Complex, 4> bell_vector(BellState which) {
    const double h = 1 / std::sqrt(2.0);
    switch (which) {
        case BellState::PsiMinus:
            return {0, h, -h, 0};
        case BellState::PhiMinus:
            return {h, 0, 0, -h};
        case BellState::PsiPlus:
            return {0, h, h, 0};
        case BellState::PhiPlus:
            return {h, 0, 0, h};
    }
    return {};
}

ComplexMatrix4 bell_projector(BellState which) {
    auto v = bell_vector(which);
    return outer(v, v);
}

TwoQubitState bell_mixture(const std::array<double, 4> &p) {
    double total = 0;
    for (double x : p) {
        if (!(x >= 0) || !std::isfinite(x)) {
            throw BadProbabilitiesError("Bell-mixture weights must be non-negative");
        }
        total += x;
    }
    if (std::abs(total - 1) > 1e-12) {
        throw BadProbabilitiesError("Bell-mixture weights sum to " + std::to_string(total) + ", expected 1");
    }
    constexpr std::array<BellState, 4> order{BellState::PsiMinus, BellState::PhiMinus, BellState::PsiPlus,
                                             BellState::PhiPlus};
    ComplexMatrix4 rho;
    for (std::size_t k = 0; k < 4; k++) {
        rho += bell_projector(order[k]) * Complex(p[k]);
    }
    return validate(rho);
}

namespace {

void check_unit_interval(double x, const char *name) {
    if (!(x >= 0 && x <= 1)) {
        throw BadParameterError(std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
    }
}

}  // namespace

std::array<double, 4> depolarized_weights(double r1, double r2) {
    check_unit_interval(r1, "R1");
    check_unit_interval(r2, "R2");
    return {
        (1 + r1) * (1 + r2) / 4,
        (1 - r1) * (1 + r2) / 4,
        (1 + r1) * (1 - r2) / 4,
        (1 - r1) * (1 - r2) / 4,
    };
}

TwoQubitState depolarized_state(double r1, double r2) {
    return bell_mixture(depolarized_weights(r1, r2));
}

TwoQubitState werner(double r) {
    check_unit_interval(r, "R");
    ComplexMatrix4 rho = bell_projector(BellState::PsiMinus) * Complex(r) +
                         ComplexMatrix4::identity() * Complex((1 - r) / 4);
    return validate(rho);
}

std::array<double, 4> bell_weights(const TwoQubitState &s) {
    constexpr std::array<BellState, 4> order{BellState::PsiMinus, BellState::PhiMinus, BellState::PsiPlus,
                                             BellState::PhiPlus};
    std::array<double, 4> p;
    for (std::size_t k = 0; k < 4; k++) {
        auto v = bell_vector(order[k]);
        Complex acc = 0;
        for (std::size_t r = 0; r < 4; r++) {
            for (std::size_t c = 0; c < 4; c++) {
                acc += std::conj(v[r]) * s.rho()(r, c) * v[c];
            }
        }
        p[k] = acc.real();
    }
    return p;
}

double partial_transpose_min_eigenvalue(const TwoQubitState &s) {
    ComplexMatrix4 pt;
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            for (std::size_t k = 0; k < 2; k++) {
                for (std::size_t l = 0; l < 2; l++) {
                    pt(2 * i + k, 2 * j + l) = s.rho()(2 * i + l, 2 * j + k);
                }
            }
        }
    }
    return hermitian_eigen(pt).values[3];
}

TwoQubitState pure_state(const std::array<Complex, 4> &psi) {
    double nrm = 0;
    for (const auto &x : psi) {
        nrm += std::norm(x);
    }
    if (!(nrm > 0)) {
        throw BadParameterError("state vector is zero");
    }
    return validate(outer(psi, psi) * Complex(1 / nrm));
}

TwoQubitState schmidt_state(double lambda) {
    check_unit_interval(lambda, "Schmidt weight");
    return pure_state({0, std::sqrt(lambda), -std::sqrt(1 - lambda), 0});
}

TwoQubitState singlet() {
    return pure_state(bell_vector(BellState::PsiMinus));
}

TwoQubitState maximally_mixed() {
    return validate(ComplexMatrix4::identity() * Complex(0.25));
}

TwoQubitState random_state(std::mt19937_64 &rng, int rank) {
    if (rank < 1 || rank > 4) {
        throw BadParameterError("rank must be in 1..4, got " + std::to_string(rank));
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<std::array<Complex, 4>, 4> g{};
    for (int c = 0; c < rank; c++) {
        for (std::size_t r = 0; r < 4; r++) {
            double re = gauss(rng);
            double im = gauss(rng);
            g[c][r] = Complex(re, im);
        }
    }
    ComplexMatrix4 rho;
    for (int c = 0; c < rank; c++) {
        rho += outer(g[c], g[c]);
    }
    return validate(rho * Complex(1 / rho.trace().real()));
}

TwoQubitState random_state(std::uint64_t seed, int rank) {
    std::mt19937_64 rng(seed);
    return random_state(rng, rank);
}

Vec3 random_unit_vector(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        double len = norm(v);
        if (len > 1e-8) {
            return {v[0] / len, v[1] / len, v[2] / len};
        }
    }
}

ComplexMatrix2 random_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<double, 4> q;
    double len;
    do {
        for (auto &x : q) {
            x = gauss(rng);
        }
        len = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    } while (len < 1e-8);
    ComplexMatrix2 u = pauli(0) * Complex(q[0] / len);
    for (std::size_t k = 1; k <= 3; k++) {
        u -= pauli(k) * Complex(0, q[k] / len);
    }
    return u;
}

void check_unitary(const ComplexMatrix2 &u) {
    if (!all_finite(u) || max_abs_diff(u.adjoint() * u, ComplexMatrix2::identity()) > 1e-10) {
        throw NotUnitaryError("local operation is not unitary");
    }
}

TwoQubitState apply_local_unitary(const TwoQubitState &s, const ComplexMatrix2 &u_s, const ComplexMatrix2 &u_m) {
    check_unitary(u_s);
    check_unitary(u_m);
    ComplexMatrix4 u = tensor_product(u_s, u_m);
    return validate(u * s.rho() * u.adjoint());
}

FilteredState apply_local_filter(const TwoQubitState &s, const LocalFilter &f_s, const LocalFilter &f_m) {
    ComplexMatrix4 f = tensor_product(f_s.matrix(), f_m.matrix());
    ComplexMatrix4 out = f * s.rho() * f.adjoint();
    double p = out.trace().real();
    if (!(p >= 1e-14)) {
        throw ZeroProbabilityError("filter success probability " + std::to_string(p) + " is below 1e-14");
    }
    return {validate(out * Complex(1 / p)), p};
}

RealMatrix3 rotation_of_unitary(const ComplexMatrix2 &u) {
    RealMatrix3 o;
    ComplexMatrix2 ud = u.adjoint();
    for (std::size_t k = 1; k <= 3; k++) {
        ComplexMatrix2 rotated = u * pauli(k) * ud;
        for (std::size_t j = 1; j <= 3; j++) {
            o(j - 1, k - 1) = 0.5 * (pauli(j) * rotated).trace().real();
        }
    }
    return o;
}

ComplexMatrix2 unitary_of_rotation(const RealMatrix3 &o) {
    // Quaternion extraction, branch on the largest diagonal combination.
    double w, x, y, z;
    double tr = o(0, 0) + o(1, 1) + o(2, 2);
    if (tr > 0) {
        double s = 2 * std::sqrt(tr + 1);
        w = s / 4;
        x = (o(2, 1) - o(1, 2)) / s;
        y = (o(0, 2) - o(2, 0)) / s;
        z = (o(1, 0) - o(0, 1)) / s;
    } else if (o(0, 0) > o(1, 1) && o(0, 0) > o(2, 2)) {
        double s = 2 * std::sqrt(1 + o(0, 0) - o(1, 1) - o(2, 2));
        w = (o(2, 1) - o(1, 2)) / s;
        x = s / 4;
        y = (o(0, 1) + o(1, 0)) / s;
        z = (o(0, 2) + o(2, 0)) / s;
    } else if (o(1, 1) > o(2, 2)) {
        double s = 2 * std::sqrt(1 + o(1, 1) - o(0, 0) - o(2, 2));
        w = (o(0, 2) - o(2, 0)) / s;
        x = (o(0, 1) + o(1, 0)) / s;
        y = s / 4;
        z = (o(1, 2) + o(2, 1)) / s;
    } else {
        double s = 2 * std::sqrt(1 + o(2, 2) - o(0, 0) - o(1, 1));
        w = (o(1, 0) - o(0, 1)) / s;
        x = (o(0, 2) + o(2, 0)) / s;
        y = (o(1, 2) + o(2, 1)) / s;
        z = s / 4;
    }
    if (w < 0) {
        w = -w;
        x = -x;
        y = -y;
        z = -z;
    }
    double len = std::sqrt(w * w + x * x + y * y + z * z);
    ComplexMatrix2 u = pauli(0) * Complex(w / len);
    u -= pauli(1) * Complex(0, x / len);
    u -= pauli(2) * Complex(0, y / len);
    u -= pauli(3) * Complex(0, z / len);
    return u;
}

}  // namespace qduality
