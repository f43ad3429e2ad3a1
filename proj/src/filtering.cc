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

#include "qduality/filtering.h"

#include <cmath>
#include <string>

#include "qduality/bell.h"
#include "qduality/errors.h"

namespace qduality {

namespace {

constexpr double kMinMarginalEigenvalue = 1e-9;

// Alternating sweeps before switching to Newton steps.
constexpr std::size_t kAlternatingSweeps = 10;

double min_eigenvalue(const ComplexMatrix2 &rho) {
    return hermitian_eigen(rho).values[1];
}

// sqrt(lambda_min) rho^{-1/2}; its largest singular value is exactly one.
LocalFilter inverse_sqrt_filter(const ComplexMatrix2 &rho) {
    auto eig = hermitian_eigen(rho);
    double low = eig.values[1];
    if (!(low > kMinMarginalEigenvalue)) {
        throw SingularMarginalError("marginal is rank deficient (smallest eigenvalue " + std::to_string(low) + ")");
    }
    ComplexMatrix2 f;
    for (std::size_t k = 0; k < 2; k++) {
        std::array<Complex, 2> v{eig.vectors(0, k), eig.vectors(1, k)};
        f += outer(v, v) * Complex(std::sqrt(low / eig.values[k]));
    }
    return LocalFilter::normalized(f);
}

double local_bloch_weight(const TwoQubitState &s) {
    BlochForm b = bloch_decompose(s);
    return norm(b.n) + norm(b.m);
}

// log Tr[(e^{x.sigma} (x) e^{y.sigma}) rho] in closed form. The filters
// e^{x.sigma/2} (x) e^{y.sigma/2} reach the Bell-diagonal form at its minimum.
double log_filter_trace(const BlochForm &b, const std::array<double, 6> &v) {
    Vec3 x{v[0], v[1], v[2]}, y{v[3], v[4], v[5]};
    double lx = norm(x), ly = norm(y);
    double cx = std::cosh(lx), cy = std::cosh(ly);
    // sinh(l)/l, finite at l = 0
    double sx = lx > 0 ? std::sinh(lx) / lx : 1;
    double sy = ly > 0 ? std::sinh(ly) / ly : 1;
    double f = cx * cy + cy * sx * dot(x, b.n) + cx * sy * dot(y, b.m) + sx * sy * dot(x, b.t * y);
    return std::log(f);
}

// Solves a x = r for a symmetric positive (semi)definite 6x6 system by
// Gaussian elimination with partial pivoting.
std::array<double, 6> solve6(std::array<std::array<double, 6>, 6> a, std::array<double, 6> r) {
    for (std::size_t c = 0; c < 6; c++) {
        std::size_t piv = c;
        for (std::size_t k = c + 1; k < 6; k++) {
            if (std::abs(a[k][c]) > std::abs(a[piv][c])) {
                piv = k;
            }
        }
        std::swap(a[c], a[piv]);
        std::swap(r[c], r[piv]);
        for (std::size_t k = c + 1; k < 6; k++) {
            double f = a[k][c] / a[c][c];
            for (std::size_t j = c; j < 6; j++) {
                a[k][j] -= f * a[c][j];
            }
            r[k] -= f * r[c];
        }
    }
    std::array<double, 6> x{};
    for (std::size_t c = 6; c-- > 0;) {
        double acc = r[c];
        for (std::size_t j = c + 1; j < 6; j++) {
            acc -= a[c][j] * x[j];
        }
        x[c] = acc / a[c][c];
    }
    return x;
}

ComplexMatrix2 exp_half(const Vec3 &x) {
    double l = norm(x);
    ComplexMatrix2 f = ComplexMatrix2::identity() * Complex(std::cosh(l / 2));
    if (l > 0) {
        double s = std::sinh(l / 2) / l;
        for (int k = 0; k < 3; k++) {
            f += pauli(k + 1) * Complex(s * x[static_cast<std::size_t>(k)]);
        }
    }
    return f;
}

// Damped Newton step on log_filter_trace at the origin. Gradient (n, m),
// Hessian [[1, T], [T^T, 1]] - g g^T.
std::pair<LocalFilter, LocalFilter> newton_filters(const TwoQubitState &s) {
    BlochForm b = bloch_decompose(s);
    std::array<double, 6> g{b.n[0], b.n[1], b.n[2], b.m[0], b.m[1], b.m[2]};
    std::array<std::array<double, 6>, 6> h{};
    for (std::size_t i = 0; i < 3; i++) {
        h[i][i] = h[i + 3][i + 3] = 1;
        for (std::size_t j = 0; j < 3; j++) {
            h[i][j + 3] = h[j + 3][i] = b.t(i, j);
        }
    }
    std::array<double, 6> minus_g;
    for (std::size_t i = 0; i < 6; i++) {
        minus_g[i] = -g[i];
        for (std::size_t j = 0; j < 6; j++) {
            h[i][j] -= g[i] * g[j];
        }
        h[i][i] += 1e-12;
    }
    std::array<double, 6> d = solve6(h, minus_g);
    double slope = 0;
    for (std::size_t i = 0; i < 6; i++) {
        slope += g[i] * d[i];
    }
    if (!(slope < 0)) {
        d = minus_g;  // fall back to steepest descent
        slope = 0;
        for (double v : g) {
            slope -= v * v;
        }
    }
    double t = 1;
    for (int k = 0; k < 60; k++) {
        std::array<double, 6> v;
        for (std::size_t i = 0; i < 6; i++) {
            v[i] = t * d[i];
        }
        if (log_filter_trace(b, v) <= 1e-4 * t * slope) {
            break;
        }
        t /= 2;
    }
    return {LocalFilter::normalized(exp_half({t * d[0], t * d[1], t * d[2]})),
            LocalFilter::normalized(exp_half({t * d[3], t * d[4], t * d[5]}))};
}

bool correlations_diagonal(const TwoQubitState &s) {
    RealMatrix3 t = bloch_decompose(s).t;
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t c = 0; c < 3; c++) {
            if (r != c && std::abs(t(r, c)) > 1e-12) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

FilterOutcome filter_to_bell_diagonal(const TwoQubitState &s, const FilterOptions &options) {
    for (Subsystem side : {Subsystem::S, Subsystem::M}) {
        double low = min_eigenvalue(s.marginal(side));
        if (!(low > kMinMarginalEigenvalue)) {
            throw SingularMarginalError(std::string("marginal of ") + (side == Subsystem::S ? "S" : "M") +
                                        " is rank deficient (smallest eigenvalue " + std::to_string(low) + ")");
        }
    }

    FilterOutcome out{s, LocalFilter(), LocalFilter(), 1, 0, false, 0, 0, {}};
    out.bell_before = bell_max(s);
    out.bell_history.push_back(out.bell_before);

    ComplexMatrix2 total_s = ComplexMatrix2::identity();
    ComplexMatrix2 total_m = ComplexMatrix2::identity();
    const LocalFilter identity;

    while (true) {
        if (local_bloch_weight(out.state) <= options.tol) {
            out.converged = true;
            break;
        }
        if (out.iterations >= options.max_iter) {
            break;
        }
        if (out.iterations < kAlternatingSweeps) {
            LocalFilter fs = inverse_sqrt_filter(out.state.marginal(Subsystem::S));
            FilteredState step = apply_local_filter(out.state, fs, identity);
            out.success_prob *= step.success_prob;
            total_s = fs.matrix() * total_s;

            LocalFilter fm = inverse_sqrt_filter(step.state.marginal(Subsystem::M));
            step = apply_local_filter(step.state, identity, fm);
            out.success_prob *= step.success_prob;
            total_m = fm.matrix() * total_m;
            out.state = step.state;
        } else {
            auto [fs, fm] = newton_filters(out.state);
            FilteredState step = apply_local_filter(out.state, fs, fm);
            out.success_prob *= step.success_prob;
            total_s = fs.matrix() * total_s;
            total_m = fm.matrix() * total_m;
            out.state = step.state;
        }
        out.iterations++;
        out.bell_history.push_back(bell_max(out.state));
    }

    if (!correlations_diagonal(out.state)) {
        NormalForm nf = normal_form(out.state);
        out.state = apply_local_unitary(out.state, nf.u_s, nf.u_m);
        total_s = nf.u_s * total_s;
        total_m = nf.u_m * total_m;
    }
    out.total_filter_s = LocalFilter(total_s);
    out.total_filter_m = LocalFilter(total_m);
    out.bell_after = bell_max(out.state);
    return out;
}

MonotonicityReport verify_filter_monotonicity(const TwoQubitState &s, const FilterOptions &options) {
    FilterOutcome f = filter_to_bell_diagonal(s, options);
    MonotonicityReport r;
    r.bell_before = f.bell_before;
    r.bell_after = f.bell_after;
    r.success_prob = f.success_prob;
    r.holds = r.bell_after >= r.bell_before - 1e-9;
    return r;
}

}  // namespace qduality
