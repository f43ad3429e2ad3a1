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

#include "qduality/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qduality/errors.h"

namespace qduality {

double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Vec3 &a) {
    return std::sqrt(dot(a, a));
}

Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 operator*(const RealMatrix3 &m, const Vec3 &v) {
    Vec3 r{};
    for (std::size_t i = 0; i < 3; i++) {
        for (std::size_t j = 0; j < 3; j++) {
            r[i] += m(i, j) * v[j];
        }
    }
    return r;
}

double determinant(const RealMatrix3 &m) {
    return dot(row(m, 0), cross(row(m, 1), row(m, 2)));
}

Vec3 column(const RealMatrix3 &m, std::size_t c) {
    return {m(0, c), m(1, c), m(2, c)};
}

Vec3 row(const RealMatrix3 &m, std::size_t r) {
    return {m(r, 0), m(r, 1), m(r, 2)};
}

const ComplexMatrix2 &pauli(std::size_t k) {
    static const std::array<ComplexMatrix2, 4> table = [] {
        std::array<ComplexMatrix2, 4> t{};
        t[0] = ComplexMatrix2::identity();
        t[1](0, 1) = 1;
        t[1](1, 0) = 1;
        t[2](0, 1) = Complex(0, -1);
        t[2](1, 0) = Complex(0, 1);
        t[3](0, 0) = 1;
        t[3](1, 1) = -1;
        return t;
    }();
    return table.at(k);
}

ComplexMatrix4 tensor_product(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
    ComplexMatrix4 out;
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            for (std::size_t k = 0; k < 2; k++) {
                for (std::size_t l = 0; l < 2; l++) {
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix2 partial_trace(const ComplexMatrix4 &rho, Subsystem traced) {
    ComplexMatrix2 out;
    for (std::size_t r = 0; r < 2; r++) {
        for (std::size_t c = 0; c < 2; c++) {
            for (std::size_t k = 0; k < 2; k++) {
                if (traced == Subsystem::M) {
                    out(r, c) += rho(2 * r + k, 2 * c + k);
                } else {
                    out(r, c) += rho(2 * k + r, 2 * k + c);
                }
            }
        }
    }
    return out;
}

std::array<Complex, 2> bloch_spinor(const Vec3 &axis) {
    double len = norm(axis);
    if (len == 0) {
        return {Complex(1), Complex(0)};
    }
    Vec3 n{axis[0] / len, axis[1] / len, axis[2] / len};
    std::array<Complex, 2> v;
    if (n[2] >= 0) {
        double s = std::sqrt(2 * (1 + n[2]));
        v = {Complex(1 + n[2]) / s, Complex(n[0], n[1]) / s};
    } else {
        double s = std::sqrt(2 * (1 - n[2]));
        v = {Complex(n[0], -n[1]) / s, Complex(1 - n[2]) / s};
    }
    return fix_phase(v);
}

namespace {

template <std::size_t N>
SquareMatrix<Complex, N> checked_symmetrize(const SquareMatrix<Complex, N> &h) {
    if (!all_finite(h)) {
        throw NonHermitianError("matrix has non-finite entries");
    }
    double defect = hermiticity_defect(h);
    if (defect > kHermitianTolerance) {
        throw NonHermitianError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    return (h + h.adjoint()) * Complex(0.5);
}

template <std::size_t N>
void sort_descending(HermitianEigen<N> &e) {
    std::array<std::size_t, N> order;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return e.values[a] > e.values[b];
    });
    HermitianEigen<N> sorted;
    for (std::size_t k = 0; k < N; k++) {
        sorted.values[k] = e.values[order[k]];
        for (std::size_t r = 0; r < N; r++) {
            sorted.vectors(r, k) = e.vectors(r, order[k]);
        }
    }
    e = sorted;
}

}  // namespace

HermitianEigen<2> hermitian_eigen(const ComplexMatrix2 &h_in) {
    ComplexMatrix2 h = checked_symmetrize(h_in);
    // h = alpha*I + v.sigma
    double alpha = 0.5 * (h(0, 0).real() + h(1, 1).real());
    Vec3 v{h(1, 0).real(), h(1, 0).imag(), 0.5 * (h(0, 0).real() - h(1, 1).real())};
    double r = norm(v);

    HermitianEigen<2> e;
    e.values = {alpha + r, alpha - r};
    if (r == 0) {
        e.vectors = ComplexMatrix2::identity();
        return e;
    }
    auto up = bloch_spinor(v);
    auto down = bloch_spinor({-v[0], -v[1], -v[2]});
    for (std::size_t k = 0; k < 2; k++) {
        e.vectors(k, 0) = up[k];
        e.vectors(k, 1) = down[k];
    }
    return e;
}

HermitianEigen<4> hermitian_eigen(const ComplexMatrix4 &h_in) {
    ComplexMatrix4 a = checked_symmetrize(h_in);
    ComplexMatrix4 v = ComplexMatrix4::identity();

    double scale = 0;
    for (const auto &x : a.data) {
        scale = std::max(scale, std::abs(x));
    }

    // Cyclic complex Jacobi. Each rotation first removes the phase of a(p,q)
    // and then applies a real Givens rotation.
    for (int sweep = 0; sweep < 64; sweep++) {
        double off = 0;
        for (std::size_t p = 0; p < 4; p++) {
            for (std::size_t q = p + 1; q < 4; q++) {
                off = std::max(off, std::abs(a(p, q)));
            }
        }
        if (off <= 1e-300 || off <= 1e-17 * scale) {
            break;
        }
        for (std::size_t p = 0; p < 4; p++) {
            for (std::size_t q = p + 1; q < 4; q++) {
                double mag = std::abs(a(p, q));
                if (mag <= 1e-300) {
                    continue;
                }
                Complex phase = std::conj(a(p, q)) / mag;  // e^{-i phi}
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (aqq - app) / (2 * mag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double c = 1 / std::sqrt(1 + t * t);
                double s = t * c;

                ComplexMatrix4 g = ComplexMatrix4::identity();
                g(p, p) = c;
                g(p, q) = s;
                g(q, p) = -s * phase;
                g(q, q) = c * phase;
                a = g.adjoint() * a * g;
                a(p, q) = 0;
                a(q, p) = 0;
                v = v * g;
            }
        }
    }

    HermitianEigen<4> e;
    for (std::size_t k = 0; k < 4; k++) {
        e.values[k] = a(k, k).real();
    }
    e.vectors = v;
    sort_descending(e);
    return e;
}

double trace_norm(const ComplexMatrix2 &a) {
    // (s1 + s2)^2 = s1^2 + s2^2 + 2 s1 s2 = ||a||_F^2 + 2 |det a|
    double frob = 0;
    for (const auto &x : a.data) {
        frob += std::norm(x);
    }
    double det = std::abs(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    return std::sqrt(frob + 2 * det);
}

SignedSvd3 svd3(const RealMatrix3 &t) {
    // One-sided Jacobi: rotate columns of w = t*v until mutually orthogonal.
    RealMatrix3 w = t;
    RealMatrix3 v = RealMatrix3::identity();
    for (int sweep = 0; sweep < 64; sweep++) {
        bool rotated = false;
        for (std::size_t p = 0; p < 3; p++) {
            for (std::size_t q = p + 1; q < 3; q++) {
                double alpha = 0, beta = 0, gamma = 0;
                for (std::size_t i = 0; i < 3; i++) {
                    alpha += w(i, p) * w(i, p);
                    beta += w(i, q) * w(i, q);
                    gamma += w(i, p) * w(i, q);
                }
                if (std::abs(gamma) <= 1e-300 || std::abs(gamma) <= 1e-16 * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                double zeta = (beta - alpha) / (2 * gamma);
                double tn = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                double c = 1 / std::sqrt(1 + tn * tn);
                double s = c * tn;
                for (std::size_t i = 0; i < 3; i++) {
                    double wp = w(i, p), wq = w(i, q);
                    w(i, p) = c * wp - s * wq;
                    w(i, q) = s * wp + c * wq;
                    double vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::array<double, 3> sigma;
    for (std::size_t k = 0; k < 3; k++) {
        sigma[k] = norm(column(w, k));
    }
    std::array<std::size_t, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sigma[a] > sigma[b];
    });

    SignedSvd3 out;
    std::array<Vec3, 3> u_cols;
    std::array<bool, 3> have{};
    double smax = sigma[order[0]];
    for (std::size_t k = 0; k < 3; k++) {
        std::size_t src = order[k];
        out.diag[k] = sigma[src];
        for (std::size_t i = 0; i < 3; i++) {
            out.right(i, k) = v(i, src);
        }
        if (sigma[src] > 1e-12 * smax && sigma[src] > 1e-300) {
            Vec3 col = column(w, src);
            u_cols[k] = {col[0] / sigma[src], col[1] / sigma[src], col[2] / sigma[src]};
            have[k] = true;
        }
    }
    // Complete the left basis where the singular value vanishes.
    if (!have[0]) {
        u_cols[0] = {1, 0, 0};
        have[0] = true;
    }
    if (!have[1]) {
        const Vec3 &a = u_cols[0];
        Vec3 trial = std::abs(a[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        Vec3 b = cross(a, trial);
        double nb = norm(b);
        u_cols[1] = {b[0] / nb, b[1] / nb, b[2] / nb};
        have[1] = true;
    }
    if (!have[2]) {
        u_cols[2] = cross(u_cols[0], u_cols[1]);
    }
    for (std::size_t k = 0; k < 3; k++) {
        for (std::size_t i = 0; i < 3; i++) {
            out.left(i, k) = u_cols[k][i];
        }
    }

    // Move reflections into the (smallest) diagonal entry.
    if (determinant(out.left) < 0) {
        for (std::size_t i = 0; i < 3; i++) {
            out.left(i, 2) = -out.left(i, 2);
        }
        out.diag[2] = -out.diag[2];
    }
    if (determinant(out.right) < 0) {
        for (std::size_t i = 0; i < 3; i++) {
            out.right(i, 2) = -out.right(i, 2);
        }
        out.diag[2] = -out.diag[2];
    }
    return out;
}

}  // namespace qduality
