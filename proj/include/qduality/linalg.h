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

#ifndef QDUALITY_LINALG_H
#define QDUALITY_LINALG_H

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>
#include <utility>

namespace qduality {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Fixed-size square matrix stored row-major. Only N = 2, 3 and 4 are used.
template <typename Scalar, std::size_t N>
struct SquareMatrix {
    static constexpr std::size_t dim = N;
    std::array<Scalar, N * N> data{};

    constexpr Scalar &operator()(std::size_t r, std::size_t c) {
        return data[r * N + c];
    }
    constexpr const Scalar &operator()(std::size_t r, std::size_t c) const {
        return data[r * N + c];
    }

    static constexpr SquareMatrix zero() {
        return {};
    }
    static constexpr SquareMatrix identity() {
        SquareMatrix m{};
        for (std::size_t k = 0; k < N; k++) {
            m(k, k) = Scalar(1);
        }
        return m;
    }
    static SquareMatrix diagonal(const std::array<Scalar, N> &d) {
        SquareMatrix m{};
        for (std::size_t k = 0; k < N; k++) {
            m(k, k) = d[k];
        }
        return m;
    }

    Scalar trace() const {
        Scalar t{};
        for (std::size_t k = 0; k < N; k++) {
            t += (*this)(k, k);
        }
        return t;
    }

    /// Transpose, conjugated for complex scalars.
    SquareMatrix adjoint() const {
        SquareMatrix m;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t c = 0; c < N; c++) {
                if constexpr (std::is_same_v<Scalar, Complex>) {
                    m(c, r) = std::conj((*this)(r, c));
                } else {
                    m(c, r) = (*this)(r, c);
                }
            }
        }
        return m;
    }

    SquareMatrix transpose() const {
        SquareMatrix m;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t c = 0; c < N; c++) {
                m(c, r) = (*this)(r, c);
            }
        }
        return m;
    }

    SquareMatrix &operator+=(const SquareMatrix &o) {
        for (std::size_t k = 0; k < N * N; k++) {
            data[k] += o.data[k];
        }
        return *this;
    }
    SquareMatrix &operator-=(const SquareMatrix &o) {
        for (std::size_t k = 0; k < N * N; k++) {
            data[k] -= o.data[k];
        }
        return *this;
    }
    SquareMatrix &operator*=(Scalar s) {
        for (auto &x : data) {
            x *= s;
        }
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix &b) {
        return a += b;
    }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix &b) {
        return a -= b;
    }
    friend SquareMatrix operator*(SquareMatrix a, Scalar s) {
        return a *= s;
    }
    friend SquareMatrix operator*(Scalar s, SquareMatrix a) {
        return a *= s;
    }
    friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) {
        SquareMatrix m{};
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t k = 0; k < N; k++) {
                Scalar x = a(r, k);
                for (std::size_t c = 0; c < N; c++) {
                    m(r, c) += x * b(k, c);
                }
            }
        }
        return m;
    }
    friend bool operator==(const SquareMatrix &a, const SquareMatrix &b) = default;
};

using ComplexMatrix2 = SquareMatrix<Complex, 2>;
using ComplexMatrix4 = SquareMatrix<Complex, 4>;
using RealMatrix3 = SquareMatrix<double, 3>;

/// Largest absolute entry of a - b.
template <typename Scalar, std::size_t N>
double max_abs_diff(const SquareMatrix<Scalar, N> &a, const SquareMatrix<Scalar, N> &b) {
    double m = 0;
    for (std::size_t k = 0; k < N * N; k++) {
        m = std::max(m, static_cast<double>(std::abs(a.data[k] - b.data[k])));
    }
    return m;
}

template <typename Scalar, std::size_t N>
bool all_finite(const SquareMatrix<Scalar, N> &a) {
    for (const auto &x : a.data) {
        if constexpr (std::is_same_v<Scalar, Complex>) {
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
                return false;
            }
        } else if (!std::isfinite(x)) {
            return false;
        }
    }
    return true;
}

// Small real 3-vector helpers.
double dot(const Vec3 &a, const Vec3 &b);
double norm(const Vec3 &a);
Vec3 cross(const Vec3 &a, const Vec3 &b);
Vec3 operator*(const RealMatrix3 &m, const Vec3 &v);
double determinant(const RealMatrix3 &m);
Vec3 column(const RealMatrix3 &m, std::size_t c);
Vec3 row(const RealMatrix3 &m, std::size_t r);

/// Which factor of the two-qubit space an operation refers to. S is the first
/// tensor factor, M the second.
enum class Subsystem { S, M };

/// Kronecker product with `a` acting on the first (S) factor.
ComplexMatrix4 tensor_product(const ComplexMatrix2 &a, const ComplexMatrix2 &b);

/// Traces out `traced` and returns the operator on the remaining qubit.
ComplexMatrix2 partial_trace(const ComplexMatrix4 &rho, Subsystem traced);

template <std::size_t N>
struct HermitianEigen {
    std::array<double, N> values;          ///< descending
    SquareMatrix<Complex, N> vectors;       ///< eigenvectors stored as columns
};

inline constexpr double kHermitianTolerance = 1e-10;

/// Throws NonHermitianError when max|h - h^dag| exceeds kHermitianTolerance.
/// The solve runs on the symmetrized matrix (h + h^dag)/2.
HermitianEigen<2> hermitian_eigen(const ComplexMatrix2 &h);
HermitianEigen<4> hermitian_eigen(const ComplexMatrix4 &h);

template <typename Scalar, std::size_t N>
double hermiticity_defect(const SquareMatrix<Scalar, N> &h) {
    return max_abs_diff(h, h.adjoint());
}

/// Sum of singular values.
double trace_norm(const ComplexMatrix2 &a);

struct SignedSvd3 {
    RealMatrix3 left;        ///< proper rotation
    Vec3 diag;               ///< may carry signs; |diag| descending
    RealMatrix3 right;       ///< proper rotation
};

/// t = left * diag(d) * right^T with both rotations in SO(3).
SignedSvd3 svd3(const RealMatrix3 &t);

/// Unit spinor with Bloch vector `axis` (normalized internally). Phase fixed so
/// the first non-negligible component is real and positive.
std::array<Complex, 2> bloch_spinor(const Vec3 &axis);

/// Multiplies a vector by a global phase so that its first non-negligible
/// component is real positive.
template <std::size_t N>
std::array<Complex, N> fix_phase(std::array<Complex, N> v) {
    for (const auto &x : v) {
        if (std::abs(x) > 1e-12) {
            Complex ph = std::conj(x) / std::abs(x);
            for (auto &y : v) {
                y *= ph;
            }
            break;
        }
    }
    return v;
}

template <std::size_t N>
SquareMatrix<Complex, N> outer(const std::array<Complex, N> &a, const std::array<Complex, N> &b) {
    SquareMatrix<Complex, N> m;
    for (std::size_t r = 0; r < N; r++) {
        for (std::size_t c = 0; c < N; c++) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

// Pauli matrices, index 0 is the identity.
const ComplexMatrix2 &pauli(std::size_t k);

}  // namespace qduality

#endif
