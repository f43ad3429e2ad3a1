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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qduality/errors.h"
#include "qduality/states.h"

using namespace qduality;

namespace {

ComplexMatrix2 random_matrix2(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix2 m;
    for (auto &x : m.data) {
        x = Complex(g(rng), g(rng));
    }
    return m;
}

ComplexMatrix4 random_hermitian4(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix4 m;
    for (auto &x : m.data) {
        x = Complex(g(rng), g(rng));
    }
    return (m + m.adjoint()) * Complex(0.5);
}

RealMatrix3 random_real3(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    RealMatrix3 m;
    for (auto &x : m.data) {
        x = g(rng);
    }
    return m;
}

}  // namespace

TEST(linalg, tensor_product_examples) {
    EXPECT_EQ(tensor_product(pauli(0), pauli(0)), ComplexMatrix4::identity());
    EXPECT_EQ(tensor_product(pauli(3), pauli(3)), ComplexMatrix4::diagonal({1, -1, -1, 1}));

    ComplexMatrix4 xx = tensor_product(pauli(1), pauli(1));
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            EXPECT_EQ(xx(r, c), Complex(r + c == 3 ? 1 : 0)) << r << "," << c;
        }
    }
}

TEST(linalg, tensor_product_trace_and_partial_trace) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; k++) {
        ComplexMatrix2 a = random_matrix2(rng);
        ComplexMatrix2 b = random_matrix2(rng);
        ComplexMatrix4 ab = tensor_product(a, b);
        EXPECT_NEAR(std::abs(ab.trace() - a.trace() * b.trace()), 0, 1e-12);
        EXPECT_LE(max_abs_diff(partial_trace(ab, Subsystem::M), a * b.trace()), 1e-12);
        EXPECT_LE(max_abs_diff(partial_trace(ab, Subsystem::S), b * a.trace()), 1e-12);
    }
}

TEST(linalg, partial_trace_examples) {
    const ComplexMatrix2 half = pauli(0) * Complex(0.5);
    EXPECT_LE(max_abs_diff(partial_trace(singlet().rho(), Subsystem::S), half), 1e-15);
    EXPECT_LE(max_abs_diff(partial_trace(singlet().rho(), Subsystem::M), half), 1e-15);
    EXPECT_LE(max_abs_diff(partial_trace(werner(0.5).rho(), Subsystem::M), half), 1e-15);
}

TEST(linalg, hermitian_eigen_2x2_examples) {
    auto e = hermitian_eigen(ComplexMatrix2::diagonal({0.7, 0.3}));
    EXPECT_DOUBLE_EQ(e.values[0], 0.7);
    EXPECT_DOUBLE_EQ(e.values[1], 0.3);

    e = hermitian_eigen(pauli(1));
    EXPECT_NEAR(e.values[0], 1, 1e-15);
    EXPECT_NEAR(e.values[1], -1, 1e-15);

    ComplexMatrix2 pure = (pauli(0) + pauli(3) * Complex(0.6) + pauli(1) * Complex(0.8)) * Complex(0.5);
    e = hermitian_eigen(pure);
    EXPECT_NEAR(e.values[0], 1, 1e-15);
    EXPECT_NEAR(e.values[1], 0, 1e-15);
}

TEST(linalg, hermitian_eigen_rejects_non_hermitian) {
    ComplexMatrix2 m = pauli(1);
    m(0, 1) = 2;
    EXPECT_THROW(hermitian_eigen(m), NonHermitianError);
    ComplexMatrix4 big = ComplexMatrix4::identity();
    big(0, 3) = Complex(0, 1e-9);
    EXPECT_THROW(hermitian_eigen(big), NonHermitianError);
    // Asymmetry within tolerance is symmetrized away.
    big(0, 3) = Complex(0, 1e-11);
    EXPECT_NO_THROW(hermitian_eigen(big));
}

TEST(linalg, hermitian_eigen_reconstructs) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; k++) {
        ComplexMatrix4 h = random_hermitian4(rng);
        auto e = hermitian_eigen(h);
        for (std::size_t i = 1; i < 4; i++) {
            EXPECT_GE(e.values[i - 1], e.values[i]);
        }
        ComplexMatrix4 d = ComplexMatrix4::diagonal({e.values[0], e.values[1], e.values[2], e.values[3]});
        EXPECT_LE(max_abs_diff(e.vectors * d * e.vectors.adjoint(), h), 1e-10);
        EXPECT_LE(max_abs_diff(e.vectors.adjoint() * e.vectors, ComplexMatrix4::identity()), 1e-12);

        ComplexMatrix2 h2 = partial_trace(h, Subsystem::M);
        auto e2 = hermitian_eigen(h2);
        ComplexMatrix2 d2 = ComplexMatrix2::diagonal({e2.values[0], e2.values[1]});
        EXPECT_LE(max_abs_diff(e2.vectors * d2 * e2.vectors.adjoint(), h2), 1e-10);
        auto ref = oracle::hermitian_eigenvalues_2x2(h2);
        EXPECT_NEAR(e2.values[0], ref[0], 1e-12);
        EXPECT_NEAR(e2.values[1], ref[1], 1e-12);
    }
}

TEST(linalg, hermitian_eigen_degenerate) {
    auto e = hermitian_eigen(ComplexMatrix4::identity() * Complex(0.25));
    for (double v : e.values) {
        EXPECT_DOUBLE_EQ(v, 0.25);
    }
    auto s = hermitian_eigen(singlet().rho());
    EXPECT_NEAR(s.values[0], 1, 1e-15);
    EXPECT_NEAR(s.values[1], 0, 1e-15);
}

TEST(linalg, trace_norm_examples) {
    EXPECT_DOUBLE_EQ(trace_norm(ComplexMatrix2::diagonal({0.5, -0.5})), 1.0);
    EXPECT_DOUBLE_EQ(trace_norm(ComplexMatrix2::zero()), 0.0);
    // (1/2)(alpha + v.sigma): (|alpha + |v|| + |alpha - |v||)/2
    for (double alpha : {-0.7, -0.2, 0.0, 0.3, 0.9}) {
        Vec3 v{0.3, -0.4, 0.2};
        double len = norm(v);
        ComplexMatrix2 a =
            (pauli(0) * Complex(alpha) + pauli(1) * Complex(v[0]) + pauli(2) * Complex(v[1]) +
             pauli(3) * Complex(v[2])) *
            Complex(0.5);
        EXPECT_NEAR(trace_norm(a), (std::abs(alpha + len) + std::abs(alpha - len)) / 2, 1e-14);
        EXPECT_NEAR(trace_norm(a), std::max(std::abs(alpha), len), 1e-14);
    }
}

TEST(linalg, trace_norm_matches_oracle) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 500; k++) {
        ComplexMatrix2 a = random_matrix2(rng);
        EXPECT_NEAR(trace_norm(a), oracle::trace_norm_2x2(a), 1e-12);
        ComplexMatrix2 h = (a + a.adjoint()) * Complex(0.5);
        auto ev = oracle::hermitian_eigenvalues_2x2(h);
        EXPECT_NEAR(trace_norm(h), std::abs(ev[0]) + std::abs(ev[1]), 1e-12);
    }
}

TEST(linalg, svd3_examples) {
    auto id = svd3(RealMatrix3::identity());
    EXPECT_LE(max_abs_diff(id.left, RealMatrix3::identity()), 1e-15);
    EXPECT_LE(max_abs_diff(id.right, RealMatrix3::identity()), 1e-15);
    EXPECT_EQ(id.diag, (Vec3{1, 1, 1}));

    auto neg = svd3(RealMatrix3::identity() * -1.0);
    int negatives = 0;
    for (double d : neg.diag) {
        EXPECT_NEAR(std::abs(d), 1, 1e-15);
        negatives += d < 0;
    }
    EXPECT_EQ(negatives % 2, 1);
    EXPECT_NEAR(determinant(neg.left), 1, 1e-12);
    EXPECT_NEAR(determinant(neg.right), 1, 1e-12);

    auto perm = svd3(RealMatrix3::diagonal({0.2, 0.9, 0.5}));
    EXPECT_NEAR(std::abs(perm.diag[0]), 0.9, 1e-15);
    EXPECT_NEAR(std::abs(perm.diag[1]), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(perm.diag[2]), 0.2, 1e-15);
    EXPECT_NEAR(determinant(perm.left), 1, 1e-12);
    EXPECT_NEAR(determinant(perm.right), 1, 1e-12);
}

TEST(linalg, svd3_reconstructs) {
    std::mt19937_64 rng(23);
    auto check = [](const RealMatrix3 &t) {
        auto s = svd3(t);
        RealMatrix3 back = s.left * RealMatrix3::diagonal(s.diag) * s.right.transpose();
        EXPECT_LE(max_abs_diff(back, t), 1e-10);
        EXPECT_NEAR(determinant(s.left), 1, 1e-10);
        EXPECT_NEAR(determinant(s.right), 1, 1e-10);
        EXPECT_LE(max_abs_diff(s.left.transpose() * s.left, RealMatrix3::identity()), 1e-12);
        EXPECT_LE(max_abs_diff(s.right.transpose() * s.right, RealMatrix3::identity()), 1e-12);
        EXPECT_GE(std::abs(s.diag[0]), std::abs(s.diag[1]));
        EXPECT_GE(std::abs(s.diag[1]), std::abs(s.diag[2]));
    };
    for (int k = 0; k < 300; k++) {
        check(random_real3(rng));
    }
    // Rank-deficient inputs.
    RealMatrix3 rank1;
    rank1(0, 1) = 0.7;
    check(rank1);
    check(RealMatrix3::zero());
    RealMatrix3 rank2 = random_real3(rng);
    for (std::size_t i = 0; i < 3; i++) {
        rank2(i, 2) = rank2(i, 0) + rank2(i, 1);
    }
    check(rank2);
}

TEST(linalg, bloch_spinor_phase_convention) {
    auto v = bloch_spinor({0, 0, 1});
    EXPECT_EQ(v[0], Complex(1));
    EXPECT_EQ(v[1], Complex(0));
    auto h = bloch_spinor({0, 0, -1});
    EXPECT_NEAR(std::abs(h[0]), 0, 1e-15);
    EXPECT_NEAR(std::abs(h[1] - Complex(1)), 0, 1e-15);
    auto p = bloch_spinor({1, 0, 0});
    EXPECT_NEAR(std::abs(p[0] - Complex(1 / std::sqrt(2.0))), 0, 1e-15);
    EXPECT_NEAR(std::abs(p[1] - Complex(1 / std::sqrt(2.0))), 0, 1e-15);
}
