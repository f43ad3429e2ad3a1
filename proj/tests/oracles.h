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

#ifndef QDUALITY_TESTS_ORACLES_H
#define QDUALITY_TESTS_ORACLES_H

// Independent reference computations used only by tests. Nothing here calls
// the closed forms it is used to check.

#include <cmath>
#include <numbers>
#include <vector>

#include "qduality/knowledge.h"
#include "qduality/linalg.h"

namespace qduality::oracle {

/// Sum of singular values from the characteristic polynomial of a^dag a.
inline double trace_norm_2x2(const ComplexMatrix2 &a) {
    Complex b00 = std::conj(a(0, 0)) * a(0, 0) + std::conj(a(1, 0)) * a(1, 0);
    Complex b11 = std::conj(a(0, 1)) * a(0, 1) + std::conj(a(1, 1)) * a(1, 1);
    Complex b01 = std::conj(a(0, 0)) * a(0, 1) + std::conj(a(1, 0)) * a(1, 1);
    double tr = b00.real() + b11.real();
    double det = b00.real() * b11.real() - std::norm(b01);
    double disc = std::sqrt(std::max(tr * tr - 4 * det, 0.0));
    double s1 = std::sqrt(std::max((tr + disc) / 2, 0.0));
    double s2 = std::sqrt(std::max((tr - disc) / 2, 0.0));
    return s1 + s2;
}

/// Eigenvalues of a Hermitian 2x2 from the quadratic formula, descending.
inline std::array<double, 2> hermitian_eigenvalues_2x2(const ComplexMatrix2 &h) {
    double a = h(0, 0).real(), d = h(1, 1).real();
    double disc = std::sqrt((a - d) * (a - d) + 4 * std::norm(h(0, 1)));
    return {(a + d + disc) / 2, (a + d - disc) / 2};
}

inline std::vector<Vec3> fibonacci_sphere(std::size_t n) {
    std::vector<Vec3> pts;
    pts.reserve(n);
    const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
    for (std::size_t i = 0; i < n; i++) {
        double z = 1 - 2 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        double r = std::sqrt(1 - z * z);
        double phi = golden * static_cast<double>(i);
        pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
    return pts;
}

/// Points on a spherical cap of half-angle `radius` around `center`.
inline std::vector<Vec3> cap(const Vec3 &center, double radius, std::size_t n) {
    Vec3 c = center;
    double len = norm(c);
    c = {c[0] / len, c[1] / len, c[2] / len};
    Vec3 trial = std::abs(c[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 u = cross(c, trial);
    double lu = norm(u);
    u = {u[0] / lu, u[1] / lu, u[2] / lu};
    Vec3 v = cross(c, u);
    std::vector<Vec3> pts{c};
    const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
    for (std::size_t i = 1; i < n; i++) {
        double theta = radius * std::sqrt(static_cast<double>(i) / static_cast<double>(n - 1));
        double phi = golden * static_cast<double>(i);
        double st = std::sin(theta), ct = std::cos(theta);
        Vec3 p;
        for (std::size_t k = 0; k < 3; k++) {
            p[k] = ct * c[k] + st * (std::cos(phi) * u[k] + std::sin(phi) * v[k]);
        }
        pts.push_back(p);
    }
    return pts;
}

struct GridMax {
    double value = -1;
    Vec3 axis{0, 0, 1};
};

/// Maximum knowledge excess over meter axes: 2000-point Fibonacci grid plus
/// one refinement pass on a 2 degree cap (100 points) around the best point.
inline GridMax grid_max_excess(const TwoQubitState &s, const MeasurementAxis &pi_s, std::size_t grid = 2000) {
    GridMax best;
    auto consider = [&](const Vec3 &b) {
        double v = knowledge(s, MeasurementAxis(b), pi_s).excess;
        if (v > best.value) {
            best.value = v;
            best.axis = b;
        }
    };
    for (const auto &b : fibonacci_sphere(grid)) {
        consider(b);
    }
    for (const auto &b : cap(best.axis, 2 * std::numbers::pi / 180, 100)) {
        consider(b);
    }
    return best;
}

}  // namespace qduality::oracle

#endif
