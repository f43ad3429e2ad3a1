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

#include "qduality/bell.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qduality/errors.h"

namespace qduality {

std::array<double, 3> symmetric_eigenvalues(const RealMatrix3 &a) {
    // Cyclic Jacobi. The trigonometric closed form loses about half the digits
    // near degenerate eigenvalues, which are common here (pure states).
    RealMatrix3 m = (a + a.transpose()) * 0.5;
    for (int sweep = 0; sweep < 50; sweep++) {
        double off = m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(1, 2) * m(1, 2);
        if (off <= 1e-36 * (m(0, 0) * m(0, 0) + m(1, 1) * m(1, 1) + m(2, 2) * m(2, 2)) || off == 0) {
            break;
        }
        for (std::size_t p = 0; p < 2; p++) {
            for (std::size_t q = p + 1; q < 3; q++) {
                if (m(p, q) == 0) {
                    continue;
                }
                double theta = (m(q, q) - m(p, p)) / (2 * m(p, q));
                double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                RealMatrix3 g = RealMatrix3::identity();
                g(p, p) = c;
                g(q, q) = c;
                g(p, q) = s;
                g(q, p) = -s;
                m = g.transpose() * m * g;
                m(p, q) = m(q, p) = 0;
            }
        }
    }
    std::array<double, 3> out{m(0, 0), m(1, 1), m(2, 2)};
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double bell_max(const RealMatrix3 &t) {
    RealMatrix3 tt = t.transpose() * t;
    auto u = symmetric_eigenvalues(tt);
    double s = std::max(u[0], 0.0) + std::max(u[1], 0.0);
    return 2 * std::sqrt(s);
}

double bell_max(const TwoQubitState &s) {
    return bell_max(bloch_decompose(s).t);
}

Vec3 NormalForm::s_axis(std::size_t slot) const {
    static constexpr std::array<std::size_t, 3> kRow{2, 0, 1};
    return row(o_s, kRow.at(slot));
}

Vec3 NormalForm::m_axis(std::size_t slot) const {
    static constexpr std::array<std::size_t, 3> kRow{2, 0, 1};
    return row(o_m, kRow.at(slot));
}

RealMatrix3 NormalForm::tbar_matrix() const {
    return RealMatrix3::diagonal({tbar[1], tbar[2], tbar[0]});
}

NormalForm normal_form(const BlochForm &b) {
    SignedSvd3 svd = svd3(b.t);
    // Cyclic permutation e1 -> e3, e2 -> e1, e3 -> e2 places the singular
    // values (descending) into positions (3,3), (1,1), (2,2).
    RealMatrix3 perm;
    perm(2, 0) = 1;
    perm(0, 1) = 1;
    perm(1, 2) = 1;

    NormalForm nf;
    nf.o_s = perm * svd.left.transpose();
    nf.o_m = perm * svd.right.transpose();
    nf.tbar = {svd.diag[0], svd.diag[1], svd.diag[2]};
    nf.u_s = unitary_of_rotation(nf.o_s);
    nf.u_m = unitary_of_rotation(nf.o_m);
    nf.nbar = nf.o_s * b.n;
    nf.mbar = nf.o_m * b.m;
    return nf;
}

NormalForm normal_form(const TwoQubitState &s) {
    return normal_form(bloch_decompose(s));
}

bool EulerAngles::in_range() const {
    const double two_pi = 2 * std::numbers::pi;
    return alpha >= 0 && alpha < two_pi && beta >= 0 && beta < std::numbers::pi && gamma >= 0 && gamma < two_pi;
}

RealMatrix3 euler_rotation(const EulerAngles &e) {
    const double ca = std::cos(e.alpha), sa = std::sin(e.alpha);
    const double cb = std::cos(e.beta), sb = std::sin(e.beta);
    const double cg = std::cos(e.gamma), sg = std::sin(e.gamma);
    RealMatrix3 o;
    o(0, 0) = ca * cb * cg - sa * sg;
    o(0, 1) = -ca * cb * sg - sa * cg;
    o(0, 2) = ca * sb;
    o(1, 0) = sa * cb * cg + ca * sg;
    o(1, 1) = -sa * cb * sg + ca * cg;
    o(1, 2) = sa * sb;
    o(2, 0) = -sb * cg;
    o(2, 1) = sb * sg;
    o(2, 2) = cb;
    return o;
}

ExcessBounds rotated_excess_bounds(const std::array<double, 3> &tbar, const EulerAngles &e) {
    const double t33 = tbar[0] * tbar[0];
    const double t11 = tbar[1] * tbar[1];
    const double t22 = tbar[2] * tbar[2];
    if (t33 < t11 * (1 - 1e-12) || t33 < t22 * (1 - 1e-12)) {
        throw BadOrderingError("the (3,3) correlation must dominate the other two");
    }
    const double ca = std::cos(e.alpha), sa = std::sin(e.alpha);
    const double cb = std::cos(e.beta), sb = std::sin(e.beta);
    const double cg = std::cos(e.gamma), sg = std::sin(e.gamma);

    ExcessBounds out;
    // Squared norm of the third row of O diag(t11, t22, t33).
    out.bound1 = t33 * cb * cb + sb * sb * (t11 * cg * cg + t22 * sg * sg);
    if (t11 >= t22) {
        double a = ca * cb * cg - sa * sg;
        double b = ca * cb * sg + sa * cg;
        out.bound2 = t11 * a * a + t22 * b * b + t33 * ca * ca * sb * sb;
    } else {
        double a = sa * cb * cg + ca * sg;
        double b = -sa * cb * sg + ca * cg;
        out.bound2 = t11 * a * a + t22 * b * b + t33 * sa * sa * sb * sb;
        out.second_is_y = true;
    }
    return out;
}

}  // namespace qduality
