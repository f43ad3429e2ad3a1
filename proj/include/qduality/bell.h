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

#ifndef QDUALITY_BELL_H
#define QDUALITY_BELL_H

#include <array>

#include "qduality/linalg.h"
#include "qduality/measurement.h"
#include "qduality/states.h"

namespace qduality {

/// Maximal CHSH factor 2 sqrt(u1 + u2), u1 >= u2 the two largest eigenvalues of
/// T^T T. Lies in [0, 2 sqrt2]; a value above 2 means the state violates a Bell
/// inequality.
double bell_max(const TwoQubitState &s);
double bell_max(const RealMatrix3 &t);

/// Eigenvalues of a real symmetric 3x3 matrix, descending.
std::array<double, 3> symmetric_eigenvalues(const RealMatrix3 &a);

/// Local-unitary normal form of a two-qubit state: after applying (u_s, u_m)
/// the correlation matrix is diagonal with the dominant entry at (3,3), the
/// second largest at (1,1) and the smallest at (2,2).
struct NormalForm {
    /// Diagonal of the rotated correlation matrix in slot order (t33, t11, t22),
    /// so |tbar[0]| >= |tbar[1]| >= |tbar[2]|. Entries can be negative.
    std::array<double, 3> tbar{};
    Vec3 nbar{};
    Vec3 mbar{};
    ComplexMatrix2 u_s;
    ComplexMatrix2 u_m;
    RealMatrix3 o_s;  ///< SO(3) image of u_s
    RealMatrix3 o_m;  ///< SO(3) image of u_m

    /// Axis on S, in the frame of the original state, carrying the correlation
    /// of the given slot (0 = strongest, 1 = second, 2 = weakest).
    Vec3 s_axis(std::size_t slot) const;
    Vec3 m_axis(std::size_t slot) const;

    /// Correlation matrix in the normal-form frame.
    RealMatrix3 tbar_matrix() const;
};

NormalForm normal_form(const TwoQubitState &s);
NormalForm normal_form(const BlochForm &b);

/// Z-Y-Z Euler angles with alpha in [0, 2pi), beta in [0, pi), gamma in [0, 2pi).
struct EulerAngles {
    double alpha = 0;
    double beta = 0;
    double gamma = 0;

    bool in_range() const;
};

/// The rotation O(alpha, beta, gamma) = Rz(alpha) Ry(beta) Rz(gamma).
RealMatrix3 euler_rotation(const EulerAngles &e);

struct ExcessBounds {
    double bound1 = 0;  ///< upper bound on dD^2 along z for T = O tbar
    double bound2 = 0;  ///< upper bound on dD^2 along the complementary axis
    bool second_is_y = false;  ///< true when |t22| > |t11| and the y axis is used
};

/// Upper bounds on the squared distinguishability excesses of a state whose
/// correlation matrix is O(e) diag(t11, t22, t33), for measurements on S along z
/// and along x (y when t22^2 > t11^2). `tbar` uses slot order (t33, t11, t22)
/// and must have |t33| dominant; otherwise BadOrderingError.
ExcessBounds rotated_excess_bounds(const std::array<double, 3> &tbar, const EulerAngles &e);

}  // namespace qduality

#endif
