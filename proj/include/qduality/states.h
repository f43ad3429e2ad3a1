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

#ifndef QDUALITY_STATES_H
#define QDUALITY_STATES_H

#include <array>
#include <cstdint>
#include <random>

#include "qduality/linalg.h"

namespace qduality {

/// Density matrix of the S (x) M system in the basis |VV>, |VH>, |HV>, |HH>,
/// S first, with |V> the +1 eigenvector of sigma_3.
///
/// Instances can only be produced by `validate` (or helpers that call it), so
/// a TwoQubitState is always Hermitian, unit-trace and positive semidefinite
/// to within 1e-10.
class TwoQubitState {
   public:
    const ComplexMatrix4 &rho() const {
        return rho_;
    }
    ComplexMatrix2 marginal(Subsystem keep) const;
    double purity() const;

    friend TwoQubitState validate(const ComplexMatrix4 &rho);

   private:
    explicit TwoQubitState(const ComplexMatrix4 &rho) : rho_(rho) {
    }
    ComplexMatrix4 rho_;
};

/// Checks Hermiticity, unit trace and positivity (tolerance 1e-10). Slightly
/// negative eigenvalues in [-1e-10, 0) are clamped to zero and the result
/// renormalized. Throws NotDensityMatrixError otherwise.
TwoQubitState validate(const ComplexMatrix4 &rho);

/// Pauli expansion: rho = (1/4)(1 + n.sigma (x) 1 + 1 (x) m.sigma + t_kl sigma_k (x) sigma_l).
struct BlochForm {
    Vec3 n{};         ///< Bloch vector of S
    Vec3 m{};         ///< Bloch vector of M
    RealMatrix3 t{};  ///< correlation matrix
};

BlochForm bloch_decompose(const TwoQubitState &s);
BlochForm bloch_decompose(const ComplexMatrix4 &rho);
TwoQubitState bloch_compose(const BlochForm &b);

/// Non-unitary local operator with f^dag f <= 1.
class LocalFilter {
   public:
    /// Throws BadParameterError if the largest eigenvalue of f^dag f exceeds 1 + 1e-10.
    explicit LocalFilter(const ComplexMatrix2 &f);
    LocalFilter() : f_(ComplexMatrix2::identity()) {
    }

    /// Rescales an invertible operator to unit maximal singular value.
    static LocalFilter normalized(const ComplexMatrix2 &f);

    const ComplexMatrix2 &matrix() const {
        return f_;
    }

   private:
    ComplexMatrix2 f_;
};

double max_singular_value(const ComplexMatrix2 &a);

// Bell states, with |Psi+-> = (|VH> +- |HV>)/sqrt2 and |Phi+-> = (|VV> +- |HH>)/sqrt2.
enum class BellState { PsiMinus, PhiMinus, PsiPlus, PhiPlus };
std::array<Complex, 4> bell_vector(BellState which);
ComplexMatrix4 bell_projector(BellState which);

/// p[0]|Psi-><Psi-| + p[1]|Phi-><Phi-| + p[2]|Psi+><Psi+| + p[3]|Phi+><Phi+|.
/// Throws BadProbabilitiesError unless p >= 0 and sum(p) = 1 within 1e-12.
TwoQubitState bell_mixture(const std::array<double, 4> &p);

/// Bell mixture with weights (1 +- R1)(1 +- R2)/4 obtained by depolarizing the
/// singlet: random bit flip on M with probability (1 - R1)/2 and a random
/// pi phase shift on M with probability (1 - R2)/2.
std::array<double, 4> depolarized_weights(double r1, double r2);
TwoQubitState depolarized_state(double r1, double r2);

/// R |Psi-><Psi-| + (1 - R)/4 identity.
TwoQubitState werner(double r);

/// sqrt(lambda)|VH> - sqrt(1 - lambda)|HV>, lambda in [0, 1].
TwoQubitState schmidt_state(double lambda);

/// Populations <B_k|rho|B_k> in the order Psi-, Phi-, Psi+, Phi+.
std::array<double, 4> bell_weights(const TwoQubitState &s);

/// Smallest eigenvalue of the partial transpose on M; negative iff entangled.
double partial_transpose_min_eigenvalue(const TwoQubitState &s);

TwoQubitState pure_state(const std::array<Complex, 4> &psi);

TwoQubitState singlet();
TwoQubitState maximally_mixed();

/// G G^dag / Tr(G G^dag) with G a 4 x rank matrix of standard complex Gaussians.
TwoQubitState random_state(std::mt19937_64 &rng, int rank);
TwoQubitState random_state(std::uint64_t seed, int rank);

/// Unit vector drawn uniformly from the sphere.
Vec3 random_unit_vector(std::mt19937_64 &rng);

/// Haar-ish random SU(2) element (normalized Gaussian quaternion).
ComplexMatrix2 random_unitary(std::mt19937_64 &rng);

/// Throws NotUnitaryError unless u^dag u = 1 within 1e-10.
void check_unitary(const ComplexMatrix2 &u);

/// (u_S (x) u_M) rho (u_S (x) u_M)^dag.
TwoQubitState apply_local_unitary(const TwoQubitState &s, const ComplexMatrix2 &u_s, const ComplexMatrix2 &u_m);

struct FilteredState {
    TwoQubitState state;
    double success_prob;
};

/// Normalized (F_S (x) F_M) rho (F_S (x) F_M)^dag and its trace before
/// normalization. Throws ZeroProbabilityError when that trace is below 1e-14.
FilteredState apply_local_filter(const TwoQubitState &s, const LocalFilter &f_s, const LocalFilter &f_m);

/// The rotation O with u (v.sigma) u^dag = (O v).sigma.
RealMatrix3 rotation_of_unitary(const ComplexMatrix2 &u);

/// SU(2) lift of a proper rotation, choosing the rotation angle in [0, pi].
ComplexMatrix2 unitary_of_rotation(const RealMatrix3 &o);

}  // namespace qduality

#endif
