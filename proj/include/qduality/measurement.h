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

#ifndef QDUALITY_MEASUREMENT_H
#define QDUALITY_MEASUREMENT_H

#include <array>
#include <utility>

#include "qduality/linalg.h"
#include "qduality/states.h"

namespace qduality {

/// Two-outcome projective qubit measurement given by its Bloch axis. Outcome 0
/// is the projector (1 + a.sigma)/2.
class MeasurementAxis {
   public:
    /// Normalizes `direction`; throws BadParameterError for a zero or
    /// non-finite vector.
    explicit MeasurementAxis(const Vec3 &direction);

    static MeasurementAxis x() {
        return MeasurementAxis({1, 0, 0});
    }
    static MeasurementAxis y() {
        return MeasurementAxis({0, 1, 0});
    }
    static MeasurementAxis z() {
        return MeasurementAxis({0, 0, 1});
    }

    const Vec3 &direction() const {
        return a_;
    }
    double operator[](std::size_t k) const {
        return a_[k];
    }

    /// Eigenvector for outcome 0 (resp. 1), first non-negligible component real positive.
    std::array<Complex, 2> outcome_vector(int outcome) const;

   private:
    Vec3 a_;
};

std::pair<ComplexMatrix2, ComplexMatrix2> projectors(const MeasurementAxis &ax);

inline constexpr double kComplementarityTolerance = 1e-9;

/// |Tr(P0 P0') - 1/2| <= tol, i.e. |a1.a2| <= 2 tol.
bool is_complementary(const MeasurementAxis &ax1, const MeasurementAxis &ax2,
                      double tol = kComplementarityTolerance);

/// Expansion of rho_SM relative to a measurement on S:
///
///   rho = w |Psi><Psi| (x) rho_M + w_perp |Psi_perp><Psi_perp| (x) rho_M_perp
///         + sqrt(w w_perp) (|Psi><Psi_perp| (x) chi_M + h.c.)
///
/// When one weight vanishes, its meter state is the placeholder 1/2 and chi_M = 0.
struct ConditionalDecomposition {
    double w = 0;
    double w_perp = 0;
    ComplexMatrix2 rho_m;
    ComplexMatrix2 rho_m_perp;
    ComplexMatrix2 chi_m;
    std::array<Complex, 2> psi;
    std::array<Complex, 2> psi_perp;

    /// Reassembles rho_SM from the expansion above.
    ComplexMatrix4 reconstruct() const;
};

ConditionalDecomposition decompose(const TwoQubitState &s, const MeasurementAxis &pi_s);

inline constexpr double kZeroProbability = 1e-14;

struct MeterOutcome {
    double pi = 0;      ///< probability of the meter outcome
    double p = 0;       ///< Tr(Pi_i rho_M)
    double p_perp = 0;  ///< Tr(Pi_i rho_M_perp)
    Complex c;          ///< Tr(Pi_i chi_M)
    double w = 0;       ///< posterior weight of outcome 0 on S
    double w_perp = 0;  ///< posterior weight of outcome 1 on S
    bool zero_probability = false;
};

struct OutcomeStatistics {
    std::array<MeterOutcome, 2> outcomes;
};

OutcomeStatistics outcome_statistics(const ConditionalDecomposition &d, const MeasurementAxis &pi_m);

/// Orthonormal pair (a, a') built from two directions by Gram-Schmidt.
std::pair<MeasurementAxis, MeasurementAxis> complementary_pair(const Vec3 &first, const Vec3 &second);

}  // namespace qduality

#endif
