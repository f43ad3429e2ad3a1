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

#ifndef QDUALITY_KNOWLEDGE_H
#define QDUALITY_KNOWLEDGE_H

#include "qduality/measurement.h"
#include "qduality/states.h"

namespace qduality {

/// Knowledge about the outcome of a measurement on S, expressed as the
/// fractional excess of right over wrong maximum-likelihood guesses.
struct KnowledgeResult {
    double apriori = 0;    ///< |w - w_perp|, no meter measurement
    double knowledge = 0;  ///< sum_i pi_i |w_i - w_i_perp|
    double excess = 0;     ///< knowledge - apriori
};

/// |w - w_perp| = |n.a|.
double apriori_knowledge(const TwoQubitState &s, const MeasurementAxis &pi_s);

/// Knowledge about `pi_s` gained by measuring `pi_m` on the meter.
KnowledgeResult knowledge(const TwoQubitState &s, const MeasurementAxis &pi_m, const MeasurementAxis &pi_s);

/// Largest knowledge excess over all meter measurements:
///   max(|n.a|, |T^T a|) - |n.a|
double distinguishability_excess(const TwoQubitState &s, const MeasurementAxis &pi_s);
double distinguishability_excess(const BlochForm &b, const Vec3 &axis);

/// The same quantity evaluated literally as Tr_M|w rho_M - w_perp rho_M_perp| - |w - w_perp|.
double distinguishability_excess_trace_norm(const TwoQubitState &s, const MeasurementAxis &pi_s);

/// Meter axis attaining the distinguishability excess, T^T a / |T^T a|. Falls
/// back to z when no meter axis gives a positive excess.
MeasurementAxis optimal_meter_axis(const TwoQubitState &s, const MeasurementAxis &pi_s);

}  // namespace qduality

#endif
