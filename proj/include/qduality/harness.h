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

#ifndef QDUALITY_HARNESS_H
#define QDUALITY_HARNESS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "qduality/filtering.h"
#include "qduality/measurement.h"
#include "qduality/states.h"

namespace qduality {

inline constexpr double kSlackTolerance = 1e-9;
inline constexpr double kSaturationTolerance = 1e-6;

/// One evaluation of dK^2(b_M -> a_S) + dK^2(b'_M -> a'_S) <= (B_max/2)^2.
struct DualityReport {
    std::string state;  ///< free-form descriptor
    Vec3 a_s{};
    Vec3 a_s_prime{};
    Vec3 b_m{};
    Vec3 b_m_prime{};
    double dk = 0;
    double dk_prime = 0;
    double lhs = 0;
    double b_max = 0;
    double rhs = 0;
    double slack = 0;
    bool holds = false;
    bool saturated = false;
};

/// Throws NotComplementaryError unless (a_s, a_s_prime) is complementary within 1e-9.
/// b_max is the bell_max of `s` itself.
DualityReport verify_duality(const TwoQubitState &s, const MeasurementAxis &a_s, const MeasurementAxis &a_s_prime,
                             const MeasurementAxis &b_m, const MeasurementAxis &b_m_prime,
                             std::string descriptor = {});

/// Measures S along the normal-form correlation axes and M along the matching
/// optimal meter axes. Saturates for states with vanishing local Bloch vector
/// of S; for other states it reports the best pair of normal-form axes.
DualityReport saturation_search(const TwoQubitState &s, std::string descriptor = {});

struct FilteredDualityReport {
    FilterOutcome filter;
    DualityReport report;
};

/// Filters to Bell-diagonal form, then runs saturation_search on the result.
FilteredDualityReport filtered_duality(const TwoQubitState &s, const FilterOptions &options = {});

struct SweepSummary {
    std::size_t trials = 0;
    std::size_t violations = 0;
    double min_slack = 0;
    double max_lhs = 0;
    std::size_t saturation_hits = 0;
    std::size_t worst_trial = 0;
    /// Report with the smallest slack, for reproducing failures.
    std::optional<DualityReport> worst;
    ComplexMatrix4 worst_state;
};

enum class AxisMode { RandomAxes, OptimalAxes };

/// Engine for one trial, seeded from (seed, trial index) only.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Rank mix of the sweeps: ranks 1..4 in equal proportion.
TwoQubitState sweep_state(std::mt19937_64 &rng);

using TrialCallback = std::function<void(std::size_t trial, const DualityReport &)>;

SweepSummary sweep_random(std::size_t trials, std::uint64_t seed, AxisMode mode,
                          const TrialCallback &on_trial = {});

/// Same-meter duality: one meter axis shared by both complementary
/// measurements, dK^2 + dK'^2 <= 1. The report's rhs is 1 and b_max is unused.
DualityReport same_meter_report(const TwoQubitState &s, const MeasurementAxis &a_s, const MeasurementAxis &a_s_prime,
                                const MeasurementAxis &b_m, std::string descriptor = {});

SweepSummary same_meter_sweep(std::size_t trials, std::uint64_t seed, const TrialCallback &on_trial = {});

}  // namespace qduality

#endif
