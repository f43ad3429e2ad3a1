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

#include "qduality/harness.h"

#include <cmath>
#include <limits>
#include <utility>

#include "qduality/bell.h"
#include "qduality/errors.h"
#include "qduality/knowledge.h"

namespace qduality {

namespace {

void finish(DualityReport &r) {
    r.lhs = r.dk * r.dk + r.dk_prime * r.dk_prime;
    r.slack = r.rhs - r.lhs;
    r.holds = r.slack >= -kSlackTolerance;
    r.saturated = std::abs(r.slack) <= kSaturationTolerance;
}

void record(SweepSummary &sum, std::size_t trial, const DualityReport &r, const TwoQubitState &s) {
    if (sum.trials == 0 || r.slack < sum.min_slack) {
        sum.min_slack = r.slack;
        sum.worst_trial = trial;
        sum.worst = r;
        sum.worst_state = s.rho();
    }
    sum.trials++;
    sum.max_lhs = std::max(sum.max_lhs, r.lhs);
    if (!r.holds) {
        sum.violations++;
    }
    if (std::abs(r.slack) <= kSaturationTolerance) {
        sum.saturation_hits++;
    }
}

TwoQubitState sweep_state(std::mt19937_64 &rng, int rank) {
    return random_state(rng, rank);
}

std::pair<MeasurementAxis, MeasurementAxis> random_complementary_pair(std::mt19937_64 &rng) {
    while (true) {
        Vec3 a = random_unit_vector(rng);
        Vec3 b = random_unit_vector(rng);
        if (norm(cross(a, b)) > 1e-6) {
            return complementary_pair(a, b);
        }
    }
}

}  // namespace

DualityReport verify_duality(const TwoQubitState &s, const MeasurementAxis &a_s, const MeasurementAxis &a_s_prime,
                             const MeasurementAxis &b_m, const MeasurementAxis &b_m_prime, std::string descriptor) {
    if (!is_complementary(a_s, a_s_prime, kComplementarityTolerance)) {
        throw NotComplementaryError("measurements on S are not complementary");
    }
    DualityReport r;
    r.state = std::move(descriptor);
    r.a_s = a_s.direction();
    r.a_s_prime = a_s_prime.direction();
    r.b_m = b_m.direction();
    r.b_m_prime = b_m_prime.direction();
    r.dk = knowledge(s, b_m, a_s).excess;
    r.dk_prime = knowledge(s, b_m_prime, a_s_prime).excess;
    r.b_max = bell_max(s);
    r.rhs = 0.25 * r.b_max * r.b_max;
    finish(r);
    return r;
}

DualityReport saturation_search(const TwoQubitState &s, std::string descriptor) {
    NormalForm nf = normal_form(s);
    static constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
    std::optional<DualityReport> best;
    for (auto [i, j] : kPairs) {
        // The slot axes are rows of a rotation, hence exactly orthogonal up to rounding.
        auto [a, a_prime] = complementary_pair(nf.s_axis(i), nf.s_axis(j));
        DualityReport r = verify_duality(s, a, a_prime, optimal_meter_axis(s, a), optimal_meter_axis(s, a_prime),
                                         descriptor);
        if (!best || r.lhs > best->lhs + 1e-15) {
            best = std::move(r);
        }
    }
    return *best;
}

FilteredDualityReport filtered_duality(const TwoQubitState &s, const FilterOptions &options) {
    FilterOutcome f = filter_to_bell_diagonal(s, options);
    DualityReport r = saturation_search(f.state, "filtered");
    return {std::move(f), std::move(r)};
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

TwoQubitState sweep_state(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> rank(1, 4);
    return random_state(rng, rank(rng));
}

SweepSummary sweep_random(std::size_t trials, std::uint64_t seed, AxisMode mode, const TrialCallback &on_trial) {
    if (trials < 1) {
        throw BadParameterError("trials must be at least 1");
    }
    SweepSummary sum;
    for (std::size_t t = 0; t < trials; t++) {
        auto rng = trial_rng(seed, t);
        TwoQubitState s = sweep_state(rng, static_cast<int>(t % 4) + 1);
        auto [a, a_prime] = random_complementary_pair(rng);
        DualityReport r;
        if (mode == AxisMode::RandomAxes) {
            MeasurementAxis b(random_unit_vector(rng));
            MeasurementAxis b_prime(random_unit_vector(rng));
            r = verify_duality(s, a, a_prime, b, b_prime, "random#" + std::to_string(t));
        } else {
            r = verify_duality(s, a, a_prime, optimal_meter_axis(s, a), optimal_meter_axis(s, a_prime),
                               "random#" + std::to_string(t));
        }
        record(sum, t, r, s);
        if (on_trial) {
            on_trial(t, r);
        }
    }
    return sum;
}

DualityReport same_meter_report(const TwoQubitState &s, const MeasurementAxis &a_s, const MeasurementAxis &a_s_prime,
                                const MeasurementAxis &b_m, std::string descriptor) {
    if (!is_complementary(a_s, a_s_prime, kComplementarityTolerance)) {
        throw NotComplementaryError("measurements on S are not complementary");
    }
    DualityReport r;
    r.state = std::move(descriptor);
    r.a_s = a_s.direction();
    r.a_s_prime = a_s_prime.direction();
    r.b_m = b_m.direction();
    r.b_m_prime = b_m.direction();
    r.dk = knowledge(s, b_m, a_s).excess;
    r.dk_prime = knowledge(s, b_m, a_s_prime).excess;
    r.rhs = 1;
    finish(r);
    return r;
}

SweepSummary same_meter_sweep(std::size_t trials, std::uint64_t seed, const TrialCallback &on_trial) {
    if (trials < 1) {
        throw BadParameterError("trials must be at least 1");
    }
    SweepSummary sum;
    for (std::size_t t = 0; t < trials; t++) {
        auto rng = trial_rng(seed, t);
        TwoQubitState s = sweep_state(rng, static_cast<int>(t % 4) + 1);
        auto [a, a_prime] = random_complementary_pair(rng);
        // Alternate between a random shared meter and the one optimal for a.
        MeasurementAxis b = t % 2 == 0 ? MeasurementAxis(random_unit_vector(rng)) : optimal_meter_axis(s, a);
        DualityReport r = same_meter_report(s, a, a_prime, b, "random#" + std::to_string(t));
        record(sum, t, r, s);
        if (on_trial) {
            on_trial(t, r);
        }
    }
    return sum;
}

}  // namespace qduality
