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

#include "qduality/knowledge.h"

#include <algorithm>
#include <cmath>

namespace qduality {

namespace {

Vec3 correlated_meter_vector(const BlochForm &b, const Vec3 &a) {
    // T^T a
    Vec3 v{};
    for (std::size_t l = 0; l < 3; l++) {
        for (std::size_t k = 0; k < 3; k++) {
            v[l] += b.t(k, l) * a[k];
        }
    }
    return v;
}

}  // namespace

double apriori_knowledge(const TwoQubitState &s, const MeasurementAxis &pi_s) {
    auto d = decompose(s, pi_s);
    return std::abs(d.w - d.w_perp);
}

KnowledgeResult knowledge(const TwoQubitState &s, const MeasurementAxis &pi_m, const MeasurementAxis &pi_s) {
    auto d = decompose(s, pi_s);
    auto stats = outcome_statistics(d, pi_m);
    KnowledgeResult r;
    r.apriori = std::abs(d.w - d.w_perp);
    for (const auto &o : stats.outcomes) {
        if (o.zero_probability) {
            continue;
        }
        r.knowledge += o.pi * std::abs(o.w - o.w_perp);
    }
    r.knowledge = std::min(r.knowledge, 1.0);
    // K >= P holds exactly; only rounding can push the difference negative.
    r.excess = std::max(r.knowledge - r.apriori, 0.0);
    r.knowledge = r.apriori + r.excess;
    return r;
}

double distinguishability_excess(const BlochForm &b, const Vec3 &axis) {
    double along = std::abs(dot(b.n, axis));
    double corr = norm(correlated_meter_vector(b, axis));
    return std::max(along, corr) - along;
}

double distinguishability_excess(const TwoQubitState &s, const MeasurementAxis &pi_s) {
    return distinguishability_excess(bloch_decompose(s), pi_s.direction());
}

double distinguishability_excess_trace_norm(const TwoQubitState &s, const MeasurementAxis &pi_s) {
    auto d = decompose(s, pi_s);
    ComplexMatrix2 diff = d.rho_m * Complex(d.w) - d.rho_m_perp * Complex(d.w_perp);
    return trace_norm(diff) - std::abs(d.w - d.w_perp);
}

MeasurementAxis optimal_meter_axis(const TwoQubitState &s, const MeasurementAxis &pi_s) {
    BlochForm b = bloch_decompose(s);
    Vec3 v = correlated_meter_vector(b, pi_s.direction());
    double len = norm(v);
    if (len < 1e-12 || len <= std::abs(dot(b.n, pi_s.direction()))) {
        return MeasurementAxis::z();
    }
    return MeasurementAxis(v);
}

}  // namespace qduality
