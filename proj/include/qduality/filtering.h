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

#ifndef QDUALITY_FILTERING_H
#define QDUALITY_FILTERING_H

#include <cstddef>
#include <vector>

#include "qduality/states.h"

namespace qduality {

struct FilterOutcome {
    TwoQubitState state;  ///< Bell-diagonal when converged
    LocalFilter total_filter_s;
    LocalFilter total_filter_m;
    double success_prob = 1;
    std::size_t iterations = 0;
    bool converged = false;
    double bell_before = 0;
    double bell_after = 0;
    /// bell_max after every completed iteration, starting with the input.
    std::vector<double> bell_history;
};

struct FilterOptions {
    double tol = 1e-8;
    std::size_t max_iter = 200;
};

/// Brings a state with full-rank marginals to Bell-diagonal form by single-copy
/// local filtering.
///
/// The first iterations filter S by rho_S^{-1/2}, then M by the updated
/// rho_M^{-1/2}. That alternating scheme converges linearly and slows down
/// badly near rank-deficient states, so later iterations take damped Newton
/// steps on log Tr[(e^{x.sigma} (x) e^{y.sigma}) rho], whose minimum is the same
/// Bell-diagonal form. Every filter is rescaled to unit maximal singular value.
/// The loop stops once |n| + |m| <= tol. A final local unitary diagonalizes
/// the correlation matrix; it is folded into the reported total filters.
///
/// Throws SingularMarginalError if a marginal has an eigenvalue <= 1e-9. When
/// max_iter is exhausted the partial result is returned with converged = false.
FilterOutcome filter_to_bell_diagonal(const TwoQubitState &s, const FilterOptions &options = {});

struct MonotonicityReport {
    double bell_before = 0;
    double bell_after = 0;
    double success_prob = 0;
    bool holds = false;  ///< bell_after >= bell_before - 1e-9
};

MonotonicityReport verify_filter_monotonicity(const TwoQubitState &s, const FilterOptions &options = {});

}  // namespace qduality

#endif
