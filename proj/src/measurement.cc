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

#include "qduality/measurement.h"

#include <cmath>

#include "qduality/errors.h"

namespace qduality {

MeasurementAxis::MeasurementAxis(const Vec3 &direction) {
    double len = norm(direction);
    if (!std::isfinite(len) || len < 1e-12) {
        throw BadParameterError("measurement axis must be a non-zero finite vector");
    }
    a_ = {direction[0] / len, direction[1] / len, direction[2] / len};
}

std::array<Complex, 2> MeasurementAxis::outcome_vector(int outcome) const {
    if (outcome == 0) {
        return bloch_spinor(a_);
    }
    return bloch_spinor({-a_[0], -a_[1], -a_[2]});
}

std::pair<ComplexMatrix2, ComplexMatrix2> projectors(const MeasurementAxis &ax) {
    ComplexMatrix2 along = pauli(1) * Complex(ax[0]) + pauli(2) * Complex(ax[1]) + pauli(3) * Complex(ax[2]);
    ComplexMatrix2 half = pauli(0) * Complex(0.5);
    return {half + along * Complex(0.5), half - along * Complex(0.5)};
}

bool is_complementary(const MeasurementAxis &ax1, const MeasurementAxis &ax2, double tol) {
    auto [p0, p1] = projectors(ax1);
    auto [q0, q1] = projectors(ax2);
    double overlap = (p0 * q0).trace().real();
    return std::abs(overlap - 0.5) <= tol;
}

namespace {

// <x|_S rho |y>_S as an operator on M.
ComplexMatrix2 s_block(const ComplexMatrix4 &rho, const std::array<Complex, 2> &x, const std::array<Complex, 2> &y) {
    ComplexMatrix2 out;
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            Complex coeff = std::conj(x[i]) * y[j];
            for (std::size_t k = 0; k < 2; k++) {
                for (std::size_t l = 0; l < 2; l++) {
                    out(k, l) += coeff * rho(2 * i + k, 2 * j + l);
                }
            }
        }
    }
    return out;
}

}  // namespace

ConditionalDecomposition decompose(const TwoQubitState &s, const MeasurementAxis &pi_s) {
    ConditionalDecomposition d;
    d.psi = pi_s.outcome_vector(0);
    d.psi_perp = pi_s.outcome_vector(1);

    ComplexMatrix2 a = s_block(s.rho(), d.psi, d.psi);
    ComplexMatrix2 b = s_block(s.rho(), d.psi_perp, d.psi_perp);
    ComplexMatrix2 coherence = s_block(s.rho(), d.psi, d.psi_perp);

    d.w = std::clamp(a.trace().real(), 0.0, 1.0);
    d.w_perp = 1 - d.w;
    const ComplexMatrix2 placeholder = pauli(0) * Complex(0.5);
    d.rho_m = d.w > kZeroProbability ? a * Complex(1 / d.w) : placeholder;
    d.rho_m_perp = d.w_perp > kZeroProbability ? b * Complex(1 / d.w_perp) : placeholder;
    if (d.w > 0 && d.w_perp > 0) {
        d.chi_m = coherence * Complex(1 / std::sqrt(d.w * d.w_perp));
    }
    return d;
}

ComplexMatrix4 ConditionalDecomposition::reconstruct() const {
    ComplexMatrix4 rho = tensor_product(outer(psi, psi), rho_m) * Complex(w);
    rho += tensor_product(outer(psi_perp, psi_perp), rho_m_perp) * Complex(w_perp);
    ComplexMatrix4 cross = tensor_product(outer(psi, psi_perp), chi_m) * Complex(std::sqrt(w * w_perp));
    rho += cross + cross.adjoint();
    return rho;
}

OutcomeStatistics outcome_statistics(const ConditionalDecomposition &d, const MeasurementAxis &pi_m) {
    auto [p0, p1] = projectors(pi_m);
    const std::array<const ComplexMatrix2 *, 2> proj{&p0, &p1};
    OutcomeStatistics st;
    for (std::size_t i = 0; i < 2; i++) {
        MeterOutcome &o = st.outcomes[i];
        o.p = (*proj[i] * d.rho_m).trace().real();
        o.p_perp = (*proj[i] * d.rho_m_perp).trace().real();
        o.c = (*proj[i] * d.chi_m).trace();
        o.pi = d.w * o.p + d.w_perp * o.p_perp;
        if (o.pi <= kZeroProbability) {
            o.zero_probability = true;
            continue;
        }
        o.w = d.w * o.p / o.pi;
        o.w_perp = d.w_perp * o.p_perp / o.pi;
    }
    return st;
}

std::pair<MeasurementAxis, MeasurementAxis> complementary_pair(const Vec3 &first, const Vec3 &second) {
    MeasurementAxis a(first);
    const Vec3 &u = a.direction();
    double proj = dot(u, second);
    Vec3 rest{second[0] - proj * u[0], second[1] - proj * u[1], second[2] - proj * u[2]};
    if (norm(rest) < 1e-9) {
        throw BadParameterError("directions are parallel; cannot build a complementary pair");
    }
    return {a, MeasurementAxis(rest)};
}

}  // namespace qduality
