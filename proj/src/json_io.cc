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

#include "qduality/json_io.h"

#include <fstream>
#include <sstream>

#include "qduality/errors.h"

namespace qduality {

namespace {

template <std::size_t N>
json complex_matrix_to_json(const SquareMatrix<Complex, N> &m) {
    json re = json::array();
    json im = json::array();
    for (std::size_t r = 0; r < N; r++) {
        json re_row = json::array();
        json im_row = json::array();
        for (std::size_t c = 0; c < N; c++) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return {{"re", std::move(re)}, {"im", std::move(im)}};
}

void read_part(const json &j, const char *key, ComplexMatrix4 &m, bool imaginary) {
    if (!j.contains(key)) {
        throw FormatError(std::string("state is missing field '") + key + "'");
    }
    const json &rows = j.at(key);
    if (!rows.is_array() || rows.size() != 4) {
        throw FormatError(std::string("field '") + key + "' must be a 4x4 array");
    }
    for (std::size_t r = 0; r < 4; r++) {
        const json &cells = rows[r];
        if (!cells.is_array() || cells.size() != 4) {
            throw FormatError(std::string("field '") + key + "' must be a 4x4 array");
        }
        for (std::size_t c = 0; c < 4; c++) {
            if (!cells[c].is_number()) {
                throw FormatError(std::string("field '") + key + "' has a non-numeric entry");
            }
            double x = cells[c].get<double>();
            if (imaginary) {
                m(r, c).imag(x);
            } else {
                m(r, c).real(x);
            }
        }
    }
}

}  // namespace

json matrix_to_json(const ComplexMatrix4 &m) {
    return complex_matrix_to_json(m);
}

json matrix_to_json(const ComplexMatrix2 &m) {
    return complex_matrix_to_json(m);
}

json state_to_json(const TwoQubitState &s) {
    return matrix_to_json(s.rho());
}

TwoQubitState state_from_json(const json &j) {
    if (!j.is_object()) {
        throw FormatError("state must be a JSON object with fields re and im");
    }
    ComplexMatrix4 m;
    read_part(j, "re", m, false);
    read_part(j, "im", m, true);
    return validate(m);
}

TwoQubitState load_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open state file '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw FormatError("state file '" + path + "' is not valid JSON: " + e.what());
    }
    return state_from_json(j);
}

json axis_to_json(const MeasurementAxis &a) {
    return to_json(a.direction());
}

MeasurementAxis axis_from_json(const json &j) {
    if (!j.is_array() || j.size() != 3) {
        throw FormatError("axis must be an array of three numbers");
    }
    Vec3 v;
    for (std::size_t k = 0; k < 3; k++) {
        if (!j[k].is_number()) {
            throw FormatError("axis must be an array of three numbers");
        }
        v[k] = j[k].get<double>();
    }
    return MeasurementAxis(v);
}

json to_json(const Vec3 &v) {
    return json::array({v[0], v[1], v[2]});
}

json to_json(const RealMatrix3 &m) {
    json out = json::array();
    for (std::size_t r = 0; r < 3; r++) {
        out.push_back(to_json(row(m, r)));
    }
    return out;
}

json to_json(const BlochForm &b) {
    return {{"n", to_json(b.n)}, {"m", to_json(b.m)}, {"T", to_json(b.t)}};
}

json to_json(const NormalForm &nf) {
    return {
        {"tbar", {{"t33", nf.tbar[0]}, {"t11", nf.tbar[1]}, {"t22", nf.tbar[2]}}},
        {"nbar", to_json(nf.nbar)},
        {"mbar", to_json(nf.mbar)},
        {"u_s", matrix_to_json(nf.u_s)},
        {"u_m", matrix_to_json(nf.u_m)},
    };
}

json to_json(const DualityReport &r) {
    return {
        {"state", r.state},
        {"a_s", to_json(r.a_s)},
        {"a_s_prime", to_json(r.a_s_prime)},
        {"b_m", to_json(r.b_m)},
        {"b_m_prime", to_json(r.b_m_prime)},
        {"dK", r.dk},
        {"dK_prime", r.dk_prime},
        {"lhs", r.lhs},
        {"b_max", r.b_max},
        {"rhs", r.rhs},
        {"slack", r.slack},
        {"holds", r.holds},
        {"saturated", r.saturated},
    };
}

json to_json(const SweepSummary &s) {
    json out = {
        {"trials", s.trials},
        {"violations", s.violations},
        {"min_slack", s.min_slack},
        {"max_lhs", s.max_lhs},
        {"saturation_hits", s.saturation_hits},
    };
    if (s.worst) {
        out["worst"] = {
            {"trial", s.worst_trial},
            {"report", to_json(*s.worst)},
            {"state", matrix_to_json(s.worst_state)},
        };
    }
    return out;
}

json to_json(const FilterOutcome &f) {
    return {
        {"filter_s", matrix_to_json(f.total_filter_s.matrix())},
        {"filter_m", matrix_to_json(f.total_filter_m.matrix())},
        {"success_prob", f.success_prob},
        {"iterations", f.iterations},
        {"converged", f.converged},
        {"b_max_before", f.bell_before},
        {"b_max_after", f.bell_after},
        {"state", state_to_json(f.state)},
    };
}

}  // namespace qduality
