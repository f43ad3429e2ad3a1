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

#ifndef QDUALITY_JSON_IO_H
#define QDUALITY_JSON_IO_H

#include <string>

#include "json.hpp"
#include "qduality/bell.h"
#include "qduality/filtering.h"
#include "qduality/harness.h"
#include "qduality/measurement.h"
#include "qduality/states.h"

namespace qduality {

using json = nlohmann::json;

// State files: {"re": [[4 reals] x 4], "im": [[4 reals] x 4]}. Parsing runs
// validate(), so an unphysical matrix raises NotDensityMatrixError. Malformed
// documents raise FormatError.
json matrix_to_json(const ComplexMatrix4 &m);
json matrix_to_json(const ComplexMatrix2 &m);
json state_to_json(const TwoQubitState &s);
TwoQubitState state_from_json(const json &j);
TwoQubitState load_state_file(const std::string &path);

/// Axes are plain triples, normalized on parse.
json axis_to_json(const MeasurementAxis &a);
MeasurementAxis axis_from_json(const json &j);

json to_json(const Vec3 &v);
json to_json(const RealMatrix3 &m);
json to_json(const BlochForm &b);
json to_json(const NormalForm &nf);
json to_json(const DualityReport &r);
json to_json(const SweepSummary &s);
json to_json(const FilterOutcome &f);

}  // namespace qduality

#endif
