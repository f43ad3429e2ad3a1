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

#ifndef QDUALITY_ERRORS_H
#define QDUALITY_ERRORS_H

#include <stdexcept>
#include <string>

namespace qduality {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define QDUALITY_DECLARE_ERROR(Name)             \
    class Name : public Error {                  \
       public:                                   \
        using Error::Error;                      \
    };

QDUALITY_DECLARE_ERROR(NonHermitianError)
QDUALITY_DECLARE_ERROR(NotDensityMatrixError)
QDUALITY_DECLARE_ERROR(BadProbabilitiesError)
QDUALITY_DECLARE_ERROR(BadParameterError)
QDUALITY_DECLARE_ERROR(NotUnitaryError)
QDUALITY_DECLARE_ERROR(ZeroProbabilityError)
QDUALITY_DECLARE_ERROR(BadOrderingError)
QDUALITY_DECLARE_ERROR(SingularMarginalError)
QDUALITY_DECLARE_ERROR(NotComplementaryError)
QDUALITY_DECLARE_ERROR(FormatError)

#undef QDUALITY_DECLARE_ERROR

}  // namespace qduality

#endif
