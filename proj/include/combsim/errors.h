// Copyright 2026 The combsim Authors
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

#ifndef COMBSIM_ERRORS_H
#define COMBSIM_ERRORS_H

#include <stdexcept>
#include <string>

namespace combsim {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
    using Error::Error;
};
struct NonUnitary : Error {
    using Error::Error;
};
using NonUnitaryGate = NonUnitary;
struct DimensionMismatch : Error {
    using Error::Error;
};
struct QubitOutOfRange : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct ZeroNormProjection : Error {
    using Error::Error;
};
struct StaleRecord : Error {
    using Error::Error;
};
struct UnsupportedCoupling : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct EmptySearchSpace : Error {
    using Error::Error;
};
struct Diverged : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

/// Invalid configuration. `field` is the dotted path of the offending key.
struct ConfigError : Error {
    ConfigError(std::string field, const std::string &reason)
        : Error(field + ": " + reason), field(std::move(field)) {
    }
    std::string field;
};

}  // namespace combsim

#endif
