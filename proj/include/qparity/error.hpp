// Copyright 2026 The qparity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qparity {

/// Bad dimension, or two operands whose dimensions do not agree.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Malformed argument that is not a dimension or index problem.
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Input violates a documented precondition (normalization, unitarity...).
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Inconsistent module configuration.
class ConfigurationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Requested size exceeds the configured envelope.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operation needs a feasible eigenphase spec and was given an infeasible one.
class InfeasibleError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

} // namespace qparity
