// Copyright 2026 The jsent Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace jsent {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a type invariant (bad distribution, non-Hermitian matrix, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; the message carries line and field context.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A scalar argument is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Vector dimension too small for the requested estimator.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but the operation is undefined on it (e.g. shrinking the zero vector).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace jsent
