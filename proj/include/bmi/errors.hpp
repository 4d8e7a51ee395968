// Copyright 2026 The Authors.
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

#ifndef BMI_ERRORS_HPP_
#define BMI_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bmi {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element id outside the ground set of the handle it was passed to.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed input data. `path` names the offending field (JSON-pointer-like).
class ValidationError : public Error {
 public:
  ValidationError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// An exhaustive routine was asked to run beyond its configured size cap.
class ScaleCapError : public Error {
 public:
  using Error::Error;
};

// A property that must hold for correct code (or a genuine matroid oracle)
// was observed to fail.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bmi

#endif  // BMI_ERRORS_HPP_
