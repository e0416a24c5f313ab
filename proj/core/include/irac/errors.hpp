// Copyright 2026 The irac Authors.
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
#include <utility>

namespace irac {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown label/type name, or a property whose type does not match the schema.
class SchemaViolation : public Error {
 public:
  using Error::Error;
};

class MissingEndpoint : public Error {
 public:
  using Error::Error;
};

/// Edge endpoints carry labels the edge type does not admit.
class IllegalEndpoints : public Error {
 public:
  using Error::Error;
};

class UnknownNode : public Error {
 public:
  using Error::Error;
};

class UnknownCitation : public Error {
 public:
  using Error::Error;
};

class EmptyCitation : public Error {
 public:
  using Error::Error;
};

/// A judgment record failed validation. `field_path()` names the offending
/// field, e.g. "precedents[0].relation".
class MalformedRecord : public Error {
 public:
  MalformedRecord(std::string field_path, const std::string& message)
      : Error(field_path + ": " + message), field_path_(std::move(field_path)) {}

  const std::string& field_path() const noexcept { return field_path_; }

 private:
  std::string field_path_;
};

/// The generator endpoint could not be reached at all (connection refused,
/// DNS failure). Distinct from a timeout, which is a failed attempt.
class GeneratorUnreachable : public Error {
 public:
  using Error::Error;
};

}  // namespace irac
