//
// Copyright 2026 The stegosec Authors
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
//

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stegosec {

// Root of every error raised by the library. The CLI maps these to exit code 1
// unless the subclass is a UsageError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Length, index or bounds violation on a value passed to an operation.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Bad hex, mismatched key/message length and similar caller mistakes that the
// CLI reports as usage errors (exit code 2).
class UsageError : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

class CapacityError : public Error {
 public:
  CapacityError(std::size_t requested, std::size_t capacity)
      : Error("requested " + std::to_string(requested) +
              " plane bits but capacity is " + std::to_string(capacity)),
        requested_(requested),
        capacity_(capacity) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t capacity() const noexcept { return capacity_; }

 private:
  std::size_t requested_;
  std::size_t capacity_;
};

// Invalid game or statistics configuration (zero trials, enumeration bounds,
// non-positive expected counts).
class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class NotInFamilyError : public Error {
 public:
  using Error::Error;
};

// Two bases agree on every bit outside the plane.
class FamilyCollisionError : public Error {
 public:
  FamilyCollisionError(std::size_t first, std::size_t second)
      : Error("bases " + std::to_string(first) + " and " +
              std::to_string(second) + " are identical outside the plane"),
        first_(first),
        second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

}  // namespace stegosec
