// Copyright 2026 The domipoly Authors
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

#ifndef DOMIPOLY_ERROR_HPP_
#define DOMIPOLY_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domipoly {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `offset()` is the byte offset (graph6) or the
// 1-based line number (edge lists, catalog files) where the problem was found.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// The request is well-formed but exceeds what an exhaustive method can handle.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A self-check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace domipoly

#endif  // DOMIPOLY_ERROR_HPP_
