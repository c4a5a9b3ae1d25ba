// Copyright 2026 The Nevan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NEVAN_ERROR_H_
#define NEVAN_ERROR_H_

#include <stdexcept>
#include <string>

namespace nevan {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on a mathematical input failed (zero polynomial where a
// nonzero one is required, coincident targets, division by zero, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Query outside the domain of a piecewise-linear function.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

}  // namespace nevan

#endif  // NEVAN_ERROR_H_
