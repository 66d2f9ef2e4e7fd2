// Copyright 2026 The Weierstrass Authors
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

#ifndef WEIERSTRASS_ERRORS_H_
#define WEIERSTRASS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace weierstrass {

// Malformed input: unparsable polynomial text, bad field string, wrong
// lengths, mismatched fields.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematical precondition does not hold for otherwise well-formed input,
// e.g. division by zero, the characteristic hypothesis, a curve with more
// than one branch at infinity.
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::domain_error(what) {}
};

// Results that contradict a theorem the computation relies on, e.g. an
// integral basis whose size disagrees with the number of new pole orders.
class InconsistencyError : public std::logic_error {
 public:
  explicit InconsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace weierstrass

#endif  // WEIERSTRASS_ERRORS_H_
