// Copyright 2026 The fairdiv Authors
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


#ifndef FAIRDIV_ERRORS_HPP_
#define FAIRDIV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fairdiv {

/// Malformed profile or trace document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a model invariant. `location` is a
/// JSON-pointer style path into the offending document, or empty.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string location, const std::string& message)
      : std::runtime_error(location.empty() ? message
                                            : location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// The generation phase met tied top objects in strict mode.
class TieError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input exceeds an exponential-time size cap.
class SizeLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A property proven to hold was observed to fail.
class InternalInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fairdiv

#endif  // FAIRDIV_ERRORS_HPP_
