// Copyright 2026 The ModSum Cards Authors. All rights reserved.
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

#ifndef MODSUM_ERRORS_H_
#define MODSUM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace modsum {

// Malformed input from a caller: bad hands, zero modulus, k < 1, ...
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A theorem or construction was invoked outside its hypothesis.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Internal inconsistency of the verifier itself (never a user error).
class VerifierError : public std::logic_error {
 public:
  explicit VerifierError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace modsum

#endif  // MODSUM_ERRORS_H_
