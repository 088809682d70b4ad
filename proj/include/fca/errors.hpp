// Copyright 2026 The fcachain authors
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

namespace fca {

// Base error for the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A request that is well-formed but outside the supported domain
// (invalid rule, non-unit index synthesis, window too small, ...).
// CLI maps this to exit code 1.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Malformed input (parse failures, bad file contents, ...).
// CLI maps this to exit code 2.
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace fca
