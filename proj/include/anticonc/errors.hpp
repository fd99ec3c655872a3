// Copyright 2026 The anticonc Authors
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

namespace anticonc {

/// Argument outside the documented domain of an operation.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A resource guard (qudit count, memory, trajectory count) was exceeded.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}
inline void guard(bool ok, const std::string& what) {
  if (!ok) throw GuardError(what);
}
}  // namespace detail

}  // namespace anticonc
