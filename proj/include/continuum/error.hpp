// Copyright 2026 The continuum-alloc Authors
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

namespace continuum {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed text input (expressions, numbers, CSV rows).
struct ParseError : Error {
  using Error::Error;
};

/// Structurally invalid document; message carries a JSON-pointer-style path.
struct SchemaError : Error {
  using Error::Error;
};

/// Reference to an unknown node, mode or add-on.
struct LookupError : Error {
  using Error::Error;
};

}  // namespace continuum
