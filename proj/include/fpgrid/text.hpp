// Copyright 2026 The fpgrid Authors
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

#include <string>
#include <string_view>
#include <vector>

#include "fpgrid/modring.hpp"

namespace fpgrid {

// Text syntax for ring elements, shared by the CLI and the report files.
//
//   element := digits | digits "+" digits "i"
//
// Components are canonical residues: plain non-negative decimals strictly
// below the modulus, no signs, no spaces, no leading "+". "5" and "5+0i"
// both parse to the same element; rendering always uses the short form
// when im == 0. Parse errors carry the offending token verbatim.

/// Parses one element. Throws std::invalid_argument on any deviation from
/// the grammar or a component >= the modulus.
Fp2Elem parse_element(std::string_view text, const Modulus& mod);

/// Parses a comma-separated list of elements ("1+2i,0,3"). Surrounding
/// whitespace around each entry is permitted; empty entries are not.
std::vector<Fp2Elem> parse_vector(std::string_view text, const Modulus& mod);

/// Canonical rendering: "a" when im == 0, otherwise "a+bi".
std::string to_text(const Fp2Elem& z);

/// Comma-separated rendering of a vector, no spaces.
std::string to_text(const std::vector<Fp2Elem>& v);

} // namespace fpgrid
