// Copyright 2026 The toric-entropy Authors
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

#ifndef TORIC_REGION_DSL_H
#define TORIC_REGION_DSL_H

#include <string>
#include <string_view>

#include "toric/regions.h"

namespace toric {

/// Parses a region spec:
///
///     spec := rect:i0,j0,a,b | chain:row,n | chain:col,n | orient:v | orient:h
///           | links:n(,n)* | not(spec)
///
/// Whitespace is ignored. Throws ParseError (with character position) on syntax
/// errors and ArgumentError when a value violates a constructor's constraint.
Region parse_region_spec(std::string_view text, const Surface &s);

/// Canonical spec: `links:` with ascending ids, or `not(links:...)` for the empty region.
std::string to_region_spec(const Region &r);

}  // namespace toric

#endif
