// Copyright 2026 The dnfree Authors
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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dnfree {

/// Exact rational. mpq_class keeps values canonical (reduced, positive
/// denominator) as long as every constructor path calls canonicalize().
using Rational = mpq_class;

/// Parses "p" or "p/q" in base 10. Rejects zero or negative denominators,
/// non-reduced fractions, signs on the denominator, and stray characters.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

}  // namespace dnfree
