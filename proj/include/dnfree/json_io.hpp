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

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "dnfree/series.hpp"
#include "dnfree/stardist.hpp"
#include "dnfree/transforms.hpp"

namespace dnfree {

using Json = nlohmann::ordered_json;

/// Largest order accepted in input documents; matches the NC(n) cap.
inline constexpr int kMaxInputOrder = kDefaultNcCap;

enum class DocumentKind { distribution, cumulants, joint, series };

/// Sniffs the schema of a JSON document: "vars" marks a joint table,
/// "coeffs" a series, and component objects holding "cumulants" a cumulant
/// sequence. Everything else is read as a distribution.
DocumentKind detect_document(std::string_view text);

/// Distribution document. Model components are expanded to moments.
/// Errors are ParseError with a line/column or a field path.
Distribution parse_distribution(std::string_view text);
CumulantSequence parse_cumulants(std::string_view text);
JointDistribution parse_joint(std::string_view text);
TruncatedSeries parse_series(std::string_view text);

/// Distribution or joint table, depending on the document.
std::variant<Distribution, JointDistribution> parse_input(std::string_view text);

Json to_json(const DiagonalScalar& d);
Json to_json(const Distribution& d);
Json to_json(const CumulantSequence& k);
Json to_json(const TruncatedSeries& s);
Json to_json(const JointDistribution& j);
Json to_json(const Classification& c);
Json to_json(const FreenessReport& r, const std::vector<std::string>& vars);

/// Compact single-line serialization used for every emitted document.
std::string dump(const Json& j);

}  // namespace dnfree
