/*
   Copyright 2026 The gmcfar Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gmcfar/numeric_oracles.hpp"

namespace gmcfar {

using Json = nlohmann::ordered_json;

/// Identifier written into every serialized adjudication document.
inline constexpr const char* kAdjudicationSchema = "gmcfar.adjudication";

Json to_json(const EstimateWithCI& estimate);
Json to_json(const AdjudicationReport& report);

/// Parses a report produced by to_json. Throws DomainError on schema or
/// version mismatch and on malformed documents.
AdjudicationReport report_from_json(const Json& doc);

/// Versioned document holding one report per detector kind.
Json bundle_to_json(const std::vector<AdjudicationReport>& reports);
std::vector<AdjudicationReport> bundle_from_json(const Json& doc);

/// Reads a bundle from disk; nullopt when the file does not exist.
std::optional<std::vector<AdjudicationReport>> load_bundle(const std::string& path);

/// Writes the bundle with two-space indentation and a trailing newline.
void save_bundle(const std::string& path, const std::vector<AdjudicationReport>& reports);

}  // namespace gmcfar
