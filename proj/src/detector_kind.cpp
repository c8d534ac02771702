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

#include "gmcfar/detector_kind.hpp"

#include "gmcfar/error.hpp"

namespace gmcfar {

std::string_view to_string(DetectorKind kind) noexcept {
    switch (kind) {
        case DetectorKind::GmPartialSingle: return "partial-single";
        case DetectorKind::GmFullSingle: return "full-single";
        case DetectorKind::GmPartialMulti: return "partial-multi";
        case DetectorKind::GmFullMulti: return "full-multi";
    }
    return "unknown";
}

DetectorKind parse_detector_kind(std::string_view name) {
    for (auto kind : kAllDetectorKinds) {
        if (to_string(kind) == name) return kind;
    }
    throw DomainError("unknown detector kind '" + std::string(name) + "'");
}

}  // namespace gmcfar
