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

#include <array>
#include <string>
#include <string_view>

namespace gmcfar {

enum class DetectorKind { GmPartialSingle, GmFullSingle, GmPartialMulti, GmFullMulti };

inline constexpr std::array<DetectorKind, 4> kAllDetectorKinds = {
    DetectorKind::GmPartialSingle, DetectorKind::GmFullSingle, DetectorKind::GmPartialMulti,
    DetectorKind::GmFullMulti};

/// True for the detectors that substitute the reference minimum for the scale.
constexpr bool is_full_cfar(DetectorKind kind) noexcept {
    return kind == DetectorKind::GmFullSingle || kind == DetectorKind::GmFullMulti;
}

/// True for the detectors with exactly one cell under test.
constexpr bool is_single_pulse(DetectorKind kind) noexcept {
    return kind == DetectorKind::GmPartialSingle || kind == DetectorKind::GmFullSingle;
}

/// Command-line spelling: partial-single, full-single, partial-multi, full-multi.
std::string_view to_string(DetectorKind kind) noexcept;

/// Inverse of to_string; throws DomainError on an unknown name.
DetectorKind parse_detector_kind(std::string_view name);

}  // namespace gmcfar
