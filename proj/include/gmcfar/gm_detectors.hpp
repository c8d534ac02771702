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

#include <span>
#include <vector>

#include "gmcfar/detector_kind.hpp"

namespace gmcfar {

/// Threshold multiplier; non-negative and finite.
class ThresholdMultiplier {
public:
    explicit ThresholdMultiplier(double tau);

    double value() const noexcept { return tau_; }

private:
    double tau_;
};

/// Non-owning, validated view of one detection instance: N cells under test
/// and M reference cells, every value positive and finite.
class WindowView {
public:
    WindowView(std::span<const double> cut, std::span<const double> reference);

    std::span<const double> cut() const noexcept { return cut_; }
    std::span<const double> reference() const noexcept { return reference_; }

private:
    std::span<const double> cut_;
    std::span<const double> reference_;
};

/// Owning window; immutable once constructed.
class Window {
public:
    Window(std::vector<double> cut, std::vector<double> reference);

    std::span<const double> cut() const noexcept { return cut_; }
    std::span<const double> reference() const noexcept { return reference_; }

    operator WindowView() const { return WindowView(cut_, reference_); }

private:
    std::vector<double> cut_;
    std::vector<double> reference_;
};

enum class Outcome { TargetAbsent, TargetPresent };

/// Result of one test. margin = ln(lhs) - ln(rhs); the target is declared
/// only for a strictly positive margin.
struct Decision {
    Outcome outcome;
    double margin;
};

Decision gm_partial_single(WindowView window, ThresholdMultiplier tau, double scale);
Decision gm_full_single(WindowView window, ThresholdMultiplier tau);
Decision gm_partial_multi(WindowView window, ThresholdMultiplier tau, double scale);
Decision gm_full_multi(WindowView window, ThresholdMultiplier tau);

/// Dispatches on kind. The scale argument is ignored by the full-CFAR kinds.
Decision evaluate_detector(DetectorKind kind, WindowView window, ThresholdMultiplier tau,
                           double scale);

}  // namespace gmcfar
