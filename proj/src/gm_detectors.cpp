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

#include "gmcfar/gm_detectors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmcfar/error.hpp"

namespace gmcfar {
namespace {

void check_cells(std::span<const double> cells, const char* what) {
    if (cells.empty()) {
        throw DomainError(std::string("window needs at least one ") + what + " value");
    }
    for (double v : cells) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw DomainError(std::string("window ") + what + " values must be positive and finite");
        }
    }
}

void check_scale(double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError("detector scale must be positive and finite");
    }
}

void check_single(WindowView window) {
    if (window.cut().size() != 1) {
        throw DomainError("single-pulse detector expects exactly one cell under test, got " +
                          std::to_string(window.cut().size()));
    }
}

Decision decide(double margin) {
    return {margin > 0.0 ? Outcome::TargetPresent : Outcome::TargetAbsent, margin};
}

// sum(ln x_i - ln ref) - tau * sum(ln z_j - ln ref). Expanding the detector
// exponents this way keeps the margin exactly zero on constant windows and
// makes the scale terms cancel before rounding.
double log_margin(WindowView window, double tau, double log_ref) {
    double lhs = 0.0;
    for (double x : window.cut()) lhs += std::log(x) - log_ref;
    double excess = 0.0;
    for (double z : window.reference()) excess += std::log(z) - log_ref;
    return lhs - tau * excess;
}

double log_min_reference(WindowView window) {
    return std::log(*std::min_element(window.reference().begin(), window.reference().end()));
}

}  // namespace

ThresholdMultiplier::ThresholdMultiplier(double tau) : tau_(tau) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw DomainError("threshold multiplier must be non-negative and finite, got " +
                          std::to_string(tau));
    }
}

WindowView::WindowView(std::span<const double> cut, std::span<const double> reference)
    : cut_(cut), reference_(reference) {
    check_cells(cut_, "cell-under-test");
    check_cells(reference_, "reference");
}

Window::Window(std::vector<double> cut, std::vector<double> reference)
    : cut_(std::move(cut)), reference_(std::move(reference)) {
    check_cells(cut_, "cell-under-test");
    check_cells(reference_, "reference");
}

Decision gm_partial_single(WindowView window, ThresholdMultiplier tau, double scale) {
    check_single(window);
    return gm_partial_multi(window, tau, scale);
}

Decision gm_full_single(WindowView window, ThresholdMultiplier tau) {
    check_single(window);
    return gm_full_multi(window, tau);
}

Decision gm_partial_multi(WindowView window, ThresholdMultiplier tau, double scale) {
    check_scale(scale);
    return decide(log_margin(window, tau.value(), std::log(scale)));
}

Decision gm_full_multi(WindowView window, ThresholdMultiplier tau) {
    return decide(log_margin(window, tau.value(), log_min_reference(window)));
}

Decision evaluate_detector(DetectorKind kind, WindowView window, ThresholdMultiplier tau,
                           double scale) {
    switch (kind) {
        case DetectorKind::GmPartialSingle: return gm_partial_single(window, tau, scale);
        case DetectorKind::GmFullSingle: return gm_full_single(window, tau);
        case DetectorKind::GmPartialMulti: return gm_partial_multi(window, tau, scale);
        case DetectorKind::GmFullMulti: return gm_full_multi(window, tau);
    }
    throw DomainError("unknown detector kind");
}

}  // namespace gmcfar
