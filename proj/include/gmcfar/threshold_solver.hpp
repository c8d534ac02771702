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

#include <cstdint>

#include "gmcfar/detector_kind.hpp"
#include "gmcfar/gm_detectors.hpp"
#include "gmcfar/numeric_oracles.hpp"

namespace gmcfar {

/// Smallest false-alarm target the solver accepts.
inline constexpr double kMinTargetPfa = 1e-12;

struct SolverConfig {
    double target_pfa = 1e-4;
    /// Absolute tolerance on the achieved false-alarm probability; a value of
    /// 0 selects 1e-12 * target_pfa.
    double abs_tol = 0.0;
    int max_iterations = 200;
    /// First upper bracket; doubled until the curve drops below the target.
    double initial_tau_hi = 1.0;

    double resolved_abs_tol() const noexcept { return abs_tol > 0.0 ? abs_tol : 1e-12 * target_pfa; }
};

struct SolverResult {
    ThresholdMultiplier tau{0.0};
    double achieved_pfa = 0.0;
    int iterations = 0;
};

/// target^(-1/n_ref) - 1.
ThresholdMultiplier solve_tau_partial_single(std::int64_t n_ref, double target);

/// Bracketing plus bisection on validated_pfa. Throws UnreachableTarget when
/// the false-alarm probability does not depend on tau (single reference cell
/// in a full-CFAR detector) or when the target exceeds Pfa(0), and
/// NumericalFailure when max_iterations runs out.
SolverResult solve_tau_numeric(DetectorKind kind, std::int64_t n_cut, std::int64_t m_ref,
                               const SolverConfig& config, const AdjudicationReport& report);

}  // namespace gmcfar
