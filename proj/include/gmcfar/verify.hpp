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
#include <string>
#include <vector>

#include "gmcfar/numeric_oracles.hpp"
#include "gmcfar/pareto_mc.hpp"
#include "gmcfar/report_io.hpp"

namespace gmcfar {

/// Settings of the end-to-end verification pipeline.
struct VerifyConfig {
    std::vector<std::int64_t> grid_n{1, 2, 4};
    std::vector<std::int64_t> grid_m{1, 2, 4, 8, 16};
    std::vector<double> grid_tau{0.1, 0.5, 1.0, 2.0, 5.0};
    std::uint64_t trials = 10'000'000;
    /// Pareto-domain detector simulation per grid point; 0 reuses `trials`.
    std::uint64_t detector_trials = 0;
    /// Trials per clutter point in the CFAR homogeneity sweeps.
    std::uint64_t cfar_trials = 1'000'000;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    ParetoParams detector_clutter{3.0, 1.0};
    std::vector<DetectorKind> kinds{kAllDetectorKinds.begin(), kAllDetectorKinds.end()};
    Execution exec;
    ClosedFormFn closed_form = closed_form_pfa;
};

enum class CheckStatus { Pass, Fail, Info };
std::string_view to_string(CheckStatus status) noexcept;

struct CheckRow {
    std::string check;
    std::string detector;
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
};

struct VerifyResult {
    std::vector<AdjudicationReport> reports;
    std::vector<HomogeneityReport> cfar;
    std::vector<CheckRow> checks;
    bool passed = false;
};

/// The adjudication grid of `kind` under `config` (N fixed to 1 for
/// single-pulse kinds).
std::vector<GridPoint> verify_grid(const VerifyConfig& config, DetectorKind kind);

/// Adjudicates every requested detector, checks the forced fixtures, the
/// single-pulse reduction identities and the CFAR homogeneity of the
/// full-CFAR detectors.
VerifyResult run_verify(const VerifyConfig& config);

/// check,detector,status,detail
std::string checks_to_csv(const std::vector<CheckRow>& checks);
Json verify_to_json(const VerifyResult& result);

}  // namespace gmcfar
