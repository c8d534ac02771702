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
#include <optional>
#include <string>
#include <vector>

#include "gmcfar/clutter_models.hpp"
#include "gmcfar/detector_kind.hpp"
#include "gmcfar/gm_detectors.hpp"
#include "gmcfar/parallel.hpp"
#include "gmcfar/statistics.hpp"

namespace gmcfar {

/// Simulates `trials` windows whose cells are all i.i.d. Pareto(params), runs
/// the detector and returns the rejection fraction. Partial detectors use
/// `detector_scale` as their known scale (params.scale() when unset).
/// Single-pulse kinds require n_cut == 1.
EstimateWithCI empirical_pfa(DetectorKind kind, std::int64_t n_cut, std::int64_t m_ref,
                             ThresholdMultiplier tau, const ParetoParams& params,
                             std::uint64_t trials, const RandomStream& stream,
                             Execution exec = {},
                             std::optional<double> detector_scale = std::nullopt);

/// A CFAR-property sweep: one detector configuration over a clutter grid.
struct SweepSpec {
    DetectorKind kind = DetectorKind::GmFullMulti;
    std::int64_t n_cut = 1;
    std::int64_t m_ref = 1;
    double tau = 0.0;
    std::vector<ParetoParams> params_grid;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    /// Fixed scale handed to partial detectors; each point's clutter scale
    /// when unset.
    std::optional<double> detector_scale;
};

struct SweepPoint {
    ParetoParams params;
    EstimateWithCI estimate;
};

struct HomogeneityReport {
    SweepSpec spec;
    std::vector<SweepPoint> points;
    HomogeneityTest test;
    /// Significance level of the homogeneity test.
    double alpha = 0.001;
    bool homogeneous = false;
};

/// Runs empirical_pfa at every grid point on its own sub-stream and tests the
/// rejection counts for homogeneity.
HomogeneityReport cfar_grid_check(const SweepSpec& spec, Execution exec = {});

/// Sub-stream of grid point `index` in a sweep seeded with `seed`.
RandomStream sweep_point_stream(std::uint64_t seed, std::size_t index);

/// alpha,beta,trials,rejections,estimate,ci_low,ci_high
std::string to_csv(const HomogeneityReport& report);
std::string to_json(const HomogeneityReport& report);

}  // namespace gmcfar
