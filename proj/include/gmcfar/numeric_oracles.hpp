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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gmcfar/analytic_pfa.hpp"
#include "gmcfar/clutter_models.hpp"
#include "gmcfar/detector_kind.hpp"
#include "gmcfar/parallel.hpp"
#include "gmcfar/statistics.hpp"

namespace gmcfar {

/// One (N, M, tau) configuration. Single-pulse kinds use n_cut = 1 and take
/// m_ref as the reference length.
struct GridPoint {
    std::int64_t n_cut = 1;
    std::int64_t m_ref = 1;
    double tau = 0.0;

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Shape of the summed reference excess over the minimum in the full-CFAR
/// conditioning integral.
enum class ExcessShape {
    /// gamma(M - 1, 1); degenerate at zero when M = 1.
    MMinusOne,
    /// gamma(M, 1).
    M,
};

std::string_view to_string(ExcessShape shape) noexcept;

/// Monte Carlo over unit-exponential duals. Partial kinds estimate
/// P(sum X* > tau sum Y*); full kinds P(sum X* > (N - M tau) Y*_(1) + tau sum Y*).
EstimateWithCI mc_dual_pfa(DetectorKind kind, std::int64_t n_cut, std::int64_t m_ref,
                           ThresholdMultiplier tau, std::uint64_t trials,
                           const RandomStream& stream, Execution exec = {});

/// Integral over t of the gamma(M, 1) density times Q(N, t tau). `tol` bounds
/// the error relative to the result (hence also absolutely) and must lie in
/// (0, 1e-6].
double quadrature_pfa_partial_multi(std::int64_t n_cut, std::int64_t m_ref,
                                    ThresholdMultiplier tau, double tol);

/// Integral over t of M e^{-Mt} E[Q(N, N t + tau W)] with W distributed as
/// selected by `excess`. Same tolerance contract as the partial version.
double quadrature_pfa_full_multi(std::int64_t n_cut, std::int64_t m_ref, ThresholdMultiplier tau,
                                 double tol, ExcessShape excess);

enum class VariantVerdict { Consistent, Inconsistent, NotApplicable, Undetermined };
std::string_view to_string(VariantVerdict verdict) noexcept;

enum class Verdict {
    PaperForm,
    CandidateForm,
    UseQuadrature,
    InsufficientPrecision,
    InternallyInconsistent,
};
std::string_view to_string(Verdict verdict) noexcept;

struct PointRecord {
    GridPoint point;
    EstimateWithCI dual_mc;
    /// Pareto-domain detector simulation, when requested.
    std::optional<EstimateWithCI> detector_mc;
    /// Partial kinds: the single quadrature oracle.
    std::optional<double> quadrature;
    /// Full kinds: quadrature under each excess shape.
    std::optional<double> quadrature_m_minus_one;
    std::optional<double> quadrature_m;
    std::optional<double> paper_form;
    std::optional<double> candidate_form;
    /// Full kinds: which excess shapes agree with the Monte Carlo oracles.
    bool m_minus_one_agrees = false;
    bool m_agrees = false;
    bool oracle_consistent = false;
    bool insufficient_precision = false;
    VariantVerdict paper_verdict = VariantVerdict::NotApplicable;
    VariantVerdict candidate_verdict = VariantVerdict::NotApplicable;

    friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

struct AdjudicationReport {
    static constexpr int kSchemaVersion = 1;

    DetectorKind detector = DetectorKind::GmPartialSingle;
    std::uint64_t trials = 0;
    std::uint64_t detector_trials = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::optional<ParetoParams> detector_clutter;
    std::vector<PointRecord> points;
    bool internally_consistent = false;
    /// Full kinds: excess shape consistent with the oracles at every point.
    std::optional<ExcessShape> quadrature_route;
    Verdict verdict = Verdict::InternallyInconsistent;
    std::vector<std::string> diagnostics;

    friend bool operator==(const AdjudicationReport&, const AdjudicationReport&) = default;
};

/// Closed-form evaluator consulted by adjudicate; swappable for mutation tests.
using ClosedFormFn = std::function<std::optional<double>(
    DetectorKind, std::int64_t, std::int64_t, double, PfaFormulaVariant)>;

struct AdjudicationOptions {
    Execution exec;
    /// When set, each point also runs the Pareto-domain detector simulation
    /// with this clutter law (partial detectors receive its scale).
    std::optional<ParetoParams> detector_clutter;
    /// Trials for the detector simulation; 0 reuses the dual trial count.
    std::uint64_t detector_trials = 0;
    /// Below this trial count no verdicts are issued.
    std::uint64_t min_trials = 1'000'000;
    ClosedFormFn closed_form = closed_form_pfa;
};

/// Compares every closed-form variant of `kind` against the oracles on `grid`
/// and decides which one, if any, is validated.
AdjudicationReport adjudicate(DetectorKind kind, std::span<const GridPoint> grid,
                              std::uint64_t trials, std::uint64_t seed, double tol,
                              const AdjudicationOptions& options = {});

/// Default grid: N in {1, 2, 4} (1 only for single-pulse kinds),
/// M in {1, 2, 4, 8, 16}, tau in {0.1, 0.5, 1, 2, 5}.
std::vector<GridPoint> default_adjudication_grid(DetectorKind kind);

/// The single false-alarm entry point: the validated closed form when the
/// report names one, the quadrature oracle otherwise.
double validated_pfa(DetectorKind kind, const AdjudicationReport& report, std::int64_t n_cut,
                     std::int64_t m_ref, ThresholdMultiplier tau, double quadrature_tol = 1e-10);

/// Sub-streams used by adjudicate for point `index`.
RandomStream dual_mc_stream(DetectorKind kind, std::uint64_t seed, std::size_t index);
RandomStream detector_mc_stream(DetectorKind kind, std::uint64_t seed, std::size_t index);

}  // namespace gmcfar
