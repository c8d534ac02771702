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

#include "gmcfar/numeric_oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "gmcfar/error.hpp"
#include "gmcfar/format.hpp"
#include "gmcfar/incomplete_gamma.hpp"
#include "gmcfar/pareto_mc.hpp"
#include "gmcfar/quadrature.hpp"

namespace gmcfar {
namespace {

void check_tol(double tol) {
    if (!(tol > 0.0 && tol <= 1e-6)) {
        throw DomainError("quadrature tolerance must lie in (0, 1e-6], got " + format_double(tol));
    }
}

void check_counts(std::int64_t n_cut, std::int64_t m_ref) {
    if (n_cut < 1 || m_ref < 1) throw DomainError("n_cut and m_ref must be at least 1");
}

// Sum of k unit exponentials as -ln of a product of uniforms, flushing the
// product into the log before it can underflow. Each 64-bit word supplies
// two 32-bit uniforms. Optionally reports the largest uniform, whose -ln is
// the minimum of the k exponentials.
struct ExponentialSum {
    double sum;
    double max_uniform;
};

inline double low_half(std::uint64_t w) {
    return (static_cast<double>(static_cast<std::uint32_t>(w)) + 0.5) * 0x1.0p-32;
}

inline double high_half(std::uint64_t w) {
    return (static_cast<double>(static_cast<std::uint32_t>(w >> 32)) + 0.5) * 0x1.0p-32;
}

template <bool kTrackMax>
ExponentialSum exponential_sum(TrialGenerator& gen, std::int64_t k) {
    double acc = 0.0;
    double prod = 1.0;
    double max_u = 0.0;
    std::int64_t i = 0;
    for (; i + 1 < k; i += 2) {
        const std::uint64_t w = gen.next_u64();
        const double u0 = low_half(w);
        const double u1 = high_half(w);
        if constexpr (kTrackMax) max_u = std::max(max_u, std::max(u0, u1));
        prod *= u0 * u1;
        if (prod < 1e-280) {
            acc -= std::log(prod);
            prod = 1.0;
        }
    }
    if (i < k) {
        const double u = low_half(gen.next_u64());
        if constexpr (kTrackMax) max_u = std::max(max_u, u);
        prod *= u;
    }
    return {acc - std::log(prod), max_u};
}

// Integrates a decreasing-tail integrand on [0, inf): [0, start] first, then
// doubling panels until `tail_bound(T)` falls below a tenth of the tolerance
// relative to the running total.
double integrate_half_line(const std::function<double(double)>& f,
                           const std::function<double(double)>& tail_bound, double start,
                           std::span<const double> breakpoints, double tol) {
    constexpr double kAbsFloor = 1e-300;
    double upper = start;
    double total = integrate_adaptive(f, 0.0, upper, 0.5 * tol, kAbsFloor, breakpoints).value;
    for (int extension = 0; tail_bound(upper) > 0.1 * tol * std::abs(total) &&
                            tail_bound(upper) > kAbsFloor;
         ++extension) {
        if (extension > 60) {
            throw NumericalFailure("quadrature tail truncation did not converge", tail_bound(upper));
        }
        total += integrate_adaptive(f, upper, 2.0 * upper, 0.5 * tol, kAbsFloor).value;
        upper *= 2.0;
    }
    return total;
}

double start_point(double shape) { return shape + 10.0 * std::sqrt(shape) + 20.0; }

// E[Q(n, x0 + tau W)] with W ~ gamma(shape, 1); shape 0 means W = 0.
double excess_expectation(std::int64_t n_cut, double shape, double x0, double tau, double tol) {
    const double n = static_cast<double>(n_cut);
    if (shape == 0.0 || tau == 0.0) return regularized_gamma_q(n, x0);
    const auto f = [&](double w) { return gamma_density(shape, w) * regularized_gamma_q(n, x0 + tau * w); };
    const auto tail = [&](double w) {
        return regularized_gamma_q(shape, w) * regularized_gamma_q(n, x0 + tau * w);
    };
    const std::array<double, 1> mode{shape - 1.0};
    return integrate_half_line(f, tail, start_point(shape), mode, tol);
}

RandomStream point_stream(DetectorKind kind, std::uint64_t seed, std::size_t index,
                          std::uint64_t oracle) {
    const auto kind_id = static_cast<std::uint64_t>(kind);
    return {seed, derive_stream_id(derive_stream_id(oracle, kind_id), index)};
}

}  // namespace

std::string_view to_string(ExcessShape shape) noexcept {
    return shape == ExcessShape::MMinusOne ? "m-minus-one" : "m";
}

std::string_view to_string(VariantVerdict verdict) noexcept {
    switch (verdict) {
        case VariantVerdict::Consistent: return "consistent";
        case VariantVerdict::Inconsistent: return "inconsistent";
        case VariantVerdict::NotApplicable: return "not-applicable";
        case VariantVerdict::Undetermined: return "undetermined";
    }
    return "unknown";
}

std::string_view to_string(Verdict verdict) noexcept {
    switch (verdict) {
        case Verdict::PaperForm: return "paper-form";
        case Verdict::CandidateForm: return "candidate-form";
        case Verdict::UseQuadrature: return "quadrature";
        case Verdict::InsufficientPrecision: return "insufficient-precision";
        case Verdict::InternallyInconsistent: return "internally-inconsistent";
    }
    return "unknown";
}

EstimateWithCI mc_dual_pfa(DetectorKind kind, std::int64_t n_cut, std::int64_t m_ref,
                           ThresholdMultiplier tau, std::uint64_t trials,
                           const RandomStream& stream, Execution exec) {
    if (trials == 0) throw DomainError("mc_dual_pfa: need at least one trial");
    check_counts(n_cut, m_ref);
    if (is_single_pulse(kind) && n_cut != 1) {
        throw DomainError("mc_dual_pfa: single-pulse detectors take one cell under test");
    }
    const double t = tau.value();
    const double n = static_cast<double>(n_cut);
    const double m = static_cast<double>(m_ref);
    const bool full = is_full_cfar(kind);

    const auto count = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            auto gen = stream.trial(i);
            const double cut = exponential_sum<false>(gen, n_cut).sum;
            if (full) {
                const auto ref = exponential_sum<true>(gen, m_ref);
                hits += cut > t * ref.sum + (n - m * t) * -std::log(ref.max_uniform);
            } else {
                hits += cut > t * exponential_sum<false>(gen, m_ref).sum;
            }
        }
        return hits;
    };
    const std::uint64_t rejections = parallel_count(trials, exec, count);
    return make_estimate(rejections, trials, stream.seed, stream.stream_id);
}

double quadrature_pfa_partial_multi(std::int64_t n_cut, std::int64_t m_ref,
                                    ThresholdMultiplier tau, double tol) {
    check_tol(tol);
    check_counts(n_cut, m_ref);
    const double n = static_cast<double>(n_cut);
    const double m = static_cast<double>(m_ref);
    const double t = tau.value();
    const auto f = [&](double x) { return gamma_density(m, x) * regularized_gamma_q(n, t * x); };
    const auto tail = [&](double x) {
        return regularized_gamma_q(m, x) * regularized_gamma_q(n, t * x);
    };
    std::vector<double> breaks{m - 1.0};
    if (t > 0.0) breaks.push_back(n / t);
    return std::clamp(integrate_half_line(f, tail, start_point(m), breaks, tol), 0.0, 1.0);
}

double quadrature_pfa_full_multi(std::int64_t n_cut, std::int64_t m_ref, ThresholdMultiplier tau,
                                 double tol, ExcessShape excess) {
    check_tol(tol);
    check_counts(n_cut, m_ref);
    const double n = static_cast<double>(n_cut);
    const double m = static_cast<double>(m_ref);
    const double shape = excess == ExcessShape::MMinusOne ? m - 1.0 : m;
    const double t = tau.value();
    // The inner relative error carries straight through the outer weight.
    const double inner_tol = std::max(0.1 * tol, kMinRelTol);
    const auto inner = [&](double x) { return excess_expectation(n_cut, shape, n * x, t, inner_tol); };
    const auto f = [&](double x) { return m * std::exp(-m * x) * inner(x); };
    const auto tail = [&](double x) { return std::exp(-m * x) * inner(x); };
    const std::array<double, 1> breaks{1.0 / m};
    const double start = (std::log(10.0 / tol) + 20.0) / m;
    return std::clamp(integrate_half_line(f, tail, start, breaks, tol), 0.0, 1.0);
}

RandomStream dual_mc_stream(DetectorKind kind, std::uint64_t seed, std::size_t index) {
    return point_stream(kind, seed, index, 0xD0A1ull);
}

RandomStream detector_mc_stream(DetectorKind kind, std::uint64_t seed, std::size_t index) {
    return point_stream(kind, seed, index, 0xDE7Eull);
}

std::vector<GridPoint> default_adjudication_grid(DetectorKind kind) {
    std::vector<GridPoint> grid;
    const std::vector<std::int64_t> ns =
        is_single_pulse(kind) ? std::vector<std::int64_t>{1} : std::vector<std::int64_t>{1, 2, 4};
    for (auto n : ns) {
        for (std::int64_t m : {1, 2, 4, 8, 16}) {
            for (double tau : {0.1, 0.5, 1.0, 2.0, 5.0}) grid.push_back({n, m, tau});
        }
    }
    return grid;
}

AdjudicationReport adjudicate(DetectorKind kind, std::span<const GridPoint> grid,
                              std::uint64_t trials, std::uint64_t seed, double tol,
                              const AdjudicationOptions& options) {
    if (grid.empty()) throw DomainError("adjudicate: empty grid");
    if (trials == 0) throw DomainError("adjudicate: need at least one trial");
    check_tol(tol);
    const bool full = is_full_cfar(kind);

    AdjudicationReport report;
    report.detector = kind;
    report.trials = trials;
    report.seed = seed;
    report.tol = tol;
    report.detector_clutter = options.detector_clutter;
    report.detector_trials =
        options.detector_clutter ? (options.detector_trials ? options.detector_trials : trials) : 0;
    const bool insufficient = trials < options.min_trials;

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const GridPoint& g = grid[i];
        check_counts(g.n_cut, g.m_ref);
        if (is_single_pulse(kind) && g.n_cut != 1) {
            throw DomainError("adjudicate: single-pulse grid points need n_cut = 1");
        }
        const ThresholdMultiplier tau(g.tau);
        PointRecord rec;
        rec.point = g;
        rec.dual_mc = mc_dual_pfa(kind, g.n_cut, g.m_ref, tau, trials, dual_mc_stream(kind, seed, i),
                                  options.exec);
        if (options.detector_clutter) {
            rec.detector_mc = empirical_pfa(kind, g.n_cut, g.m_ref, tau, *options.detector_clutter,
                                            report.detector_trials,
                                            detector_mc_stream(kind, seed, i), options.exec);
        }
        // An oracle value must sit inside the band of every simulation.
        const auto agrees = [&](double value) {
            return rec.dual_mc.consistent_with(value) &&
                   (!rec.detector_mc || rec.detector_mc->consistent_with(value));
        };
        const bool simulations_agree =
            !rec.detector_mc || mutually_consistent(rec.dual_mc, *rec.detector_mc);
        if (full) {
            rec.quadrature_m_minus_one =
                quadrature_pfa_full_multi(g.n_cut, g.m_ref, tau, tol, ExcessShape::MMinusOne);
            rec.quadrature_m = quadrature_pfa_full_multi(g.n_cut, g.m_ref, tau, tol, ExcessShape::M);
            rec.m_minus_one_agrees = agrees(*rec.quadrature_m_minus_one);
            rec.m_agrees = agrees(*rec.quadrature_m);
            rec.oracle_consistent = simulations_agree && (rec.m_minus_one_agrees || rec.m_agrees);
        } else {
            rec.quadrature = quadrature_pfa_partial_multi(g.n_cut, g.m_ref, tau, tol);
            rec.oracle_consistent = simulations_agree && agrees(*rec.quadrature);
        }
        rec.insufficient_precision = insufficient;
        rec.paper_form = options.closed_form(kind, g.n_cut, g.m_ref, g.tau, PfaFormulaVariant::PaperForm);
        rec.candidate_form =
            options.closed_form(kind, g.n_cut, g.m_ref, g.tau, PfaFormulaVariant::CandidateForm);
        const auto judge = [&](const std::optional<double>& value) {
            if (!value) return VariantVerdict::NotApplicable;
            if (insufficient) return VariantVerdict::Undetermined;
            return rec.dual_mc.consistent_with(*value) ? VariantVerdict::Consistent
                                                       : VariantVerdict::Inconsistent;
        };
        rec.paper_verdict = judge(rec.paper_form);
        rec.candidate_verdict = judge(rec.candidate_form);
        if (!rec.oracle_consistent) {
            report.diagnostics.push_back(
                "oracle disagreement at n=" + std::to_string(g.n_cut) + " m=" +
                std::to_string(g.m_ref) + " tau=" + format_double(g.tau, 9) +
                ": dual MC " + format_double(rec.dual_mc.estimate, 9) +
                (rec.detector_mc ? ", detector MC " + format_double(rec.detector_mc->estimate, 9) : "") +
                (full ? ", quadrature(M-1) " + format_double(*rec.quadrature_m_minus_one, 9) +
                            ", quadrature(M) " + format_double(*rec.quadrature_m, 9)
                      : ", quadrature " + format_double(*rec.quadrature, 9)));
        }
        report.points.push_back(std::move(rec));
    }

    report.internally_consistent = std::all_of(report.points.begin(), report.points.end(),
                                               [](const auto& p) { return p.oracle_consistent; });
    if (full && report.internally_consistent) {
        const bool route_a = std::all_of(report.points.begin(), report.points.end(),
                                         [](const auto& p) { return p.m_minus_one_agrees; });
        const bool route_b = std::all_of(report.points.begin(), report.points.end(),
                                         [](const auto& p) { return p.m_agrees; });
        if (route_a && !route_b) report.quadrature_route = ExcessShape::MMinusOne;
        if (route_b && !route_a) report.quadrature_route = ExcessShape::M;
        if (!route_a && !route_b) {
            report.internally_consistent = false;
            report.diagnostics.push_back(
                "no single quadrature excess shape agrees with the simulations at every point");
        } else if (route_a && route_b && !insufficient) {
            report.diagnostics.push_back("the grid does not separate the quadrature excess shapes");
        }
    }

    if (!report.internally_consistent) {
        report.verdict = Verdict::InternallyInconsistent;
        return report;
    }
    if (insufficient) {
        report.verdict = Verdict::InsufficientPrecision;
        report.diagnostics.push_back("trials " + std::to_string(trials) + " below the minimum " +
                                     std::to_string(options.min_trials) +
                                     "; every point flagged insufficient-precision");
        return report;
    }

    const auto summary = [&](VariantVerdict PointRecord::*field) {
        bool any_applicable = false;
        bool any_inconsistent = false;
        for (const auto& p : report.points) {
            if (p.*field == VariantVerdict::NotApplicable) continue;
            any_applicable = true;
            if (p.*field == VariantVerdict::Inconsistent) any_inconsistent = true;
        }
        return std::pair{any_applicable && !any_inconsistent, any_inconsistent};
    };
    const auto [paper_ok, paper_bad] = summary(&PointRecord::paper_verdict);
    const auto [candidate_ok, candidate_bad] = summary(&PointRecord::candidate_verdict);
    const bool has_candidate = std::any_of(report.points.begin(), report.points.end(), [](const auto& p) {
        return p.candidate_verdict != VariantVerdict::NotApplicable;
    });
    if (!has_candidate) {
        report.verdict = paper_ok ? Verdict::PaperForm : Verdict::UseQuadrature;
    } else if (paper_ok && candidate_bad) {
        report.verdict = Verdict::PaperForm;
    } else if (candidate_ok && paper_bad) {
        report.verdict = Verdict::CandidateForm;
    } else {
        report.verdict = Verdict::UseQuadrature;
    }
    return report;
}

double validated_pfa(DetectorKind kind, const AdjudicationReport& report, std::int64_t n_cut,
                     std::int64_t m_ref, ThresholdMultiplier tau, double quadrature_tol) {
    if (report.detector != kind) {
        throw InconsistentReport("adjudication report covers " + std::string(to_string(report.detector)) +
                                 ", not " + std::string(to_string(kind)));
    }
    if (report.verdict == Verdict::InternallyInconsistent ||
        report.verdict == Verdict::InsufficientPrecision) {
        std::string why = "adjudication report for " + std::string(to_string(kind)) +
                          " issued no verdict (" + std::string(to_string(report.verdict)) + ")";
        for (const auto& d : report.diagnostics) why += "; " + d;
        throw InconsistentReport(why);
    }
    check_counts(n_cut, m_ref);
    if (is_single_pulse(kind) && n_cut != 1) {
        throw DomainError("validated_pfa: single-pulse detectors take one cell under test");
    }
    if (report.verdict == Verdict::PaperForm || report.verdict == Verdict::CandidateForm) {
        const auto variant = report.verdict == Verdict::PaperForm ? PfaFormulaVariant::PaperForm
                                                                  : PfaFormulaVariant::CandidateForm;
        if (auto v = closed_form_pfa(kind, n_cut, m_ref, tau.value(), variant)) return *v;
    }
    if (!is_full_cfar(kind)) return quadrature_pfa_partial_multi(n_cut, m_ref, tau, quadrature_tol);
    if (!report.quadrature_route) {
        throw InconsistentReport("adjudication report does not identify a quadrature excess shape for " +
                                 std::string(to_string(kind)));
    }
    return quadrature_pfa_full_multi(n_cut, m_ref, tau, quadrature_tol, *report.quadrature_route);
}

}  // namespace gmcfar
