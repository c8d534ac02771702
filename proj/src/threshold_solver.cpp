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

#include "gmcfar/threshold_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmcfar/error.hpp"
#include "gmcfar/format.hpp"
#include "gmcfar/quadrature.hpp"

namespace gmcfar {
namespace {

void check_target(double target) {
    if (!(target > 0.0 && target < 1.0)) {
        throw DomainError("target false-alarm probability must lie in (0, 1), got " +
                          format_double(target));
    }
    if (target < kMinTargetPfa) {
        throw DomainError("target false-alarm probability below " + format_double(kMinTargetPfa) +
                          " is not supported");
    }
}

}  // namespace

ThresholdMultiplier solve_tau_partial_single(std::int64_t n_ref, double target) {
    check_target(target);
    if (n_ref < 1) throw DomainError("n_ref must be at least 1");
    return ThresholdMultiplier(std::expm1(-std::log(target) / static_cast<double>(n_ref)));
}

SolverResult solve_tau_numeric(DetectorKind kind, std::int64_t n_cut, std::int64_t m_ref,
                               const SolverConfig& config, const AdjudicationReport& report) {
    check_target(config.target_pfa);
    if (config.max_iterations < 1) throw DomainError("max_iterations must be positive");
    if (!(config.initial_tau_hi > 0.0) || !std::isfinite(config.initial_tau_hi)) {
        throw DomainError("initial_tau_hi must be positive and finite");
    }
    if (is_full_cfar(kind) && m_ref == 1) {
        throw UnreachableTarget(
            "with a single reference cell the full-CFAR threshold reduces to the reference "
            "cell itself; the false-alarm probability does not depend on tau");
    }
    const double target = config.target_pfa;
    const double abs_tol = config.resolved_abs_tol();
    // The quadrature route is held to a tenth of the solver tolerance.
    const double quad_tol = std::clamp(abs_tol / (10.0 * target), kMinRelTol, 1e-6);
    const auto pfa = [&](double tau) {
        return validated_pfa(kind, report, n_cut, m_ref, ThresholdMultiplier(tau), quad_tol);
    };

    const double at_zero = pfa(0.0);
    if (std::abs(at_zero - target) <= abs_tol) return {ThresholdMultiplier(0.0), at_zero, 0};
    if (at_zero < target) {
        throw UnreachableTarget("target " + format_double(target, 9) + " exceeds Pfa(tau = 0) = " +
                                format_double(at_zero, 9));
    }

    int iterations = 0;
    double lo = 0.0;
    double hi = config.initial_tau_hi;
    double f_hi = pfa(hi);
    while (f_hi >= target) {
        if (++iterations > config.max_iterations || hi > 1e300) {
            throw NumericalFailure("could not bracket the target false-alarm probability", f_hi - target);
        }
        lo = hi;
        hi *= 2.0;
        f_hi = pfa(hi);
    }
    if (std::abs(f_hi - target) <= abs_tol) return {ThresholdMultiplier(hi), f_hi, iterations};

    double best_tau = hi;
    double best_pfa = f_hi;
    while (true) {
        if (++iterations > config.max_iterations) {
            throw NumericalFailure("bisection exhausted max_iterations; bracket [" + format_double(lo) +
                                       ", " + format_double(hi) + "]",
                                   std::abs(best_pfa - target));
        }
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const double f_mid = pfa(mid);
        if (std::abs(f_mid - target) < std::abs(best_pfa - target)) {
            best_tau = mid;
            best_pfa = f_mid;
        }
        if (std::abs(f_mid - target) <= abs_tol) break;
        if (f_mid >= target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (std::abs(best_pfa - target) > abs_tol) {
        throw NumericalFailure("bracket collapsed before reaching the tolerance", std::abs(best_pfa - target));
    }
    return {ThresholdMultiplier(best_tau), best_pfa, iterations};
}

}  // namespace gmcfar
