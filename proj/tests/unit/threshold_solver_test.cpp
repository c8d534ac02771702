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

#include <gtest/gtest.h>

#include <cmath>

#include "gmcfar/error.hpp"
#include "gmcfar/threshold_solver.hpp"

namespace gmcfar {
namespace {

AdjudicationReport validated(DetectorKind kind, Verdict verdict) {
    AdjudicationReport r;
    r.detector = kind;
    r.verdict = verdict;
    r.internally_consistent = true;
    if (is_full_cfar(kind)) r.quadrature_route = ExcessShape::MMinusOne;
    return r;
}

TEST(SolvePartialSingle, Examples) {
    EXPECT_DOUBLE_EQ(solve_tau_partial_single(1, 0.5).value(), 1.0);
    EXPECT_NEAR(solve_tau_partial_single(16, std::pow(1.5, -16)).value(), 0.5, 1e-14);
    EXPECT_NEAR(solve_tau_partial_single(16, 1.52244e-3).value(), 0.5, 1e-6);
    EXPECT_LT(solve_tau_partial_single(4, 1.0 - 1e-12).value(), 1e-12);
    EXPECT_THROW(solve_tau_partial_single(4, 1.0), DomainError);
    EXPECT_THROW(solve_tau_partial_single(4, 0.0), DomainError);
    EXPECT_THROW(solve_tau_partial_single(4, 1e-13), DomainError);
}

TEST(SolvePartialSingle, ReproducesTarget) {
    for (std::int64_t n : {1, 3, 16, 64}) {
        for (double p : {0.3, 1e-3, 1e-9}) {
            const auto tau = solve_tau_partial_single(n, p);
            EXPECT_NEAR(pfa_gm_partial_single(n, tau), p, 1e-14 * p);
        }
    }
}

TEST(SolveNumeric, PartialMultiRoundTrips) {
    const auto r = validated(DetectorKind::GmPartialMulti, Verdict::PaperForm);
    SolverConfig c;
    c.target_pfa = 0.1875;
    EXPECT_NEAR(solve_tau_numeric(DetectorKind::GmPartialMulti, 2, 4, c, r).tau.value(), 1.0, 1e-9);
    c.target_pfa = 1.0 / 256.0;
    const auto s = solve_tau_numeric(DetectorKind::GmPartialMulti, 1, 8, c, r);
    EXPECT_NEAR(s.tau.value(), 1.0, 1e-9);
    EXPECT_LE(s.iterations, 200);
    EXPECT_NEAR(s.achieved_pfa, c.target_pfa, 1e-12 * c.target_pfa);
}

TEST(SolveNumeric, FullMultiThroughQuadrature) {
    const auto r = validated(DetectorKind::GmFullMulti, Verdict::UseQuadrature);
    SolverConfig c;
    c.target_pfa = 1e-4;
    const auto s = solve_tau_numeric(DetectorKind::GmFullMulti, 2, 6, c, r);
    EXPECT_NEAR(quadrature_pfa_full_multi(2, 6, s.tau, 1e-13, ExcessShape::MMinusOne), 1e-4, 1e-9 * 1e-4);
}

TEST(SolveNumeric, SingleReferenceIsUnreachable) {
    SolverConfig c;
    c.target_pfa = 0.1;
    EXPECT_THROW(solve_tau_numeric(DetectorKind::GmFullMulti, 2, 1, c,
                                   validated(DetectorKind::GmFullMulti, Verdict::CandidateForm)),
                 UnreachableTarget);
    EXPECT_THROW(solve_tau_numeric(DetectorKind::GmFullSingle, 1, 1, c,
                                   validated(DetectorKind::GmFullSingle, Verdict::CandidateForm)),
                 UnreachableTarget);
}

TEST(SolveNumeric, TargetAboveZeroThresholdValue) {
    SolverConfig c;
    c.target_pfa = 0.95;
    // Pfa(tau = 0) = 8/9 for the full single-pulse detector with eight cells.
    EXPECT_THROW(solve_tau_numeric(DetectorKind::GmFullSingle, 1, 8, c,
                                   validated(DetectorKind::GmFullSingle, Verdict::CandidateForm)),
                 UnreachableTarget);
}

TEST(SolveNumeric, IterationBudget) {
    SolverConfig c;
    c.target_pfa = 1e-6;
    c.max_iterations = 3;
    EXPECT_THROW(solve_tau_numeric(DetectorKind::GmPartialMulti, 2, 4, c,
                                   validated(DetectorKind::GmPartialMulti, Verdict::PaperForm)),
                 NumericalFailure);
}

}  // namespace
}  // namespace gmcfar
