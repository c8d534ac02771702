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
#include "gmcfar/gm_detectors.hpp"

namespace gmcfar {
namespace {

const ThresholdMultiplier kOne(1.0);

TEST(ThresholdMultiplier, Validates) {
    EXPECT_THROW(ThresholdMultiplier(-0.1), DomainError);
    EXPECT_THROW(ThresholdMultiplier{INFINITY}, DomainError);
    EXPECT_THROW(ThresholdMultiplier{NAN}, DomainError);
    EXPECT_EQ(ThresholdMultiplier(0.0).value(), 0.0);
}

TEST(Window, Validates) {
    EXPECT_THROW(Window({}, {1.0}), DomainError);
    EXPECT_THROW(Window({1.0}, {}), DomainError);
    EXPECT_THROW(Window({0.0}, {1.0}), DomainError);
    EXPECT_THROW(Window({1.0}, {-2.0}), DomainError);
    EXPECT_THROW(Window({INFINITY}, {1.0}), DomainError);
}

TEST(PartialSingle, HandExamples) {
    // threshold = beta^(1 - tau M) * prod(z)^tau = 6
    auto d = gm_partial_single(Window({7.0}, {2.0, 3.0}), kOne, 1.0);
    EXPECT_EQ(d.outcome, Outcome::TargetPresent);
    EXPECT_NEAR(d.margin, std::log(7.0 / 6.0), 1e-15);
    d = gm_partial_single(Window({5.0}, {2.0, 3.0}), kOne, 1.0);
    EXPECT_EQ(d.outcome, Outcome::TargetAbsent);
    EXPECT_NEAR(d.margin, std::log(5.0 / 6.0), 1e-15);
}

TEST(PartialSingle, TieIsAbsent) {
    for (double tau : {0.0, 0.3, 1.0, 7.0}) {
        const auto d = gm_partial_single(Window({2.5}, {2.5, 2.5, 2.5}), ThresholdMultiplier(tau), 2.5);
        EXPECT_EQ(d.margin, 0.0);
        EXPECT_EQ(d.outcome, Outcome::TargetAbsent);
    }
}

TEST(PartialSingle, RequiresOneCut) {
    EXPECT_THROW(gm_partial_single(Window({1.0, 2.0}, {1.0}), kOne, 1.0), DomainError);
    EXPECT_THROW(gm_partial_single(Window({1.0}, {1.0}), kOne, 0.0), DomainError);
}

TEST(FullSingle, SingleReferenceCancelsTau) {
    for (double tau : {0.0, 0.5, 3.0}) {
        EXPECT_EQ(gm_full_single(Window({3.0}, {2.0}), ThresholdMultiplier(tau)).outcome, Outcome::TargetPresent);
        EXPECT_EQ(gm_full_single(Window({1.5}, {2.0}), ThresholdMultiplier(tau)).outcome, Outcome::TargetAbsent);
    }
}

TEST(FullSingle, HandExample) {
    // threshold = 2^0 * 16^0.5 = 4
    const auto d = gm_full_single(Window({5.0}, {2.0, 8.0}), ThresholdMultiplier(0.5));
    EXPECT_EQ(d.outcome, Outcome::TargetPresent);
    EXPECT_NEAR(d.margin, std::log(5.0 / 4.0), 1e-15);
}

TEST(PartialMulti, Examples) {
    auto d = gm_partial_multi(Window({2.0, 2.0}, {2.0, 3.0}), kOne, 1.0);
    EXPECT_EQ(d.outcome, Outcome::TargetAbsent);
    EXPECT_NEAR(d.margin, std::log(4.0) - std::log(6.0), 1e-15);
    d = gm_partial_multi(Window({1.5, 1.2}, {9.0, 9.0}), ThresholdMultiplier(0.0), 1.0);
    EXPECT_EQ(d.outcome, Outcome::TargetPresent);
    EXPECT_NEAR(d.margin, std::log(1.8), 1e-15);
}

TEST(FullMulti, Examples) {
    for (double tau : {0.1, 1.0, 10.0}) {
        const auto d = gm_full_multi(Window({3.0}, {2.0}), ThresholdMultiplier(tau));
        EXPECT_EQ(d.outcome, Outcome::TargetPresent);
        EXPECT_NEAR(d.margin, std::log(1.5), 1e-15);
    }
    const auto tie = gm_full_multi(Window({4.2, 4.2, 4.2}, {4.2, 4.2}), ThresholdMultiplier(0.7));
    EXPECT_EQ(tie.margin, 0.0);
    EXPECT_EQ(tie.outcome, Outcome::TargetAbsent);
}

TEST(FullMulti, ScaleInvariant) {
    const Window w({1.7, 2.9, 1.1}, {1.3, 5.0, 2.2, 1.05});
    const auto base = gm_full_multi(w, ThresholdMultiplier(0.8));
    for (double c : {1e-6, 1e6}) {
        std::vector<double> cut(w.cut().begin(), w.cut().end());
        std::vector<double> ref(w.reference().begin(), w.reference().end());
        for (auto& v : cut) v *= c;
        for (auto& v : ref) v *= c;
        const auto scaled = gm_full_multi(Window(cut, ref), ThresholdMultiplier(0.8));
        EXPECT_EQ(scaled.outcome, base.outcome);
        EXPECT_NEAR(scaled.margin, base.margin, 1e-12);
    }
}

TEST(EvaluateDetector, Dispatches) {
    const Window w({5.0}, {2.0, 8.0});
    const ThresholdMultiplier tau(0.5);
    EXPECT_EQ(evaluate_detector(DetectorKind::GmFullSingle, w, tau, 123.0).margin,
              gm_full_single(w, tau).margin);
    EXPECT_EQ(evaluate_detector(DetectorKind::GmPartialSingle, w, tau, 1.5).margin,
              gm_partial_single(w, tau, 1.5).margin);
    EXPECT_EQ(evaluate_detector(DetectorKind::GmPartialMulti, w, tau, 1.5).margin,
              gm_partial_multi(w, tau, 1.5).margin);
    EXPECT_EQ(evaluate_detector(DetectorKind::GmFullMulti, w, tau, 9.0).margin, gm_full_multi(w, tau).margin);
}

}  // namespace
}  // namespace gmcfar
