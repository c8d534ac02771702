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
#include <vector>

#include "gmcfar/error.hpp"
#include "gmcfar/statistics.hpp"

namespace gmcfar {
namespace {

TEST(Wilson, ReferenceValues) {
    auto i = wilson_interval(7, 100);
    EXPECT_NEAR(i.low, 0.03431926106727266, 1e-14);
    EXPECT_NEAR(i.high, 0.13749514739073504, 1e-14);
    i = wilson_interval(0, 50);
    EXPECT_EQ(i.low, 0.0);
    EXPECT_NEAR(i.high, 0.07134759913335874, 1e-14);
    i = wilson_interval(187500, 1000000);
    EXPECT_NEAR(i.low, 0.18673620278120828, 1e-14);
    EXPECT_NEAR(i.high, 0.18826619812133172, 1e-14);
    EXPECT_THROW(wilson_interval(1, 0), DomainError);
    EXPECT_THROW(wilson_interval(3, 2), DomainError);
}

TEST(Estimate, SigmaAndConsistency) {
    const auto e = make_estimate(187500, 1000000, 1, 2);
    EXPECT_EQ(e.estimate, 0.1875);
    EXPECT_NEAR(e.sigma(), std::sqrt(0.1875 * 0.8125 / 1e6), 1e-7);
    EXPECT_TRUE(e.consistent_with(0.1875));
    EXPECT_TRUE(e.consistent_with(0.1875 + 3.9 * std::sqrt(0.1875 * 0.8125 / 1e6)));
    EXPECT_FALSE(e.consistent_with(0.1875 + 4.1 * std::sqrt(0.1875 * 0.8125 / 1e6)));
    EXPECT_FALSE(e.consistent_with(1.5));
}

TEST(Estimate, LowCountsUseHypothesisedSpread) {
    // 8 hits where 20 are expected is 2.7 sigma under the hypothesis.
    const auto e = make_estimate(8, 1000000, 1, 2);
    EXPECT_TRUE(e.consistent_with(2.01e-5));
    EXPECT_FALSE(e.consistent_with(5e-5));
    const auto none = make_estimate(0, 1000000, 1, 2);
    EXPECT_TRUE(none.consistent_with(1e-5));
    EXPECT_FALSE(none.consistent_with(1e-4));
}

TEST(Estimate, RareEventsUseExactTails) {
    // 0.04 hits expected: one hit has probability 0.039, three 1.1e-5.
    const double p0 = 17.0 * std::ldexp(1.0, -32);
    EXPECT_TRUE(make_estimate(1, 10000000, 1, 2).consistent_with(p0));
    EXPECT_TRUE(make_estimate(2, 10000000, 1, 2).consistent_with(p0));
    EXPECT_FALSE(make_estimate(3, 10000000, 1, 2).consistent_with(p0));
    EXPECT_TRUE(make_estimate(0, 10, 1, 2).consistent_with(0.0));
    EXPECT_FALSE(make_estimate(1, 10, 1, 2).consistent_with(0.0));
    EXPECT_TRUE(make_estimate(10, 10, 1, 2).consistent_with(1.0));
}

TEST(Estimate, MutualConsistency) {
    const auto a = make_estimate(5000, 100000, 1, 1);
    const auto b = make_estimate(5100, 100000, 1, 2);
    const auto c = make_estimate(6000, 100000, 1, 3);
    EXPECT_TRUE(mutually_consistent(a, b));
    EXPECT_FALSE(mutually_consistent(a, c));
    EXPECT_TRUE(mutually_consistent(make_estimate(0, 10, 0, 0), make_estimate(0, 20, 0, 0)));
}

TEST(ChiSquare, ReferenceValues) {
    const std::vector<EstimateWithCI> groups{make_estimate(120, 1000, 0, 0), make_estimate(150, 1000, 0, 1),
                                             make_estimate(95, 1000, 0, 2)};
    const auto t = chi_square_homogeneity(groups);
    EXPECT_NEAR(t.statistic, 14.19250864287385, 1e-10);
    EXPECT_EQ(t.dof, 2);
    EXPECT_NEAR(t.p_value, 0.0008282012964784484, 1e-12);
}

TEST(ChiSquare, DegenerateTables) {
    const std::vector<EstimateWithCI> all_zero{make_estimate(0, 100, 0, 0), make_estimate(0, 100, 0, 1)};
    EXPECT_EQ(chi_square_homogeneity(all_zero).p_value, 1.0);
    const std::vector<EstimateWithCI> one{make_estimate(3, 100, 0, 0)};
    EXPECT_THROW(chi_square_homogeneity(one), DomainError);
}

TEST(Kolmogorov, SurvivalReferenceValues) {
    EXPECT_NEAR(kolmogorov_survival(0.5), 0.9639452436648751, 1e-12);
    EXPECT_NEAR(kolmogorov_survival(1.0), 0.26999967167735456, 1e-12);
    EXPECT_NEAR(kolmogorov_survival(1.36), 0.049485876755377876, 1e-12);
    EXPECT_NEAR(kolmogorov_survival(2.0), 0.0006709252557796953, 1e-12);
}

TEST(KsTest, Statistic) {
    const std::vector<double> x{1.2, 1.5, 1.05, 3.0, 2.2, 1.8, 1.01, 4.5, 1.3, 2.7};
    const auto r = ks_test(x, [](double t) { return t < 1.0 ? 0.0 : 1.0 - 1.0 / (t * t); });
    EXPECT_NEAR(r.statistic, 0.19338842975206616, 1e-15);
    // Asymptotic with the small-sample correction; the exact value is 0.782.
    EXPECT_NEAR(r.p_value, 0.78, 0.05);
}

TEST(KsTest, RejectsWrongLaw) {
    std::vector<double> x;
    for (int i = 1; i <= 1000; ++i) x.push_back(i / 1001.0);
    const auto uniform = ks_test(x, [](double t) { return std::clamp(t, 0.0, 1.0); });
    EXPECT_GT(uniform.p_value, 0.99);
    const auto skewed = ks_test(x, [](double t) { return std::clamp(t * t, 0.0, 1.0); });
    EXPECT_LT(skewed.p_value, 1e-6);
}

}  // namespace
}  // namespace gmcfar
