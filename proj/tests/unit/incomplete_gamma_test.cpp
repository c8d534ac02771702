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

#include <boost/math/special_functions/gamma.hpp>

#include "gmcfar/error.hpp"
#include "gmcfar/incomplete_gamma.hpp"

namespace gmcfar {
namespace {

TEST(RegularizedGammaQ, HighPrecisionValues) {
    const struct {
        double a, x, q;
    } cases[] = {{2, 1, 0.73575888234288464319},   {5, 3.5, 0.72544495330960460762},
                 {64, 100, 4.8725836602810382909e-5}, {30, 30, 0.47571698610631993096},
                 {1, 0.5, 0.6065306597126334236}};
    for (const auto& c : cases) EXPECT_NEAR(regularized_gamma_q(c.a, c.x), c.q, 1e-13 * c.q) << c.a << " " << c.x;
}

TEST(RegularizedGammaQ, AgreesWithBoost) {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.0, 7.5, 16.0, 31.0, 64.0, 150.0}) {
        for (int i = 0; i <= 300; ++i) {
            const double x = 0.5 * i;
            const double ref = boost::math::gamma_q(a, x);
            if (ref < 1e-280) continue;
            worst = std::max(worst, std::abs(regularized_gamma_q(a, x) - ref) / ref);
        }
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(RegularizedGammaQ, Complement) {
    for (double a : {1.0, 3.0, 40.0}) {
        for (double x : {0.1, 2.0, 39.0, 80.0}) {
            EXPECT_NEAR(regularized_gamma_q(a, x) + regularized_gamma_p(a, x), 1.0, 1e-14);
        }
    }
    EXPECT_EQ(regularized_gamma_q(3.0, 0.0), 1.0);
    EXPECT_THROW(regularized_gamma_q(0.0, 1.0), DomainError);
    EXPECT_THROW(regularized_gamma_q(1.0, -1.0), DomainError);
}

TEST(GammaDensity, Values) {
    EXPECT_NEAR(gamma_density(1.0, 2.0), std::exp(-2.0), 1e-16);
    EXPECT_NEAR(gamma_density(3.0, 2.0), 2.0 * std::exp(-2.0), 1e-15);
    EXPECT_EQ(gamma_density(3.0, 0.0), 0.0);
    EXPECT_NEAR(gamma_density(40.0, 39.0), boost::math::gamma_p_derivative(40.0, 39.0), 1e-13 * 0.0637);
}

}  // namespace
}  // namespace gmcfar
