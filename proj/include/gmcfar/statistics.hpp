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
#include <span>
#include <vector>

namespace gmcfar {

/// Two-sided 95% normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

/// Width of the consistency band in standard deviations.
inline constexpr double kSigmaBand = 4.0;

/// Monte Carlo probability estimate with its 95% Wilson score interval.
struct EstimateWithCI {
    double estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t rejections = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    /// Standard deviation implied by the Wilson interval half-width.
    double sigma() const noexcept { return (ci_high - ci_low) / (2.0 * kZ95); }

    /// Exact two-sided binomial test of `value`, at the significance level
    /// of a normal band of `band` standard deviations.
    bool consistent_with(double value, double band = kSigmaBand) const noexcept;

    friend bool operator==(const EstimateWithCI&, const EstimateWithCI&) = default;
};

struct Interval {
    double low;
    double high;
};

/// Wilson score interval for `successes` out of `trials` at normal quantile z.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

EstimateWithCI make_estimate(std::uint64_t rejections, std::uint64_t trials, std::uint64_t seed,
                             std::uint64_t stream_id);

/// Pooled two-proportion test: the estimates agree within band standard
/// errors of their difference under a common rejection probability.
bool mutually_consistent(const EstimateWithCI& a, const EstimateWithCI& b,
                         double band = kSigmaBand);

struct HomogeneityTest {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Pearson chi-square test on the 2 x k table of (rejections, non-rejections).
HomogeneityTest chi_square_homogeneity(std::span<const EstimateWithCI> estimates);

struct KsTest {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// One-sample Kolmogorov-Smirnov test against a continuous CDF; the sample is
/// copied and sorted.
KsTest ks_test(std::vector<double> sample, const std::function<double(double)>& cdf);

/// Survival function of the Kolmogorov distribution.
double kolmogorov_survival(double lambda);

}  // namespace gmcfar
