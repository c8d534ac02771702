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

#include "gmcfar/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "gmcfar/error.hpp"

namespace gmcfar {

bool EstimateWithCI::consistent_with(double value, double band) const noexcept {
    if (trials == 0 || !(value >= 0.0 && value <= 1.0)) return false;
    if (value == 0.0) return rejections == 0;
    if (value == 1.0) return rejections == trials;
    // Exact two-sided binomial test at the tail mass of a normal band. With
    // a fraction of a hit expected the normal approximation rejects far too
    // often.
    const double level = std::erfc(band / std::numbers::sqrt2);
    const double n = static_cast<double>(trials);
    const double k = static_cast<double>(rejections);
    const double below = rejections == trials ? 1.0 : boost::math::ibetac(k + 1.0, n - k, value);
    const double above = rejections == 0 ? 1.0 : boost::math::ibeta(k, n - k + 1.0, value);
    return 2.0 * std::min(below, above) >= level;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) throw DomainError("wilson_interval: need at least one trial");
    if (successes > trials) throw DomainError("wilson_interval: successes exceed trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return {std::clamp(std::min(centre - half, p), 0.0, 1.0),
            std::clamp(std::max(centre + half, p), 0.0, 1.0)};
}

EstimateWithCI make_estimate(std::uint64_t rejections, std::uint64_t trials, std::uint64_t seed,
                             std::uint64_t stream_id) {
    const auto ci = wilson_interval(rejections, trials);
    EstimateWithCI e;
    e.estimate = static_cast<double>(rejections) / static_cast<double>(trials);
    e.ci_low = ci.low;
    e.ci_high = ci.high;
    e.trials = trials;
    e.rejections = rejections;
    e.seed = seed;
    e.stream_id = stream_id;
    return e;
}

bool mutually_consistent(const EstimateWithCI& a, const EstimateWithCI& b, double band) {
    if (a.trials == 0 || b.trials == 0) return false;
    const double na = static_cast<double>(a.trials);
    const double nb = static_cast<double>(b.trials);
    const double pooled = static_cast<double>(a.rejections + b.rejections) / (na + nb);
    const double spread = std::sqrt(pooled * (1.0 - pooled) * (1.0 / na + 1.0 / nb));
    return std::abs(a.estimate - b.estimate) <= band * spread;
}

HomogeneityTest chi_square_homogeneity(std::span<const EstimateWithCI> estimates) {
    if (estimates.size() < 2) throw DomainError("homogeneity test needs at least two groups");
    double total = 0.0;
    double hits = 0.0;
    for (const auto& e : estimates) {
        total += static_cast<double>(e.trials);
        hits += static_cast<double>(e.rejections);
    }
    HomogeneityTest out;
    out.dof = static_cast<int>(estimates.size()) - 1;
    const double pooled = hits / total;
    if (pooled <= 0.0 || pooled >= 1.0) return out;  // degenerate table: every group identical
    for (const auto& e : estimates) {
        const double n = static_cast<double>(e.trials);
        const double r = static_cast<double>(e.rejections);
        const double expect_hit = n * pooled;
        const double expect_miss = n * (1.0 - pooled);
        out.statistic += (r - expect_hit) * (r - expect_hit) / expect_hit +
                         (n - r - expect_miss) * (n - r - expect_miss) / expect_miss;
    }
    const boost::math::chi_squared dist(out.dof);
    out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
    return out;
}

double kolmogorov_survival(double lambda) {
    if (lambda < 0.2) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 200; ++j) {
        const double term = sign * std::exp(-2.0 * j * j * lambda * lambda);
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsTest ks_test(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw DomainError("ks_test: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    const double root = std::sqrt(n);
    // Stephens' finite-sample correction.
    return {d, kolmogorov_survival((root + 0.12 + 0.11 / root) * d)};
}

}  // namespace gmcfar
