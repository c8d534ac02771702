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

#include "gmcfar/clutter_models.hpp"

#include <cmath>
#include <string>

#include "gmcfar/error.hpp"

namespace gmcfar {

ParetoParams::ParetoParams(double shape, double scale) : shape_(shape), scale_(scale) {
    if (!(shape > 0.0) || !std::isfinite(shape)) {
        throw DomainError("Pareto shape must be positive and finite, got " + std::to_string(shape));
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError("Pareto scale must be positive and finite, got " + std::to_string(scale));
    }
}

double pareto_cdf(const ParetoParams& params, double t) {
    if (std::isnan(t)) throw DomainError("pareto_cdf: t is NaN");
    if (t < params.scale()) return 0.0;
    if (std::isinf(t)) return 1.0;
    // 1 - exp(shape * ln(scale/t)) keeps full precision in the lower tail.
    return -std::expm1(params.shape() * std::log(params.scale() / t));
}

double pareto_quantile(const ParetoParams& params, double u) {
    if (!(u >= 0.0 && u < 1.0)) {
        throw DomainError("pareto_quantile: u must lie in [0, 1), got " + std::to_string(u));
    }
    const double z = params.scale() * std::exp(-std::log1p(-u) / params.shape());
    if (!std::isfinite(z)) {
        throw OverflowError("pareto_quantile: result exceeds the double range");
    }
    return z;
}

double dual_to_pareto(const ParetoParams& params, double x_star) {
    if (!(x_star >= 0.0)) {
        throw DomainError("dual_to_pareto: dual value must be non-negative");
    }
    const double z = params.scale() * std::exp(x_star / params.shape());
    if (!std::isfinite(z)) {
        throw OverflowError("dual_to_pareto: result exceeds the double range");
    }
    return z;
}

double pareto_to_dual(const ParetoParams& params, double z) {
    if (!(z >= params.scale())) {
        throw DomainError("pareto_to_dual: value below the Pareto scale");
    }
    return params.shape() * std::log(z / params.scale());
}

std::vector<double> sample_exponential_unit(const RandomStream& stream, std::size_t count) {
    std::vector<double> out(count);
    auto gen = stream.sequence();
    for (auto& x : out) x = -std::log(gen.uniform());
    return out;
}

std::vector<double> sample_pareto(const ParetoParams& params, const RandomStream& stream,
                                  std::size_t count) {
    auto out = sample_exponential_unit(stream, count);
    for (auto& x : out) x = dual_to_pareto(params, x);
    return out;
}

}  // namespace gmcfar
