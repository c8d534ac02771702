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

#include <cstddef>
#include <vector>

#include "gmcfar/random_stream.hpp"

namespace gmcfar {

/// Pareto Type I law, P(Z <= t) = 1 - (scale / t)^shape for t >= scale.
class ParetoParams {
public:
    /// Throws DomainError unless both values are positive and finite.
    ParetoParams(double shape, double scale);

    double shape() const noexcept { return shape_; }
    double scale() const noexcept { return scale_; }

    friend bool operator==(const ParetoParams&, const ParetoParams&) = default;

private:
    double shape_;
    double scale_;
};

double pareto_cdf(const ParetoParams& params, double t);

/// scale * (1 - u)^(-1/shape). Throws OverflowError when the result is not
/// finite.
double pareto_quantile(const ParetoParams& params, double u);

/// Maps a unit-exponential dual value onto the Pareto variate it generates.
double dual_to_pareto(const ParetoParams& params, double x_star);

/// Inverse of dual_to_pareto: shape * ln(z / scale). Requires z >= scale.
double pareto_to_dual(const ParetoParams& params, double z);

std::vector<double> sample_exponential_unit(const RandomStream& stream, std::size_t count);

/// Inverse-CDF sampling routed through the dual transform.
std::vector<double> sample_pareto(const ParetoParams& params, const RandomStream& stream,
                                  std::size_t count);

}  // namespace gmcfar
