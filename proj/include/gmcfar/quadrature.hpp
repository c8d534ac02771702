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

#include <functional>
#include <span>

namespace gmcfar {

inline constexpr double kMinRelTol = 2.5e-14;

struct QuadratureResult {
    double value = 0.0;
    /// Estimated absolute error.
    double error = 0.0;
    int intervals = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod integration over [a, b].
///
/// Bisects the interval with the largest error estimate until the summed
/// estimate drops below max(rel_tol * |value|, abs_floor). Optional interior
/// breakpoints seed the initial partition. rel_tol is raised to
/// kMinRelTol, below which the Kronrod roundoff floor cannot be beaten. Throws NumericalFailure carrying
/// the achieved error bound when max_intervals is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_floor = 1e-300,
                                    std::span<const double> breakpoints = {},
                                    int max_intervals = 4000);

}  // namespace gmcfar
