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

#include "gmcfar/pareto_mc.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gmcfar/error.hpp"
#include "gmcfar/format.hpp"

namespace gmcfar {

EstimateWithCI empirical_pfa(DetectorKind kind, std::int64_t n_cut, std::int64_t m_ref,
                             ThresholdMultiplier tau, const ParetoParams& params,
                             std::uint64_t trials, const RandomStream& stream, Execution exec,
                             std::optional<double> detector_scale) {
    if (trials == 0) throw DomainError("empirical_pfa: need at least one trial");
    if (n_cut < 1 || m_ref < 1) throw DomainError("empirical_pfa: n_cut and m_ref must be >= 1");
    if (is_single_pulse(kind) && n_cut != 1) {
        throw DomainError("empirical_pfa: single-pulse detectors take one cell under test");
    }
    const double scale = detector_scale.value_or(params.scale());
    const auto n = static_cast<std::size_t>(n_cut);
    const auto m = static_cast<std::size_t>(m_ref);

    const std::uint64_t rejections =
        parallel_count(trials, exec, [&](std::uint64_t begin, std::uint64_t end) {
            std::vector<double> cells(n + m);
            std::uint64_t hits = 0;
            for (std::uint64_t t = begin; t < end; ++t) {
                auto gen = stream.trial(t);
                for (auto& c : cells) c = dual_to_pareto(params, -std::log(gen.uniform()));
                const std::span<const double> all(cells);
                const WindowView window(all.first(n), all.subspan(n));
                if (evaluate_detector(kind, window, tau, scale).outcome == Outcome::TargetPresent) {
                    ++hits;
                }
            }
            return hits;
        });
    return make_estimate(rejections, trials, stream.seed, stream.stream_id);
}

RandomStream sweep_point_stream(std::uint64_t seed, std::size_t index) {
    return {seed, derive_stream_id(0x5EEE9ull, index)};
}

HomogeneityReport cfar_grid_check(const SweepSpec& spec, Execution exec) {
    if (spec.params_grid.size() < 2) {
        throw DomainError("cfar_grid_check: need at least two grid points");
    }
    if (spec.trials == 0) throw DomainError("cfar_grid_check: need at least one trial");
    HomogeneityReport report{spec, {}, {}, 0.001, false};
    std::vector<EstimateWithCI> estimates;
    for (std::size_t i = 0; i < spec.params_grid.size(); ++i) {
        const auto& params = spec.params_grid[i];
        auto est = empirical_pfa(spec.kind, spec.n_cut, spec.m_ref, ThresholdMultiplier(spec.tau),
                                 params, spec.trials, sweep_point_stream(spec.seed, i), exec,
                                 spec.detector_scale);
        report.points.push_back({params, est});
        estimates.push_back(est);
    }
    report.test = chi_square_homogeneity(estimates);
    report.homogeneous = report.test.p_value > report.alpha;
    return report;
}

std::string to_csv(const HomogeneityReport& report) {
    std::ostringstream out;
    out << "alpha,beta,trials,rejections,estimate,ci_low,ci_high\n";
    for (const auto& p : report.points) {
        out << format_double(p.params.shape()) << ',' << format_double(p.params.scale()) << ','
            << p.estimate.trials << ',' << p.estimate.rejections << ','
            << format_double(p.estimate.estimate) << ',' << format_double(p.estimate.ci_low) << ','
            << format_double(p.estimate.ci_high) << '\n';
    }
    return out.str();
}

std::string to_json(const HomogeneityReport& report) {
    nlohmann::ordered_json doc;
    doc["detector"] = to_string(report.spec.kind);
    doc["n"] = report.spec.n_cut;
    doc["m"] = report.spec.m_ref;
    doc["tau"] = report.spec.tau;
    doc["trials"] = report.spec.trials;
    doc["seed"] = report.spec.seed;
    doc["detector_scale"] = report.spec.detector_scale ? nlohmann::ordered_json(*report.spec.detector_scale)
                                                       : nlohmann::ordered_json(nullptr);
    auto& rows = doc["points"] = nlohmann::ordered_json::array();
    for (const auto& p : report.points) {
        rows.push_back({{"alpha", p.params.shape()},
                        {"beta", p.params.scale()},
                        {"trials", p.estimate.trials},
                        {"rejections", p.estimate.rejections},
                        {"estimate", p.estimate.estimate},
                        {"ci_low", p.estimate.ci_low},
                        {"ci_high", p.estimate.ci_high},
                        {"stream_id", p.estimate.stream_id}});
    }
    doc["chi_square"] = {{"statistic", report.test.statistic},
                         {"dof", report.test.dof},
                         {"p_value", report.test.p_value},
                         {"significance", report.alpha},
                         {"homogeneous", report.homogeneous}};
    return doc.dump(2) + "\n";
}

}  // namespace gmcfar
