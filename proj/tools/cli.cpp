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

#include "gmcfar/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gmcfar/clutter_models.hpp"
#include "gmcfar/error.hpp"
#include "gmcfar/format.hpp"
#include "gmcfar/pareto_mc.hpp"
#include "gmcfar/report_io.hpp"
#include "gmcfar/threshold_solver.hpp"
#include "gmcfar/verify.hpp"

namespace gmcfar::cli {
namespace {

constexpr double kOracleTol = 1e-10;
constexpr std::uint64_t kSimulateStream = 0x51D1ull;
constexpr std::uint64_t kSampleStream = 0x5A3Bull;

struct Globals {
    std::uint64_t seed = 1;
    std::string format = "csv";
    unsigned threads = 0;

    bool json() const { return format == "json"; }
    Execution exec() const { return {threads}; }
};

// Detector configuration as typed on the command line. Single-pulse kinds
// read the reference length from --n.
struct Geometry {
    std::string kind_name;
    std::int64_t n = 0;
    std::optional<std::int64_t> m;

    DetectorKind kind() const { return parse_detector_kind(kind_name); }

    std::int64_t n_cut() const { return is_single_pulse(kind()) ? 1 : n; }

    std::int64_t m_ref() const {
        if (is_single_pulse(kind())) {
            if (m) throw DomainError("single-pulse kinds take the reference length from --n; drop --m");
            return n;
        }
        if (!m) throw DomainError("--m is required for " + kind_name);
        return *m;
    }
};

// Where the validated form comes from: a forced --variant, a cached report,
// or an adjudication run on the spot.
struct FormSource {
    std::string variant;
    std::string report_path;
    std::uint64_t adjudication_trials = 1'000'000;
};

struct Context {
    const Globals& globals;
    const Hooks& hooks;
    std::ostream& out;
    std::ostream& err;
};

std::vector<std::string> kind_names() {
    std::vector<std::string> names;
    for (auto k : kAllDetectorKinds) names.emplace_back(to_string(k));
    return names;
}

void add_geometry(CLI::App* cmd, Geometry& g) {
    cmd->add_option("--kind", g.kind_name, "Detector kind")->required()->check(CLI::IsMember(kind_names()));
    cmd->add_option("--n", g.n, "Cells under test (reference length for single-pulse kinds)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--m", g.m, "Reference cells (multi-pulse kinds)")
        ->check(CLI::PositiveNumber);
}

void add_form_source(CLI::App* cmd, FormSource& src) {
    cmd->add_option("--variant", src.variant, "Force a formula instead of the validated one")
        ->check(CLI::IsMember({"paper-form", "candidate-form", "quadrature"}));
    cmd->add_option("--report", src.report_path, "Adjudication cache (read, or written after a fresh run)");
    cmd->add_option("--adjudication-trials", src.adjudication_trials,
                    "Dual Monte Carlo trials when adjudicating on the spot")
        ->check(CLI::PositiveNumber);
}

std::optional<AdjudicationReport> cached_report(const std::string& path, DetectorKind kind) {
    if (path.empty()) return std::nullopt;
    const auto bundle = load_bundle(path);
    if (!bundle) return std::nullopt;
    for (const auto& r : *bundle) {
        if (r.detector == kind) return r;
    }
    return std::nullopt;
}

AdjudicationReport adjudicated_report(const Context& ctx, const FormSource& src, DetectorKind kind) {
    if (auto cached = cached_report(src.report_path, kind)) return *cached;
    ctx.err << "adjudicating " << to_string(kind) << " at " << src.adjudication_trials
            << " trials per point\n";
    AdjudicationOptions options;
    options.exec = ctx.globals.exec();
    options.closed_form = ctx.hooks.closed_form;
    const auto grid = default_adjudication_grid(kind);
    auto report = adjudicate(kind, grid, src.adjudication_trials, ctx.globals.seed, kOracleTol, options);
    if (!src.report_path.empty()) {
        std::vector<AdjudicationReport> bundle;
        if (auto existing = load_bundle(src.report_path)) bundle = std::move(*existing);
        bundle.push_back(report);
        save_bundle(src.report_path, bundle);
    }
    return report;
}

ExcessShape default_route(const FormSource& src, DetectorKind kind) {
    if (auto cached = cached_report(src.report_path, kind); cached && cached->quadrature_route) {
        return *cached->quadrature_route;
    }
    return ExcessShape::MMinusOne;
}

// A report that names the forced variant as validated, so every command runs
// through validated_pfa whichever way the form was chosen.
AdjudicationReport forced_report(const FormSource& src, DetectorKind kind, std::int64_t n_cut,
                                 std::int64_t m_ref) {
    AdjudicationReport r;
    r.detector = kind;
    r.internally_consistent = true;
    const auto variant = parse_formula_variant(src.variant);
    if (variant == PfaFormulaVariant::OracleQuadrature) {
        r.verdict = Verdict::UseQuadrature;
    } else {
        if (!closed_form_pfa(kind, n_cut, m_ref, 1.0, variant)) {
            throw DomainError(std::string(to_string(kind)) + " has no " + src.variant + " at n=" +
                              std::to_string(n_cut) + " m=" + std::to_string(m_ref));
        }
        r.verdict = variant == PfaFormulaVariant::PaperForm ? Verdict::PaperForm : Verdict::CandidateForm;
    }
    if (is_full_cfar(kind)) r.quadrature_route = default_route(src, kind);
    return r;
}

AdjudicationReport resolve_report(const Context& ctx, const FormSource& src, DetectorKind kind,
                                  std::int64_t n_cut, std::int64_t m_ref) {
    if (!src.variant.empty()) return forced_report(src, kind, n_cut, m_ref);
    return adjudicated_report(ctx, src, kind);
}

std::string form_name(const AdjudicationReport& r) {
    switch (r.verdict) {
        case Verdict::PaperForm: return "paper-form";
        case Verdict::CandidateForm: return "candidate-form";
        default: return "quadrature";
    }
}

std::string optional_field(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

struct Solution {
    double tau;
    double achieved;
    int iterations;
};

Solution solve(DetectorKind kind, std::int64_t n_cut, std::int64_t m_ref, double target,
               const AdjudicationReport& report) {
    if (is_full_cfar(kind) && m_ref == 1) {
        throw UnreachableTarget(
            "with a single reference cell the full-CFAR false-alarm probability does not depend on "
            "tau; no threshold reaches " + format_double(target, 9));
    }
    if (kind == DetectorKind::GmPartialSingle && report.verdict == Verdict::PaperForm) {
        const auto tau = solve_tau_partial_single(m_ref, target);
        return {tau.value(), validated_pfa(kind, report, n_cut, m_ref, tau), 0};
    }
    SolverConfig config;
    config.target_pfa = target;
    const auto r = solve_tau_numeric(kind, n_cut, m_ref, config, report);
    return {r.tau.value(), r.achieved_pfa, r.iterations};
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot open " + path + " for writing");
    return file;
}

// pfa ------------------------------------------------------------------------

struct PfaArgs {
    Geometry geometry;
    double tau = 0.0;
    FormSource source;
    bool all_variants = false;
};

int cmd_pfa(const Context& ctx, const PfaArgs& a) {
    const auto kind = a.geometry.kind();
    const auto n_cut = a.geometry.n_cut();
    const auto m_ref = a.geometry.m_ref();
    const ThresholdMultiplier tau(a.tau);
    const std::string kind_name(to_string(kind));

    if (a.all_variants) {
        const auto paper = ctx.hooks.closed_form(kind, n_cut, m_ref, a.tau, PfaFormulaVariant::PaperForm);
        const auto candidate =
            ctx.hooks.closed_form(kind, n_cut, m_ref, a.tau, PfaFormulaVariant::CandidateForm);
        std::optional<ExcessShape> route;
        double quad = 0.0;
        if (is_full_cfar(kind)) {
            route = default_route(a.source, kind);
            quad = quadrature_pfa_full_multi(n_cut, m_ref, tau, kOracleTol, *route);
        } else {
            quad = quadrature_pfa_partial_multi(n_cut, m_ref, tau, kOracleTol);
        }
        const std::string route_name = route ? std::string(to_string(*route)) : "";
        if (ctx.globals.json()) {
            Json doc{{"detector", kind_name},     {"n_cut", n_cut},
                     {"m_ref", m_ref},            {"tau", a.tau},
                     {"paper_form", optional_json(paper)},
                     {"candidate_form", optional_json(candidate)},
                     {"quadrature", quad},
                     {"quadrature_route", route ? Json(route_name) : Json(nullptr)}};
            ctx.out << doc.dump(2) << '\n';
        } else {
            ctx.out << "detector,n_cut,m_ref,tau,paper_form,candidate_form,quadrature,quadrature_route\n"
                    << kind_name << ',' << n_cut << ',' << m_ref << ',' << format_double(a.tau) << ','
                    << optional_field(paper) << ',' << optional_field(candidate) << ','
                    << format_double(quad) << ',' << route_name << '\n';
        }
        return kExitOk;
    }

    const auto report = resolve_report(ctx, a.source, kind, n_cut, m_ref);
    const double pfa = validated_pfa(kind, report, n_cut, m_ref, tau);
    if (ctx.globals.json()) {
        Json doc{{"detector", kind_name}, {"n_cut", n_cut}, {"m_ref", m_ref},
                 {"tau", a.tau},          {"form", form_name(report)}, {"pfa", pfa}};
        ctx.out << doc.dump(2) << '\n';
    } else {
        ctx.out << "detector,n_cut,m_ref,tau,form,pfa\n"
                << kind_name << ',' << n_cut << ',' << m_ref << ',' << format_double(a.tau) << ','
                << form_name(report) << ',' << format_double(pfa) << '\n';
    }
    return kExitOk;
}

// threshold --------------------------------------------------------------------

struct ThresholdArgs {
    Geometry geometry;
    double pfa = 0.0;
    FormSource source;
};

int cmd_threshold(const Context& ctx, const ThresholdArgs& a) {
    const auto kind = a.geometry.kind();
    const auto n_cut = a.geometry.n_cut();
    const auto m_ref = a.geometry.m_ref();
    if (!(a.pfa > 0.0 && a.pfa < 1.0)) throw DomainError("--pfa must lie in (0, 1)");
    if (is_full_cfar(kind) && m_ref == 1) {
        // Refuse before paying for an adjudication run.
        solve(kind, n_cut, m_ref, a.pfa, AdjudicationReport{});
    }
    const auto report = resolve_report(ctx, a.source, kind, n_cut, m_ref);
    const auto s = solve(kind, n_cut, m_ref, a.pfa, report);
    const std::string kind_name(to_string(kind));
    if (ctx.globals.json()) {
        Json doc{{"detector", kind_name}, {"n_cut", n_cut},          {"m_ref", m_ref},
                 {"target_pfa", a.pfa},   {"form", form_name(report)}, {"tau", s.tau},
                 {"achieved_pfa", s.achieved}, {"iterations", s.iterations}};
        ctx.out << doc.dump(2) << '\n';
    } else {
        ctx.out << "detector,n_cut,m_ref,target_pfa,form,tau,achieved_pfa,iterations\n"
                << kind_name << ',' << n_cut << ',' << m_ref << ',' << format_double(a.pfa) << ','
                << form_name(report) << ',' << format_double(s.tau) << ',' << format_double(s.achieved)
                << ',' << s.iterations << '\n';
    }
    return kExitOk;
}

// simulate -------------------------------------------------------------------

struct SimulateArgs {
    Geometry geometry;
    double tau = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::uint64_t trials = 1'000'000;
};

int cmd_simulate(const Context& ctx, const SimulateArgs& a) {
    const auto kind = a.geometry.kind();
    const auto n_cut = a.geometry.n_cut();
    const auto m_ref = a.geometry.m_ref();
    if (a.trials == 0) throw DomainError("--trials must be at least 1");
    const ParetoParams params(a.alpha, a.beta);
    const RandomStream stream{ctx.globals.seed, kSimulateStream};
    const auto e = empirical_pfa(kind, n_cut, m_ref, ThresholdMultiplier(a.tau), params, a.trials, stream,
                                 ctx.globals.exec());
    const std::string kind_name(to_string(kind));
    if (ctx.globals.json()) {
        Json doc{{"detector", kind_name}, {"n_cut", n_cut}, {"m_ref", m_ref}, {"tau", a.tau},
                 {"alpha", a.alpha},      {"beta", a.beta}};
        const Json estimate = to_json(e);
        for (const auto& [key, value] : estimate.items()) doc[key] = value;
        ctx.out << doc.dump(2) << '\n';
    } else {
        ctx.out << "detector,n_cut,m_ref,tau,alpha,beta,trials,rejections,estimate,ci_low,ci_high,seed,stream_id\n"
                << kind_name << ',' << n_cut << ',' << m_ref << ',' << format_double(a.tau) << ','
                << format_double(a.alpha) << ',' << format_double(a.beta) << ',' << e.trials << ','
                << e.rejections << ',' << format_double(e.estimate) << ',' << format_double(e.ci_low) << ','
                << format_double(e.ci_high) << ',' << e.seed << ',' << e.stream_id << '\n';
    }
    return kExitOk;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
    VerifyConfig config;
    std::vector<std::string> kinds;
    std::string out_path;
};

int cmd_verify(const Context& ctx, VerifyArgs a) {
    auto& config = a.config;
    config.seed = ctx.globals.seed;
    config.exec = ctx.globals.exec();
    config.closed_form = ctx.hooks.closed_form;
    if (!a.kinds.empty()) {
        config.kinds.clear();
        for (const auto& k : a.kinds) config.kinds.push_back(parse_detector_kind(k));
    }
    if (config.trials == 0 || config.cfar_trials == 0) throw DomainError("trial counts must be positive");

    const auto result = run_verify(config);
    if (!a.out_path.empty()) save_bundle(a.out_path, result.reports);

    if (ctx.globals.json()) {
        ctx.out << verify_to_json(result).dump(2) << '\n';
    } else {
        ctx.out << checks_to_csv(result.checks);
    }

    std::size_t failed = 0;
    for (const auto& c : result.checks) failed += c.status == CheckStatus::Fail;
    ctx.err << "verify: " << (result.passed ? "passed" : "FAILED") << ", " << result.checks.size()
            << " checks, " << failed << " failed\n";
    for (const auto& r : result.reports) {
        ctx.err << "  " << to_string(r.detector) << ": " << to_string(r.verdict);
        if (r.quadrature_route) ctx.err << " (quadrature route " << to_string(*r.quadrature_route) << ')';
        ctx.err << '\n';
    }
    for (const auto& h : result.cfar) {
        ctx.err << "  cfar " << to_string(h.spec.kind) << ": chi2 " << format_double(h.test.statistic, 9)
                << ", p " << format_double(h.test.p_value, 9) << '\n';
    }
    for (const auto& c : result.checks) {
        if (c.status == CheckStatus::Fail) {
            ctx.err << "  FAIL " << c.check << " [" << c.detector << "] " << c.detail << '\n';
        }
    }
    return result.passed ? kExitOk : kExitVerificationFailed;
}

// sweep ----------------------------------------------------------------------

struct SweepArgs {
    Geometry geometry;
    std::string tau_range;
    std::string pfa_range;
    std::optional<double> step;
    FormSource source;
};

std::pair<double, double> parse_range(const std::string& text, const char* flag) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw DomainError(std::string(flag) + " expects lo:hi");
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const std::string a = text.substr(0, colon);
        const std::string b = text.substr(colon + 1);
        const double lo = std::stod(a, &used_a);
        const double hi = std::stod(b, &used_b);
        if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw DomainError(std::string(flag) + ": cannot parse '" + text + "'");
    }
}

// Points lo, lo + step, ... up to hi; a trailing point within a part in 1e9
// of a step counts as reaching hi.
std::vector<double> arithmetic_grid(double lo, double hi, double step) {
    const double span = (hi - lo) / step;
    if (span > 1e6) throw DomainError("sweep would produce more than a million rows");
    const auto count = static_cast<std::int64_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> grid;
    for (std::int64_t i = 0; i < count; ++i) grid.push_back(lo + static_cast<double>(i) * step);
    return grid;
}

int cmd_sweep(const Context& ctx, const SweepArgs& a) {
    const auto kind = a.geometry.kind();
    const auto n_cut = a.geometry.n_cut();
    const auto m_ref = a.geometry.m_ref();
    if (a.tau_range.empty() == a.pfa_range.empty()) {
        throw DomainError("give exactly one of --tau-range and --pfa-range");
    }
    const bool by_tau = !a.tau_range.empty();
    std::vector<double> grid;
    if (by_tau) {
        const auto [lo, hi] = parse_range(a.tau_range, "--tau-range");
        const double step = a.step.value_or(0.0);
        if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("--tau-range needs --step > 0");
        if (!(lo >= 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
            throw DomainError("--tau-range needs 0 <= lo <= hi");
        }
        grid = arithmetic_grid(lo, hi, step);
    } else {
        // Decade steps from the larger probability down to the smaller one.
        const auto [first, last] = parse_range(a.pfa_range, "--pfa-range");
        const double step = a.step.value_or(1.0);
        if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("--step must be positive");
        const double hi = std::max(first, last);
        const double lo = std::min(first, last);
        if (!(lo > 0.0 && hi < 1.0)) throw DomainError("--pfa-range bounds must lie in (0, 1)");
        for (double e : arithmetic_grid(-std::log10(hi), -std::log10(lo), step)) {
            grid.push_back(std::pow(10.0, -e));
        }
    }
    if (!by_tau && is_full_cfar(kind) && m_ref == 1) solve(kind, n_cut, m_ref, grid.front(), {});

    const auto report = resolve_report(ctx, a.source, kind, n_cut, m_ref);
    std::vector<std::pair<double, double>> rows;
    for (double x : grid) {
        if (by_tau) {
            rows.emplace_back(x, validated_pfa(kind, report, n_cut, m_ref, ThresholdMultiplier(x)));
        } else {
            rows.emplace_back(x, solve(kind, n_cut, m_ref, x, report).tau);
        }
    }
    const char* first_col = by_tau ? "tau" : "pfa";
    const char* second_col = by_tau ? "pfa" : "tau";
    if (ctx.globals.json()) {
        Json doc{{"detector", std::string(to_string(kind))},
                 {"n_cut", n_cut},
                 {"m_ref", m_ref},
                 {"form", form_name(report)}};
        auto& out_rows = doc["rows"] = Json::array();
        for (const auto& [x, y] : rows) out_rows.push_back({{first_col, x}, {second_col, y}});
        ctx.out << doc.dump(2) << '\n';
    } else {
        ctx.out << first_col << ',' << second_col << '\n';
        for (const auto& [x, y] : rows) ctx.out << format_double(x) << ',' << format_double(y) << '\n';
    }
    return kExitOk;
}

// sample ---------------------------------------------------------------------

struct SampleArgs {
    double alpha = 0.0;
    double beta = 0.0;
    std::int64_t count = 0;
    std::string out_path;
};

int cmd_sample(const Context& ctx, const SampleArgs& a) {
    if (a.count < 1) throw DomainError("--count must be at least 1");
    const ParetoParams params(a.alpha, a.beta);
    std::optional<std::ofstream> file;
    if (!a.out_path.empty()) file = open_output(a.out_path);
    std::ostream& sink = file ? *file : ctx.out;
    const auto values =
        sample_pareto(params, {ctx.globals.seed, kSampleStream}, static_cast<std::size_t>(a.count));
    std::string text;
    text.reserve(values.size() * 24);
    for (double v : values) {
        text += format_double(v);
        text += '\n';
    }
    sink << text;
    if (!sink.flush()) throw DomainError("failed writing samples");
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    CLI::App app{"Geometric-mean CFAR detectors in Pareto clutter", "gmcfar"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_option("--seed", globals.seed, "Random seed")->capture_default_str();
    app.add_option("--format", globals.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--threads", globals.threads, "Worker threads (0 = all cores); affects speed only")
        ->capture_default_str();

    PfaArgs pfa;
    auto* pfa_cmd = app.add_subcommand("pfa", "False-alarm probability at a threshold multiplier");
    add_geometry(pfa_cmd, pfa.geometry);
    pfa_cmd->add_option("--tau", pfa.tau, "Threshold multiplier")->required()->check(CLI::NonNegativeNumber);
    add_form_source(pfa_cmd, pfa.source);
    pfa_cmd->add_flag("--all-variants", pfa.all_variants, "Print every closed form next to quadrature");

    ThresholdArgs threshold;
    auto* threshold_cmd = app.add_subcommand("threshold", "Threshold multiplier for a target Pfa");
    add_geometry(threshold_cmd, threshold.geometry);
    threshold_cmd->add_option("--pfa", threshold.pfa, "Target false-alarm probability")->required();
    add_form_source(threshold_cmd, threshold.source);

    SimulateArgs simulate;
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo Pfa in Pareto clutter");
    add_geometry(simulate_cmd, simulate.geometry);
    simulate_cmd->add_option("--tau", simulate.tau, "Threshold multiplier")
        ->required()
        ->check(CLI::NonNegativeNumber);
    simulate_cmd->add_option("--alpha", simulate.alpha, "Pareto shape")->required();
    simulate_cmd->add_option("--beta", simulate.beta, "Pareto scale")->required();
    simulate_cmd->add_option("--trials", simulate.trials, "Simulated windows")->capture_default_str();

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Adjudicate the closed forms and check the CFAR claims");
    verify_cmd->add_option("--grid-n", verify.config.grid_n, "Cells under test")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--grid-m", verify.config.grid_m, "Reference cells")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--grid-tau", verify.config.grid_tau, "Threshold multipliers")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--trials", verify.config.trials, "Dual Monte Carlo trials per point")
        ->capture_default_str();
    verify_cmd->add_option("--detector-trials", verify.config.detector_trials,
                           "Pareto detector trials per point (0 = --trials)")
        ->capture_default_str();
    verify_cmd->add_option("--cfar-trials", verify.config.cfar_trials, "Trials per clutter point")
        ->capture_default_str();
    verify_cmd->add_option("--kinds", verify.kinds, "Detector kinds (default all)")
        ->delimiter(',')
        ->check(CLI::IsMember(kind_names()));
    verify_cmd->add_option("--out", verify.out_path, "Write the adjudication reports here");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate Pfa(tau) or tau(Pfa)");
    add_geometry(sweep_cmd, sweep.geometry);
    sweep_cmd->add_option("--tau-range", sweep.tau_range, "lo:hi");
    sweep_cmd->add_option("--pfa-range", sweep.pfa_range, "hi:lo, stepped in decades");
    sweep_cmd->add_option("--step", sweep.step, "Tau step, or decades per row for --pfa-range (default 1)");
    add_form_source(sweep_cmd, sweep.source);

    SampleArgs sample;
    auto* sample_cmd = app.add_subcommand("sample", "Draw Pareto variates, one per line");
    sample_cmd->add_option("--alpha", sample.alpha, "Pareto shape")->required();
    sample_cmd->add_option("--beta", sample.beta, "Pareto scale")->required();
    sample_cmd->add_option("--count", sample.count, "Number of variates")->required();
    sample_cmd->add_option("--out", sample.out_path, "Output file (default standard output)");

    std::vector<std::string> owned{"gmcfar"};
    owned.insert(owned.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : owned) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Context ctx{globals, hooks, out, err};
    try {
        if (*pfa_cmd) return cmd_pfa(ctx, pfa);
        if (*threshold_cmd) return cmd_threshold(ctx, threshold);
        if (*simulate_cmd) return cmd_simulate(ctx, simulate);
        if (*verify_cmd) return cmd_verify(ctx, verify);
        if (*sweep_cmd) return cmd_sweep(ctx, sweep);
        if (*sample_cmd) return cmd_sample(ctx, sample);
    } catch (const InconsistentReport& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const UnreachableTarget& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const NumericalFailure& e) {
        err << "error: " << e.what() << " (achieved error " << format_double(e.achieved_error(), 9) << ")\n";
        return kExitNumerical;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace gmcfar::cli
