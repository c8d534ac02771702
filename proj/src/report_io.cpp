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

#include "gmcfar/report_io.hpp"

#include <filesystem>
#include <fstream>

#include "gmcfar/error.hpp"

namespace gmcfar {
namespace {

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<double> read_optional_number(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

template <class Enum, std::size_t N>
Enum parse_enum(const std::string& name, const std::array<Enum, N>& values, const char* what) {
    for (auto v : values) {
        if (to_string(v) == name) return v;
    }
    throw DomainError(std::string("unknown ") + what + " '" + name + "'");
}

VariantVerdict parse_variant_verdict(const std::string& name) {
    return parse_enum(name,
                      std::array{VariantVerdict::Consistent, VariantVerdict::Inconsistent,
                                 VariantVerdict::NotApplicable, VariantVerdict::Undetermined},
                      "variant verdict");
}

Verdict parse_verdict(const std::string& name) {
    return parse_enum(name,
                      std::array{Verdict::PaperForm, Verdict::CandidateForm, Verdict::UseQuadrature,
                                 Verdict::InsufficientPrecision, Verdict::InternallyInconsistent},
                      "verdict");
}

ExcessShape parse_excess(const std::string& name) {
    return parse_enum(name, std::array{ExcessShape::MMinusOne, ExcessShape::M}, "excess shape");
}

EstimateWithCI estimate_from_json(const Json& j) {
    EstimateWithCI e;
    e.estimate = j.at("estimate").get<double>();
    e.ci_low = j.at("ci_low").get<double>();
    e.ci_high = j.at("ci_high").get<double>();
    e.trials = j.at("trials").get<std::uint64_t>();
    e.rejections = j.at("rejections").get<std::uint64_t>();
    e.seed = j.at("seed").get<std::uint64_t>();
    e.stream_id = j.at("stream_id").get<std::uint64_t>();
    return e;
}

}  // namespace

Json to_json(const EstimateWithCI& e) {
    return Json{{"estimate", e.estimate}, {"ci_low", e.ci_low},   {"ci_high", e.ci_high},
                {"trials", e.trials},     {"rejections", e.rejections}, {"seed", e.seed},
                {"stream_id", e.stream_id}};
}

Json to_json(const AdjudicationReport& r) {
    Json doc;
    doc["schema"] = kAdjudicationSchema;
    doc["version"] = AdjudicationReport::kSchemaVersion;
    doc["detector"] = to_string(r.detector);
    doc["trials"] = r.trials;
    doc["detector_trials"] = r.detector_trials;
    doc["seed"] = r.seed;
    doc["tol"] = r.tol;
    doc["sigma_band"] = kSigmaBand;
    doc["detector_clutter"] =
        r.detector_clutter
            ? Json{{"alpha", r.detector_clutter->shape()}, {"beta", r.detector_clutter->scale()}}
            : Json(nullptr);
    auto& points = doc["points"] = Json::array();
    for (const auto& p : r.points) {
        Json row;
        row["n"] = p.point.n_cut;
        row["m"] = p.point.m_ref;
        row["tau"] = p.point.tau;
        row["dual_mc"] = to_json(p.dual_mc);
        row["detector_mc"] = p.detector_mc ? to_json(*p.detector_mc) : Json(nullptr);
        row["quadrature"] = optional_number(p.quadrature);
        row["quadrature_m_minus_one"] = optional_number(p.quadrature_m_minus_one);
        row["quadrature_m"] = optional_number(p.quadrature_m);
        row["paper_form"] = optional_number(p.paper_form);
        row["candidate_form"] = optional_number(p.candidate_form);
        row["m_minus_one_agrees"] = p.m_minus_one_agrees;
        row["m_agrees"] = p.m_agrees;
        row["oracle_consistent"] = p.oracle_consistent;
        row["insufficient_precision"] = p.insufficient_precision;
        row["verdicts"] = {{"paper_form", to_string(p.paper_verdict)},
                           {"candidate_form", to_string(p.candidate_verdict)}};
        points.push_back(std::move(row));
    }
    doc["internally_consistent"] = r.internally_consistent;
    doc["quadrature_route"] = r.quadrature_route ? Json(to_string(*r.quadrature_route)) : Json(nullptr);
    doc["verdict"] = to_string(r.verdict);
    doc["diagnostics"] = r.diagnostics;
    return doc;
}

AdjudicationReport report_from_json(const Json& doc) {
    try {
        if (doc.at("schema").get<std::string>() != kAdjudicationSchema) {
            throw DomainError("not an adjudication report");
        }
        if (doc.at("version").get<int>() != AdjudicationReport::kSchemaVersion) {
            throw DomainError("unsupported adjudication report version " +
                              std::to_string(doc.at("version").get<int>()));
        }
        AdjudicationReport r;
        r.detector = parse_detector_kind(doc.at("detector").get<std::string>());
        r.trials = doc.at("trials").get<std::uint64_t>();
        r.detector_trials = doc.at("detector_trials").get<std::uint64_t>();
        r.seed = doc.at("seed").get<std::uint64_t>();
        r.tol = doc.at("tol").get<double>();
        if (const auto& c = doc.at("detector_clutter"); !c.is_null()) {
            r.detector_clutter = ParetoParams(c.at("alpha").get<double>(), c.at("beta").get<double>());
        }
        for (const auto& row : doc.at("points")) {
            PointRecord p;
            p.point = {row.at("n").get<std::int64_t>(), row.at("m").get<std::int64_t>(),
                       row.at("tau").get<double>()};
            p.dual_mc = estimate_from_json(row.at("dual_mc"));
            if (!row.at("detector_mc").is_null()) p.detector_mc = estimate_from_json(row.at("detector_mc"));
            p.quadrature = read_optional_number(row.at("quadrature"));
            p.quadrature_m_minus_one = read_optional_number(row.at("quadrature_m_minus_one"));
            p.quadrature_m = read_optional_number(row.at("quadrature_m"));
            p.paper_form = read_optional_number(row.at("paper_form"));
            p.candidate_form = read_optional_number(row.at("candidate_form"));
            p.m_minus_one_agrees = row.at("m_minus_one_agrees").get<bool>();
            p.m_agrees = row.at("m_agrees").get<bool>();
            p.oracle_consistent = row.at("oracle_consistent").get<bool>();
            p.insufficient_precision = row.at("insufficient_precision").get<bool>();
            p.paper_verdict = parse_variant_verdict(row.at("verdicts").at("paper_form").get<std::string>());
            p.candidate_verdict =
                parse_variant_verdict(row.at("verdicts").at("candidate_form").get<std::string>());
            r.points.push_back(std::move(p));
        }
        r.internally_consistent = doc.at("internally_consistent").get<bool>();
        if (const auto& q = doc.at("quadrature_route"); !q.is_null()) {
            r.quadrature_route = parse_excess(q.get<std::string>());
        }
        r.verdict = parse_verdict(doc.at("verdict").get<std::string>());
        r.diagnostics = doc.at("diagnostics").get<std::vector<std::string>>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed adjudication report: ") + e.what());
    }
}

Json bundle_to_json(const std::vector<AdjudicationReport>& reports) {
    Json doc;
    doc["schema"] = kAdjudicationSchema;
    doc["version"] = AdjudicationReport::kSchemaVersion;
    auto& arr = doc["reports"] = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return doc;
}

std::vector<AdjudicationReport> bundle_from_json(const Json& doc) {
    try {
        if (doc.at("schema").get<std::string>() != kAdjudicationSchema ||
            doc.at("version").get<int>() != AdjudicationReport::kSchemaVersion) {
            throw DomainError("unsupported adjudication bundle");
        }
        std::vector<AdjudicationReport> out;
        for (const auto& r : doc.at("reports")) out.push_back(report_from_json(r));
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed adjudication bundle: ") + e.what());
    }
}

std::optional<std::vector<AdjudicationReport>> load_bundle(const std::string& path) {
    if (!std::filesystem::exists(path)) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read adjudication report '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("cannot parse adjudication report '" + path + "': " + e.what());
    }
    return bundle_from_json(doc);
}

void save_bundle(const std::string& path, const std::vector<AdjudicationReport>& reports) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write adjudication report '" + path + "'");
    out << bundle_to_json(reports).dump(2) << '\n';
    if (!out) throw DomainError("failed writing adjudication report '" + path + "'");
}

}  // namespace gmcfar
