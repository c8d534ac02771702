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

#include "gmcfar/analytic_pfa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "gmcfar/error.hpp"

namespace gmcfar {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_positive(std::int64_t v, const char* name) {
    if (v < 1) throw DomainError(std::string(name) + " must be at least 1, got " + std::to_string(v));
}

// Stirling remainder of ln Gamma(x + 1); truncation error below 1e-14 for x >= 16.
double stirling_remainder(double x) {
    const double r = 1.0 / x;
    const double r2 = r * r;
    return r * (1.0 / 12.0 - r2 * (1.0 / 360.0 - r2 * (1.0 / 1260.0 - r2 / 1680.0)));
}

// Log-domain work is carried in long double: the exponents reach a few
// hundred, and exp amplifies their absolute rounding error into relative
// error of the result.
using Wide = long double;

// Accumulates log-domain terms and returns ln(sum exp(term)).
class LogSum {
public:
    void add(Wide log_term) {
        if (log_term == kNegInf) return;
        terms_.push_back(log_term);
        max_ = std::max(max_, log_term);
    }

    Wide value() const {
        if (terms_.empty()) return kNegInf;
        Wide sum = 0.0L;
        for (Wide t : terms_) sum += std::exp(t - max_);
        return max_ + std::log(sum);
    }

private:
    std::vector<Wide> terms_;
    Wide max_ = kNegInf;
};

Wide wide_log(double x) { return std::log(static_cast<Wide>(x)); }
Wide wide_log1p(double x) { return std::log1p(static_cast<Wide>(x)); }

// n * ln(tau) with the convention 0 * ln(0) = 0.
Wide log_power(std::int64_t n, Wide log_tau) {
    return n == 0 ? 0.0L : static_cast<Wide>(n) * log_tau;
}

double to_probability(Wide log_value) {
    return std::clamp(static_cast<double>(std::exp(log_value)), 0.0, 1.0);
}

double full_multi_paper(std::int64_t n_cut, std::int64_t m_ref, double tau) {
    const double n = static_cast<double>(n_cut);
    const double m = static_cast<double>(m_ref);
    const Wide log_tau = wide_log(tau);
    const Wide log1p_tau = wide_log1p(tau);
    const Wide log_nm = wide_log(n + m);
    LogSum acc;
    for (std::int64_t l = 0; l < n_cut; ++l) {
        for (std::int64_t k = 0; k <= l; ++k) {
            if (tau == 0.0 && k > 0) continue;
            acc.add(log_binomial(m_ref + k - 1, k) - static_cast<Wide>(l - k + 1) * log_nm +
                    log_power(k, log_tau) - static_cast<Wide>(m_ref + k) * log1p_tau);
        }
    }
    return to_probability(wide_log(m) + acc.value());
}

double full_multi_candidate(std::int64_t n_cut, std::int64_t m_ref, double tau) {
    const double n = static_cast<double>(n_cut);
    const double m = static_cast<double>(m_ref);
    const Wide log_tau = wide_log(tau);
    const Wide log1p_tau = wide_log1p(tau);
    const Wide log_n = wide_log(n);
    const Wide log_nm = wide_log(n + m);
    LogSum acc;
    for (std::int64_t l = 0; l < n_cut; ++l) {
        for (std::int64_t k = 0; k <= l; ++k) {
            if (tau == 0.0 && k > 0) continue;
            // C(k - 1, k) vanishes for k >= 1 when m_ref == 1.
            if (m_ref == 1 && k > 0) continue;
            acc.add(log_binomial(m_ref + k - 2, k) + static_cast<Wide>(l - k) * log_n -
                    static_cast<Wide>(l - k + 1) * log_nm + log_power(k, log_tau) -
                    static_cast<Wide>(m_ref + k - 1) * log1p_tau);
        }
    }
    return to_probability(wide_log(m) + acc.value());
}

}  // namespace

std::string_view to_string(PfaFormulaVariant variant) noexcept {
    switch (variant) {
        case PfaFormulaVariant::PaperForm: return "paper-form";
        case PfaFormulaVariant::CandidateForm: return "candidate-form";
        case PfaFormulaVariant::OracleQuadrature: return "quadrature";
    }
    return "unknown";
}

PfaFormulaVariant parse_formula_variant(std::string_view name) {
    for (auto v : {PfaFormulaVariant::PaperForm, PfaFormulaVariant::CandidateForm,
                   PfaFormulaVariant::OracleQuadrature}) {
        if (to_string(v) == name) return v;
    }
    throw DomainError("unknown formula variant '" + std::string(name) + "'");
}

double gamma_tail_poisson_sum(double x, std::int64_t k) {
    if (!(x >= 0.0)) throw DomainError("gamma_tail_poisson_sum: x must be non-negative");
    require_positive(k, "gamma_tail_poisson_sum: k");
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    // Poisson weights x^l / l! relative to the first one, rescaled whenever
    // they grow large; the exp(-x) factor is applied once in the log domain.
    double term = 1.0;
    double sum = 1.0;
    double log_scale = 0.0;
    for (std::int64_t l = 1; l < k; ++l) {
        term *= x / static_cast<double>(l);
        sum += term;
        if (sum > 1e280) {
            log_scale += std::log(sum);
            term /= sum;
            sum = 1.0;
        }
    }
    return std::min(1.0, std::exp(log_scale + std::log(sum) - x));
}

double log_binomial(std::int64_t a, std::int64_t b) {
    if (a == -1 && b == 0) return 0.0;
    if (a < 0 || b < 0 || b > a) {
        throw DomainError("log_binomial: C(" + std::to_string(a) + ", " + std::to_string(b) +
                          ") is outside the supported domain");
    }
    const std::int64_t k = std::min(b, a - b);
    if (k == 0) return 0.0;
    const double ad = static_cast<double>(a);
    const double kd = static_cast<double>(k);
    if (k < 16) {
        double sum = 0.0;
        for (std::int64_t i = 1; i <= k; ++i) {
            sum += std::log(static_cast<double>(a - k + i) / static_cast<double>(i));
        }
        return sum;
    }
    const double rest = ad - kd;
    const double leading = kd * std::log(ad / kd) - rest * std::log1p(-kd / ad);
    const double half_log = 0.5 * std::log(ad / (2.0 * std::numbers::pi * kd * rest));
    return leading + half_log + stirling_remainder(ad) - stirling_remainder(kd) -
           stirling_remainder(rest);
}

double pfa_gm_partial_single(std::int64_t n_ref, ThresholdMultiplier tau) {
    require_positive(n_ref, "n_ref");
    return static_cast<double>(std::exp(-static_cast<Wide>(n_ref) * wide_log1p(tau.value())));
}

double pfa_gm_full_single(std::int64_t n_ref, ThresholdMultiplier tau, PfaFormulaVariant variant) {
    require_positive(n_ref, "n_ref");
    const double n = static_cast<double>(n_ref);
    const double lead = n / (n + 1.0);
    switch (variant) {
        case PfaFormulaVariant::PaperForm:
            return lead * static_cast<double>(std::exp(-n * wide_log1p(tau.value())));
        case PfaFormulaVariant::CandidateForm:
            return lead * static_cast<double>(std::exp(-(n - 1.0) * wide_log1p(tau.value())));
        case PfaFormulaVariant::OracleQuadrature: break;
    }
    throw DomainError("pfa_gm_full_single: the quadrature oracle is not a closed form");
}

double pfa_gm_partial_multi(std::int64_t n_cut, std::int64_t m_ref, ThresholdMultiplier tau) {
    require_positive(n_cut, "n_cut");
    require_positive(m_ref, "m_ref");
    const double t = tau.value();
    if (t == 0.0) return 1.0;
    const Wide log_tau = wide_log(t);
    const Wide log1p_tau = wide_log1p(t);
    LogSum acc;
    for (std::int64_t l = 0; l < n_cut; ++l) {
        acc.add(log_binomial(m_ref + l - 1, l) + log_power(l, log_tau) -
                static_cast<Wide>(m_ref + l) * log1p_tau);
    }
    return to_probability(acc.value());
}

double pfa_gm_full_multi(std::int64_t n_cut, std::int64_t m_ref, ThresholdMultiplier tau,
                         PfaFormulaVariant variant, SingleReferencePolicy policy) {
    require_positive(n_cut, "n_cut");
    require_positive(m_ref, "m_ref");
    if (variant == PfaFormulaVariant::OracleQuadrature) {
        throw DomainError("pfa_gm_full_multi: the quadrature oracle is not a closed form");
    }
    if (m_ref == 1) {
        if (policy == SingleReferencePolicy::Refuse) {
            throw UnsupportedConfiguration(
                "full-CFAR multi-pulse closed forms need at least two reference cells; "
                "use the quadrature oracle for m_ref = 1");
        }
        if (variant == PfaFormulaVariant::PaperForm) {
            throw UnsupportedConfiguration(
                "the empty-product convention applies to the candidate form only");
        }
    }
    return variant == PfaFormulaVariant::PaperForm
               ? full_multi_paper(n_cut, m_ref, tau.value())
               : full_multi_candidate(n_cut, m_ref, tau.value());
}

std::optional<double> closed_form_pfa(DetectorKind kind, std::int64_t n_cut, std::int64_t m_ref,
                                      double tau, PfaFormulaVariant variant) {
    if (variant == PfaFormulaVariant::OracleQuadrature) return std::nullopt;
    if (is_single_pulse(kind) && n_cut != 1) {
        throw DomainError("single-pulse detectors have exactly one cell under test");
    }
    const ThresholdMultiplier t(tau);
    switch (kind) {
        case DetectorKind::GmPartialSingle:
            if (variant != PfaFormulaVariant::PaperForm) return std::nullopt;
            return pfa_gm_partial_single(m_ref, t);
        case DetectorKind::GmPartialMulti:
            if (variant != PfaFormulaVariant::PaperForm) return std::nullopt;
            return pfa_gm_partial_multi(n_cut, m_ref, t);
        case DetectorKind::GmFullSingle:
            return pfa_gm_full_single(m_ref, t, variant);
        case DetectorKind::GmFullMulti:
            if (m_ref < 2) return std::nullopt;
            return pfa_gm_full_multi(n_cut, m_ref, t, variant);
    }
    return std::nullopt;
}

}  // namespace gmcfar
