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
#include <optional>
#include <string_view>

#include "gmcfar/detector_kind.hpp"
#include "gmcfar/gm_detectors.hpp"

namespace gmcfar {

/// Which closed form (or the numerical oracle) produced a false-alarm value.
///
/// PaperForm is the published expression exactly as printed. CandidateForm is
/// the expression re-derived from the same conditioning argument, keeping the
/// gamma(M-1, 1) reference excess and the N^(l-n) binomial factor.
enum class PfaFormulaVariant { PaperForm, CandidateForm, OracleQuadrature };

std::string_view to_string(PfaFormulaVariant variant) noexcept;
PfaFormulaVariant parse_formula_variant(std::string_view name);

/// How the full-CFAR multi-pulse closed forms treat a single reference cell.
enum class SingleReferencePolicy {
    /// Throw UnsupportedConfiguration and defer to the quadrature oracle.
    Refuse,
    /// Use C(n - 1, n) = 1 for n = 0 and 0 otherwise.
    EmptyProductConvention,
};

/// Upper tail of a gamma(k, 1) variable, sum_{l<k} x^l e^-x / l!.
double gamma_tail_poisson_sum(double x, std::int64_t k);

/// ln C(a, b). Accepts b <= a, plus the convention C(-1, 0) = 1.
double log_binomial(std::int64_t a, std::int64_t b);

/// (1 + tau)^-n_ref.
double pfa_gm_partial_single(std::int64_t n_ref, ThresholdMultiplier tau);

double pfa_gm_full_single(std::int64_t n_ref, ThresholdMultiplier tau, PfaFormulaVariant variant);

/// sum_{l<N} C(M+l-1, l) tau^l / (1+tau)^(M+l), i.e. P(W1 > tau W2) with
/// W1 ~ gamma(N, 1) and W2 ~ gamma(M, 1).
double pfa_gm_partial_multi(std::int64_t n_cut, std::int64_t m_ref, ThresholdMultiplier tau);

double pfa_gm_full_multi(std::int64_t n_cut, std::int64_t m_ref, ThresholdMultiplier tau,
                         PfaFormulaVariant variant,
                         SingleReferencePolicy policy = SingleReferencePolicy::Refuse);

/// Closed form for any detector kind. Single-pulse kinds require n_cut == 1
/// and take m_ref as the reference length. Returns nullopt when the kind has
/// no such variant (the partial detectors have only PaperForm) or when the
/// configuration is outside the closed forms (m_ref == 1 for GmFullMulti).
std::optional<double> closed_form_pfa(DetectorKind kind, std::int64_t n_cut, std::int64_t m_ref,
                                      double tau, PfaFormulaVariant variant);

}  // namespace gmcfar
