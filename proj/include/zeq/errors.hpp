/*
   Copyright 2026 The zeq authors

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

#ifndef ZEQ_ERRORS_HPP
#define ZEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zeq {

enum class errc {
    division_by_zero,
    incompatible_domains,
    not_monic,
    inadmissible_specialization,
    precision_exhausted,
    not_a_unit,
    not_regular,
    zero_to_precision,
    not_reduced,
    not_a_family_germ,
    divisibility_failure,
    lift_obstruction,
    non_unit_cofactor,
    classification_ambiguous,
    order_not_stabilized,
    identity_violation,
    contraction_stall,
    contact_mismatch,
    hypothesis_violated,
    budget_exhausted,
    projection_not_finite,
    syntax_error,
    undeclared_identifier,
    manifest_error,
    no_exact_root,
    internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::incompatible_domains: return "IncompatibleDomains";
        case errc::not_monic: return "NotMonic";
        case errc::inadmissible_specialization: return "InadmissibleSpecialization";
        case errc::precision_exhausted: return "PrecisionExhausted";
        case errc::not_a_unit: return "NotAUnit";
        case errc::not_regular: return "NotRegular";
        case errc::zero_to_precision: return "ZeroToPrecision";
        case errc::not_reduced: return "NotReduced";
        case errc::not_a_family_germ: return "NotAFamilyGerm";
        case errc::divisibility_failure: return "DivisibilityFailure";
        case errc::lift_obstruction: return "LiftObstruction";
        case errc::non_unit_cofactor: return "NonUnitCofactor";
        case errc::classification_ambiguous: return "ClassificationAmbiguous";
        case errc::order_not_stabilized: return "OrderNotStabilized";
        case errc::identity_violation: return "IdentityViolation";
        case errc::contraction_stall: return "ContractionStall";
        case errc::contact_mismatch: return "ContactMismatch";
        case errc::hypothesis_violated: return "HypothesisViolated";
        case errc::budget_exhausted: return "BudgetExhausted";
        case errc::projection_not_finite: return "ProjectionNotFinite";
        case errc::syntax_error: return "SyntaxError";
        case errc::undeclared_identifier: return "UndeclaredIdentifier";
        case errc::manifest_error: return "ManifestError";
        case errc::no_exact_root: return "NoExactRoot";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace zeq

#endif
