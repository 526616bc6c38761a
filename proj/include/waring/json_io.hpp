#pragma once

#include <json.hpp>

#include "waring/binary_form.hpp"
#include "waring/catalecticant.hpp"
#include "waring/oracle.hpp"
#include "waring/states.hpp"
#include "waring/sylvester.hpp"

namespace waring {

using Json = nlohmann::json;

Json complex_to_json(const Complex& c);
Complex complex_from_json(const Json& j);

/// {"degree": N, "convention": "monomial"|"binomial", "coeffs": [{"re","im"}...]}
Json form_to_json(const BinaryForm& p);
BinaryForm form_from_json(const Json& j);

/// {"particles": N, "amplitudes": [{"re","im"}...]}
Json state_to_json(const ManyBodyState& s);
ManyBodyState state_from_json(const Json& j);

/// Same form schema with {"num","den"} rational components for the oracle.
oracle::ExactForm exact_form_from_json(const Json& j);

Json rank_report_to_json(const RankReport& r);

/// {"sr","sbr","residual","terms":[{"lambda","alpha","beta"}...]}
Json decomposition_to_json(const Decomposition& d);
/// Reads the term list; sr/sbr/residual are taken as stated.
Decomposition decomposition_from_json(const Json& j);

Json generalized_decomposition_to_json(const GeneralizedDecomposition& d);

Json css_terms_to_json(const std::vector<CssTerm>& terms);

} // namespace waring
