#include "waring/json_io.hpp"

#include "waring/errors.hpp"

namespace waring {

namespace {

oracle::Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return oracle::Rational(j.get<long long>());
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw InputError("rational component must be an integer or {\"num\", \"den\"}");
    const oracle::Integer num(j.at("num").get<long long>());
    const oracle::Integer den(j.at("den").get<long long>());
    if (den == 0) throw InputError("rational denominator must be nonzero");
    return oracle::Rational(num, den);
}

} // namespace

Json complex_to_json(const Complex& c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (!j.is_object() || !j.contains("re"))
        throw InputError("complex value must be a number or {\"re\", \"im\"}");
    return Complex(j.at("re").get<double>(), j.value("im", 0.0));
}

Json form_to_json(const BinaryForm& p) {
    Json coeffs = Json::array();
    for (const Complex& m : p.monomial_coeffs()) coeffs.push_back(complex_to_json(m));
    return Json{{"degree", p.degree()}, {"convention", "monomial"}, {"coeffs", coeffs}};
}

BinaryForm form_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        throw InputError("form JSON needs \"degree\" and \"coeffs\"");
    const int degree = j.at("degree").get<int>();
    if (degree < 0) throw InputError("form degree must be non-negative");
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(degree) + 1)
        throw InputError("form JSON needs exactly degree+1 coefficients");
    std::vector<Complex> c;
    c.reserve(coeffs.size());
    for (const Json& e : coeffs) c.push_back(complex_from_json(e));
    const std::string convention = j.value("convention", "monomial");
    if (convention == "monomial") return BinaryForm::from_monomial_coeffs(c);
    if (convention == "binomial") return BinaryForm::from_binomial_coeffs(std::move(c));
    throw InputError("unknown coefficient convention \"" + convention + "\"");
}

Json state_to_json(const ManyBodyState& s) {
    Json amplitudes = Json::array();
    for (const Complex& c : s.amplitudes()) amplitudes.push_back(complex_to_json(c));
    return Json{{"particles", s.particles()}, {"amplitudes", amplitudes}};
}

ManyBodyState state_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("particles") || !j.contains("amplitudes"))
        throw InputError("state JSON needs \"particles\" and \"amplitudes\"");
    const int particles = j.at("particles").get<int>();
    std::vector<Complex> c;
    for (const Json& e : j.at("amplitudes")) c.push_back(complex_from_json(e));
    return ManyBodyState(particles, std::move(c));
}

oracle::ExactForm exact_form_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        throw InputError("form JSON needs \"degree\" and \"coeffs\"");
    const int degree = j.at("degree").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(degree) + 1)
        throw InputError("form JSON needs exactly degree+1 coefficients");
    std::vector<oracle::ExactScalar> c;
    c.reserve(coeffs.size());
    for (const Json& e : coeffs) {
        if (!e.is_object()) throw InputError("exact coefficients must be objects");
        oracle::ExactScalar s;
        if (e.contains("re")) s.re = rational_from_json(e.at("re"));
        if (e.contains("im")) s.im = rational_from_json(e.at("im"));
        c.push_back(std::move(s));
    }
    const std::string convention = j.value("convention", "monomial");
    if (convention == "monomial") return oracle::ExactForm::from_monomial_coeffs(c);
    if (convention == "binomial") return oracle::ExactForm(std::move(c));
    throw InputError("unknown coefficient convention \"" + convention + "\"");
}

Json rank_report_to_json(const RankReport& r) {
    Json kernel = Json::array();
    for (const ComplexVector& v : r.kernel_basis) {
        Json vec = Json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) vec.push_back(complex_to_json(v(i)));
        kernel.push_back(vec);
    }
    return Json{{"numerical_rank", r.numerical_rank},
                {"singular_values", r.singular_values},
                {"tolerance_used", r.tolerance_used},
                {"kernel_basis", kernel}};
}

Json decomposition_to_json(const Decomposition& d) {
    Json terms = Json::array();
    for (const DecompositionTerm& t : d.terms)
        terms.push_back(Json{{"lambda", complex_to_json(t.lambda)},
                             {"alpha", complex_to_json(t.form.alpha)},
                             {"beta", complex_to_json(t.form.beta)}});
    return Json{{"sr", d.sr}, {"sbr", d.sbr}, {"residual", d.residual}, {"terms", terms}};
}

Decomposition decomposition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms")) throw InputError("decomposition JSON needs \"terms\"");
    Decomposition d;
    d.sr = j.value("sr", 0);
    d.sbr = j.value("sbr", 0);
    d.residual = j.value("residual", 0.0);
    for (const Json& t : j.at("terms")) {
        const Complex lambda = complex_from_json(t.at("lambda"));
        const Complex alpha = complex_from_json(t.at("alpha"));
        const Complex beta = complex_from_json(t.at("beta"));
        d.terms.push_back(DecompositionTerm{lambda, LinearForm(alpha, beta)});
    }
    if (d.sr == 0) d.sr = static_cast<int>(d.terms.size());
    return d;
}

Json generalized_decomposition_to_json(const GeneralizedDecomposition& d) {
    Json terms = Json::array();
    for (const GeneralizedTerm& t : d.terms)
        terms.push_back(Json{{"alpha", complex_to_json(t.form.alpha)},
                             {"beta", complex_to_json(t.form.beta)},
                             {"power", t.power},
                             {"multiplicity", t.cofactor.degree() + 1},
                             {"cofactor", form_to_json(t.cofactor)}});
    return Json{{"sr", d.sr}, {"sbr", d.sbr}, {"residual", d.residual}, {"terms", terms}};
}

Json css_terms_to_json(const std::vector<CssTerm>& terms) {
    Json out = Json::array();
    for (const CssTerm& t : terms)
        out.push_back(Json{{"weight", complex_to_json(t.weight)},
                           {"weight_magnitude", std::abs(t.weight)},
                           {"theta", t.theta},
                           {"phi", t.phi}});
    return out;
}

} // namespace waring
