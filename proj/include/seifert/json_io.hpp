#pragma once

// JSON emission for the report types. Keys are emitted in nlohmann's sorted
// order, rationals as reduced "p/q" strings with positive denominator, and
// integers as JSON numbers (decimal strings if they ever leave 64-bit range).

#include "abelian.hpp"
#include "asymptotics.hpp"
#include "euler_class.hpp"
#include "seifert_core.hpp"
#include "su11.hpp"

#include "json.hpp"

#include <limits>
#include <optional>
#include <string>

namespace seifert {

using Json = nlohmann::json;

inline Json json_integer(const Integer& n) {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        return n.str();
    return n.convert_to<long long>();
}

inline Json json_integers(const std::vector<Integer>& v) {
    Json arr = Json::array();
    for (const Integer& n : v)
        arr.push_back(json_integer(n));
    return arr;
}

/// {"b": c0, "beta": [c1,...,cn], "alpha": [alpha_1,...,alpha_n]}
inline Json to_json(const CohomologyClass& c) {
    Json j;
    j["b"] = json_integer(c.coeffs[0]);
    Json beta = Json::array();
    for (std::size_t i = 1; i < c.coeffs.size(); ++i)
        beta.push_back(json_integer(c.coeffs[i]));
    j["beta"] = std::move(beta);
    j["alpha"] = json_integers(c.signature.branch_indices);
    return j;
}

inline Json to_json(const SeifertIndex& index) {
    Json j;
    j["genus"] = index.genus;
    j["b"] = json_integer(index.b);
    Json pairs = Json::array();
    for (const Fiber& f : index.fibers)
        pairs.push_back(Json::array({json_integer(f.alpha), json_integer(f.beta)}));
    j["pairs"] = std::move(pairs);
    j["text"] = format_index(index);
    return j;
}

inline Json to_json(const RealizabilityReport& report) {
    Json j;
    j["realizable"] = report.realizable;
    Json cases = Json::array();
    for (JnCase c : report.cases)
        cases.push_back(to_string(c));
    j["cases"] = std::move(cases);
    if (report.beta_sum)
        j["sum"] = to_string(*report.beta_sum);
    j["flags"] = report.flags;
    return j;
}

inline Json to_json(const RealizabilityReport& report, const LiftLedger& ledger) {
    Json j = to_json(report);
    Json classes = Json::array();
    for (const CohomologyClass& c : ledger.equivalent_realizable)
        classes.push_back(to_json(c));
    j["equivalent_realizable"] = std::move(classes);
    j["induces_sl2r"] = ledger.induces_sl2r;
    return j;
}

inline Json to_json(const AsymptoticsReport& report, std::optional<int> decimal_digits = std::nullopt) {
    Json j;
    j["lambdas"] = json_integers(report.lambdas);
    Json coeff;
    coeff["rational"] = to_string(report.coefficient.rational_part);
    coeff["unit"] = "log2";
    if (decimal_digits)
        coeff["decimal"] = decimal_rendering(report.coefficient, *decimal_digits);
    j["coefficient"] = std::move(coeff);
    j["quadratic_limit"] = report.quadratic_limit;
    j["minus_chi_log2"] = report.equals_minus_chi_log2;
    j["flags"] = report.flags;
    return j;
}

inline Json to_json(const Complex& z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

inline Json to_json(const Su11Element& e) {
    return Json{{"xi", to_json(e.xi)}, {"eta", to_json(e.eta)}};
}

inline Json to_json(const RepTriple& t) {
    Json j;
    j["k"] = Json::array({json_integer(t.k[0]), json_integer(t.k[1]), json_integer(t.k[2])});
    j["epsilon"] = t.epsilon;
    return j;
}

inline Json to_json(const ResidualReport& r) {
    Json j;
    j["torsion"] = Json::array({r.torsion[0], r.torsion[1], r.torsion[2]});
    j["long_relator"] = r.long_relator;
    j["traces"] = Json::array({r.trace[0], r.trace[1], r.trace[2]});
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    return j;
}

inline Json to_json(const Su11Representation& rep, const ResidualReport& residuals) {
    Json j = to_json(rep.triple);
    j["q"] = Json::array({to_json(rep.q[0]), to_json(rep.q[1]), to_json(rep.q[2])});
    j["residuals"] = to_json(residuals);
    return j;
}

} // namespace seifert
