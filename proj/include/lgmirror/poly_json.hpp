// Canonical JSON encoding of Laurent polynomials:
//   { "vars": [names], "denom": D,
//     "terms": [ { "exp": [ints, scaled by D in the fractional slot],
//                  "coef": "p/q" } ] }
// with terms in graded-lex order and coefficients as exact decimal strings.
#pragma once

#include <json.hpp>

#include "cyclo.hpp"
#include "poly.hpp"

namespace lgm {

inline nlohmann::json poly_to_json(const PolyQ& p) {
    nlohmann::json j;
    j["vars"] = p.vars;
    j["denom"] = p.denom;
    std::vector<Expv> order;
    for (const auto& [e, c] : p.terms) order.push_back(e);
    std::sort(order.begin(), order.end(),
              [&](const Expv& a, const Expv& b) { return graded_lex_less(a, b, p.denom); });
    nlohmann::json terms = nlohmann::json::array();
    for (const Expv& e : order)
        terms.push_back({{"exp", e}, {"coef", rat_str(p.terms.at(e))}});
    j["terms"] = std::move(terms);
    return j;
}

inline PolyQ poly_from_json(const nlohmann::json& j) {
    PolyQ p;
    p.vars = j.at("vars").get<std::vector<std::string>>();
    p.denom = j.at("denom").get<long>();
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exp").get<Expv>(), rat_parse(t.at("coef").get<std::string>()));
    return p;
}

// Cyclotomic coefficients are encoded as four decimal strings, the
// components on the basis {1, z, z^2, z^3} with z a primitive 12th root.
inline nlohmann::json poly_to_json(const PolyC& p) {
    nlohmann::json j;
    j["vars"] = p.vars;
    j["denom"] = p.denom;
    j["coeff_field"] = "Q(zeta12)";
    std::vector<Expv> order;
    for (const auto& [e, c] : p.terms) order.push_back(e);
    std::sort(order.begin(), order.end(),
              [&](const Expv& a, const Expv& b) { return graded_lex_less(a, b, p.denom); });
    nlohmann::json terms = nlohmann::json::array();
    for (const Expv& e : order) {
        const Cyclo& c = p.terms.at(e);
        terms.push_back({{"exp", e},
                         {"coef", {rat_str(c.c[0]), rat_str(c.c[1]), rat_str(c.c[2]), rat_str(c.c[3])}}});
    }
    j["terms"] = std::move(terms);
    return j;
}

inline PolyC poly_cyclo_from_json(const nlohmann::json& j) {
    PolyC p;
    p.vars = j.at("vars").get<std::vector<std::string>>();
    p.denom = j.at("denom").get<long>();
    for (const auto& t : j.at("terms")) {
        const auto& cc = t.at("coef");
        Cyclo c;
        if (cc.is_string()) {
            c.c[0] = rat_parse(cc.get<std::string>());
        } else {
            for (int i = 0; i < 4; ++i) c.c[i] = rat_parse(cc.at(i).get<std::string>());
        }
        p.add_term(t.at("exp").get<Expv>(), c);
    }
    return p;
}

} // namespace lgm
