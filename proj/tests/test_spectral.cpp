#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgmirror/expr.hpp"
#include "lgmirror/spectral.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

using namespace lgm;

namespace {

const std::string kCache = std::string(LGM_FIXTURES_DIR) + "/char";

SpectralFamily canonical_family(const std::string& name) {
    auto t = DynkinType::parse(name);
    return spectral_family(t, minimal_weight(t), marked_node_of(t), kCache);
}

// Flatten a branch profile into "center:orders" strings for easy comparison.
std::string profile_string(const NewtonPolygonData& np) {
    std::ostringstream os;
    for (auto& [c, orders] : np.branch_profile) {
        os << c << ":";
        for (std::size_t i = 0; i < orders.size(); ++i)
            os << (i ? "," : "") << orders[i];
        os << " ";
    }
    return os.str();
}

Rat binom(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    Rat r(1);
    for (long i = 0; i < k; ++i) r *= Rat(n - i) / Rat(i + 1);
    return r;
}

} // namespace

TEST_CASE("characteristic polynomial of the A1 doublet is mu^2 - chi1 mu + 1") {
    auto p = characteristic_polynomial(DynkinType::parse("A1"), {1});
    std::vector<std::string> v = {"mu", "chi1"};
    PolyQ expected = parse_poly_expr("mu^2 - chi1 mu + 1", v);
    CHECK(p == expected.lift(p.vars, p.denom));
}

TEST_CASE("closed-form exterior relations agree with numeric character values") {
    // Independent oracle: evaluate the closed-form polynomials at the
    // fundamental character values of a few rational torus points and compare
    // against the exterior characters computed from the weight system.
    for (const char* name : {"A3", "B3", "B4", "C3", "C4", "D4", "D5"}) {
        auto t = DynkinType::parse(name);
        Weight hw(t.rank, 0);
        hw[0] = 1;
        auto rel = exterior_relations(t, hw);
        for (long draw = 0; draw < 3; ++draw) {
            std::vector<Rat> Q;
            static const long primes[] = {2, 3, 5, 7, 11, 13, 17};
            for (int i = 0; i < t.rank; ++i)
                Q.push_back(Rat(primes[(i + 2 * draw) % 7], primes[(i + 2 * draw + 1) % 7]));
            std::map<std::string, Rat> chi;
            for (int i = 1; i <= t.rank; ++i)
                chi["chi" + std::to_string(i)] = fundamental_character_eval(t, i, Q);
            for (auto& [k, p] : rel) {
                Rat expect = exterior_character_eval(t, hw, k, Q);
                CHECK_MESSAGE(p.eval(chi) == expect, std::string(name), " k=", k);
            }
        }
    }
}

TEST_CASE("G2 canonical superpotential matches its closed form") {
    auto sp = superpotential(canonical_family("G2"));
    PolyQ expected_num = parse_poly_expr(
        "w0 (mu^6 + (1-w1)mu^5 + (1+w2)mu^4 + (1-w1^2+2w2)mu^3 + (1+w2)mu^2 "
        "+ (1-w1)mu + 1)",
        sp.num.vars);
    PolyQ expected_den = parse_poly_expr("mu^2 (mu+1)^2", sp.den.vars);
    CHECK(sp.num == expected_num);
    CHECK(sp.den == expected_den);
    std::vector<std::pair<std::string, long>> poles = {{"0", 2}, {"-1", 2}, {"inf", 2}};
    CHECK(sp.pole_profile == poles);
}

TEST_CASE("the non-canonical G2 node is quadratic in lambda") {
    auto t = DynkinType::parse("G2");
    auto fam = spectral_family(t, minimal_weight(t), 1);
    CHECK_THROWS_AS(superpotential(fam), NotLinearInLambda);
    // Independent derivation: the node-2 superpotential fixes the quotient
    // characteristic polynomial Q = E(mu, chi1) + chi2 mu^2 (mu+1)^2 with
    //   E = mu^6 + (1-chi1)(mu^5+mu) + mu^4 + (1-chi1^2) mu^3 + mu^2 + 1.
    // Shifting chi1 -> w1 - lambda/w0 instead (and clearing w0^2) gives the
    // quadratic family below, which the computed one must equal up to sign.
    PolyQ w0 = PolyQ::variable(fam.poly.vars, 1, "w0");
    PolyQ cleared = fam.poly * w0 * w0;
    PolyQ expected = parse_poly_expr(
        "w0^2 (mu^6 + (1-w1)(mu^5+mu) + mu^4 + (1-w1^2) mu^3 + mu^2 + 1 "
        "+ w2 mu^2 (mu+1)^2) "
        "+ lambda w0 (mu^5 + 2w1 mu^3 + mu) - lambda^2 mu^3",
        fam.poly.vars);
    bool match = (cleared == expected) || (cleared == -expected);
    CHECK(match);
}

TEST_CASE("classical pole profiles match the closed forms") {
    auto profile = [](const std::string& name) {
        return superpotential(canonical_family(name)).pole_profile;
    };
    using PP = std::vector<std::pair<std::string, long>>;
    CHECK(profile("A4") == PP{{"0", 3}, {"inf", 2}});   // orders (l+1-kbar, kbar)
    CHECK(profile("A5") == PP{{"0", 4}, {"inf", 2}});
    CHECK(profile("B3") == PP{{"0", 2}, {"-1", 2}, {"inf", 2}});
    CHECK(profile("B5") == PP{{"0", 4}, {"-1", 2}, {"inf", 4}});
    CHECK(profile("C3") == PP{{"0", 3}, {"inf", 3}});
    CHECK(profile("C5") == PP{{"0", 5}, {"inf", 5}});
    CHECK(profile("D4") == PP{{"0", 2}, {"1", 2}, {"-1", 2}, {"inf", 2}});
    CHECK(profile("D6") == PP{{"0", 4}, {"1", 2}, {"-1", 2}, {"inf", 4}});
}

TEST_CASE("substituting the superpotential back into the family gives zero") {
    for (const char* name : {"A3", "B3", "C3", "D4", "G2"}) {
        auto fam = canonical_family(name);
        auto sp = superpotential(fam);
        // The family is A*lambda + B; lambda = num/den means A*num + B*den = 0.
        auto bylam = fam.poly.univariate("lambda");
        PolyQ A = bylam.at(1).lift(sp.num.vars, 1);
        PolyQ B = bylam.at(0).lift(sp.num.vars, 1);
        // Clear the w0^{-1} on A and the matching factor introduced by the
        // reduction: A num / den + B = 0 iff A num + B den = 0 up to the
        // constant cancelled in the reduction, so compare projectively.
        PolyQ lhs = A * sp.num;
        PolyQ rhs = -(B * sp.den);
        // Projective check: lhs * c == rhs for a single constant c.
        REQUIRE(!lhs.is_zero());
        auto [e0, c0] = *lhs.terms.begin();
        auto it = rhs.terms.find(e0);
        REQUIRE(it != rhs.terms.end());
        Rat c = it->second / c0;
        CHECK_MESSAGE(lhs * c == rhs, name);
    }
}

TEST_CASE("B, C and D superpotentials are invariant under mu -> 1/mu") {
    for (const char* name : {"B3", "B4", "C3", "C4", "D4", "D5"}) {
        auto sp = superpotential(canonical_family(name));
        long dn = sp.num.max_exp("mu"), dd = sp.den.max_exp("mu");
        // lambda(1/mu) = lambda(mu) iff num and den are palindromic up to the
        // common degree offset: num_rev * den == num * den_rev * mu^{dn-dd}.
        int mi = sp.num.var_index("mu");
        auto reversed = [&](const PolyQ& p, long deg) {
            PolyQ r(p.vars, 1);
            for (auto& [e, c] : p.terms) {
                Expv er = e;
                er[mi] = static_cast<int>(deg - e[mi]);
                r.add_term(er, c);
            }
            return r;
        };
        Expv sh(sp.num.vars.size(), 0);
        sh[mi] = static_cast<int>(dn - dd);
        PolyQ lhs = reversed(sp.num, dn) * sp.den;
        PolyQ rhs = (sp.num * reversed(sp.den, dd)).shifted(sh);
        CHECK_MESSAGE(lhs == rhs, name);
    }
}

TEST_CASE("genus and branch data for the genus-zero types") {
    for (const char* name : {"A4", "B3", "C3", "D4", "G2"}) {
        auto np = newton_polygon_genus(canonical_family(name));
        CHECK_MESSAGE(np.genus == 0, name);
        CHECK_MESSAGE(np.genus_exact, name);
    }
    auto g2 = newton_polygon_genus(canonical_family("G2"));
    CHECK(g2.profile_at_infinity == std::vector<long>{1, 1, 1});
}

TEST_CASE("E6 curve: genus 5 with ramification (3,6 | 6,3 | 3,3,3)") {
    auto np = newton_polygon_genus(canonical_family("E6"));
    CHECK(np.genus == 5);
    CHECK(np.genus_exact);
    CHECK(np.lambda_map_degree == 27);
    CHECK(profile_string(np) == "0:6,3 inf:6,3 1:3 eps3:3 eps3^2:3 ");
    std::vector<long> n = np.profile_at_infinity;
    std::sort(n.rbegin(), n.rend());
    CHECK(n == std::vector<long>{5, 5, 2, 2, 2, 2, 2});
}

TEST_CASE("F4 curve: genus 4 with ramification (3,6 | 3,6) and two cube points") {
    auto np = newton_polygon_genus(canonical_family("F4"));
    CHECK(np.genus == 4);
    CHECK(np.genus_exact);
    CHECK(np.lambda_map_degree == 24);
    CHECK(profile_string(np) == "0:6,3 inf:6,3 eps3:3 eps3^2:3 ");
    std::vector<long> n = np.profile_at_infinity;
    std::sort(n.rbegin(), n.rend());
    CHECK(n == std::vector<long>{5, 5, 2, 2, 2, 2});
}

TEST_CASE("pole orders always sum to the degree of the lambda projection") {
    for (const char* name : {"A4", "B4", "C4", "D5", "G2", "F4", "E6"}) {
        auto np = newton_polygon_genus(canonical_family(name));
        long total = 0;
        for (auto& [c, orders] : np.branch_profile)
            total = std::accumulate(orders.begin(), orders.end(), total);
        CHECK_MESSAGE(total == np.lambda_map_degree, name);
    }
}

TEST_CASE("comparison family: structure of the three-integer superpotentials") {
    // Laurent mode (m = 0, k < l): poles (k, l+1-k) at 0 and infinity.
    auto a = dszz_superpotential(4, 2, 0);
    using PP = std::vector<std::pair<std::string, long>>;
    CHECK(a.pole_profile == PP{{"0", 2}, {"inf", 3}});
    // Rational mode (l, l, 0): poles (l, l).
    auto c = dszz_superpotential(3, 3, 0);
    CHECK(c.pole_profile == PP{{"0", 3}, {"inf", 3}});
    // Rational mode (l, l-1, 1): poles (l-1, 2, l-1) at 0, 1, infinity.
    auto b = dszz_superpotential(3, 2, 1);
    CHECK(b.pole_profile == PP{{"0", 2}, {"1", 2}, {"inf", 2}});
    // Rational mode (l, l-2, 1): poles (l-2, 2, 2, l-2).
    auto d = dszz_superpotential(4, 2, 1);
    CHECK(d.pole_profile == PP{{"0", 2}, {"1", 2}, {"-1", 2}, {"inf", 2}});
    CHECK_THROWS_AS(dszz_superpotential(3, 0, 0), InvalidParameters);
    CHECK_THROWS_AS(dszz_superpotential(3, 5, 0), InvalidParameters);
    CHECK_THROWS_AS(dszz_superpotential(3, 3, 1), InvalidParameters);
}

TEST_CASE("comparison family: numeric value of the C3 member at a = (1,0,0,1)") {
    // lambda = 2^{-6}((mu+1)/sqrt(mu))^6 + 1 evaluated at mu = 4:
    // 2^{-6} * (5/2)^6 + 1 = 15625/4096 + 1.
    auto c = dszz_superpotential(3, 3, 0);
    std::map<std::string, Rat> at{{"mu", Rat(4)}, {"a0", Rat(1)}, {"a1", Rat(0)},
                                  {"a2", Rat(0)}, {"a3", Rat(1)}};
    Rat val = c.num.eval(at) / c.den.eval(at);
    CHECK(val == Rat(15625, 4096) + Rat(1));
}

TEST_CASE("type A coefficient identification") {
    auto m = dszz_match(DynkinType::parse("A4"));
    // kbar = 2: identification at mu -> mu with a_i = w0 (-1)^i w_i.
    CHECK(m.mu_sign == 1);
    auto at = [&](const std::string& k, const std::map<std::string, Rat>& v) {
        return m.map.at(k).eval(v);
    };
    std::map<std::string, Rat> pt{{"w0", Rat(3)}, {"w1", Rat(5)}, {"w2", Rat(7)},
                                  {"w3", Rat(11)}, {"w4", Rat(13)}};
    CHECK(at("a0", pt) == Rat(3));
    CHECK(at("a1", pt) == Rat(-15));
    CHECK(at("a2", pt) == Rat(21));
    CHECK(at("a3", pt) == Rat(-33));
    CHECK(at("a4", pt) == Rat(39));
    CHECK(at("a5", pt) == Rat(-3));
}

TEST_CASE("type B identification matches the closed-form epsilon map") {
    // eps_i = 1/w0 sum_j a_j 2^{-2(l-j-1)} C(2l-2j+1, i-j).  The published
    // closed form carries an extra (-1)^l that belongs to the opposite
    // orientation of the odd-dimensional characteristic polynomial.
    for (long l : {3L, 4L}) {
        auto m = dszz_match(DynkinType::parse("B" + std::to_string(l)));
        CHECK(m.mu_sign == -1);
        for (long i = 0; i <= l; ++i) {
            const PolyQ& sol = m.map.at("eps" + std::to_string(i));
            PolyQ expected(sol.vars, sol.denom);
            Expv e(sol.vars.size(), 0);
            e[sol.var_index("w0")] = -1;
            for (long j = 0; j <= i; ++j) {
                Rat coef = rat_pow(Rat(2), -2 * (l - j - 1)) * binom(2 * l - 2 * j + 1, i - j);
                Expv ej = e;
                ej[sol.var_index("a" + std::to_string(j))] = 1;
                expected.add_term(ej, coef);
            }
            CHECK_MESSAGE(sol == expected, "B", l, " eps", i);
        }
    }
}

TEST_CASE("type C identification matches the closed-form epsilon map") {
    // eps_i = -(-1)^{l+i-1}/w0 sum_j a_j 2^{-2(l-j)} C(2(l-j), i-j), again up
    // to the overall reversal sign; the D map is 16 times the C map.
    for (char s : {'C', 'D'}) {
        for (long l : {3L, 4L, 5L}) {
            if (s == 'D' && l == 3) continue;
            auto m = dszz_match(DynkinType::parse(std::string(1, s) + std::to_string(l)));
            CHECK(m.mu_sign == 1);
            Rat scale = (s == 'D') ? Rat(16) : Rat(1);
            for (long i = 0; i <= l; ++i) {
                const PolyQ& sol = m.map.at("eps" + std::to_string(i));
                PolyQ expected(sol.vars, sol.denom);
                Expv e(sol.vars.size(), 0);
                e[sol.var_index("w0")] = -1;
                for (long j = 0; j <= i; ++j) {
                    Rat coef = -Rat((l + i - 1) % 2 == 0 ? 1 : -1) * scale *
                               rat_pow(Rat(2), -2 * (l - j)) * binom(2 * (l - j), i - j);
                    Expv ej = e;
                    ej[sol.var_index("a" + std::to_string(j))] = 1;
                    expected.add_term(ej, coef);
                }
                CHECK_MESSAGE(sol == expected, s, l, " eps", i);
            }
        }
    }
}

TEST_CASE("E7 curve: ramification (12,6,4 | 12,6,4 | 2 | 2 | 4 | 4), degree 56"
          * doctest::skip(std::getenv("LGM_EXTENDED") == nullptr)) {
    // ~10 minutes: the rank-7 symbolic family is large.  The triple cover has
    // lambda-degree 3, so only the polygon bound is available for the genus.
    auto np = newton_polygon_genus(canonical_family("E7"));
    CHECK(np.lambda_map_degree == 56);
    CHECK(!np.genus_exact);
    CHECK(profile_string(np) == "0:12,6,4 inf:12,6,4 1:2 -1:2 i:4 -i:4 ");
    std::vector<long> n = np.profile_at_infinity;
    std::sort(n.rbegin(), n.rend());
    CHECK(n == std::vector<long>{11, 11, 5, 5, 3, 3, 3, 3, 1, 1});
}

TEST_CASE("invalid spectral requests are rejected") {
    auto t = DynkinType::parse("B3");
    CHECK_THROWS_AS(spectral_family(t, {1, 0, 0}, 0), InvalidParameters);
    CHECK_THROWS_AS(spectral_family(t, {1, 0, 0}, 4), InvalidParameters);
    CHECK_THROWS_AS(minimal_weight(DynkinType::parse("E8")), InvalidParameters);
}
