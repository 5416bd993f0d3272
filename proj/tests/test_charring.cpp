#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include <fstream>

#include "lgmirror/charring.hpp"
#include "lgmirror/expr.hpp"

using namespace lgm;

static PolyQ chipoly(int rank, std::vector<std::pair<Expv, long>> terms) {
    PolyQ p;
    for (int i = 1; i <= rank; ++i) p.vars.push_back("chi" + std::to_string(i));
    p.denom = 1;
    for (auto& [e, c] : terms) p.add_term(e, Rat(c));
    return p;
}

TEST_CASE("fundamental character evaluation") {
    CHECK(fundamental_character_eval(DynkinType('A', 1), 1, {rat(5, 7)}) ==
          rat(5, 7) + rat(7, 5));
    CHECK(fundamental_character_eval(DynkinType('G', 2), 1, {Rat(1), Rat(1)}) == Rat(7));
    CHECK(fundamental_character_eval(DynkinType('G', 2), 2, {Rat(1), Rat(1)}) == Rat(14));
    std::vector<Rat> ones6(6, Rat(1));
    CHECK(fundamental_character_eval(DynkinType('E', 6), 1, ones6) == Rat(27));
    CHECK_THROWS_AS(fundamental_character_eval(DynkinType('G', 2), 1, {Rat(0), Rat(1)}),
                    ZeroTorusPoint);
}

TEST_CASE("exterior characters via Newton's identities") {
    auto& rc = RepCache::of(DynkinType('G', 2));
    const WeightSystem& rho = rc.rep({1, 0});
    std::vector<Rat> id{Rat(1), Rat(1)};
    auto e = exterior_character_values(rho, id, 7);
    long binom[8] = {1, 7, 21, 35, 35, 21, 7, 1};
    for (int k = 0; k <= 7; ++k) CHECK(e[k] == Rat(binom[k]));

    std::vector<Rat> Q{rat(3, 5), rat(7, 2)};
    Rat chi1 = character_eval(rc.rep({1, 0}), Q);
    Rat chi2 = character_eval(rc.rep({0, 1}), Q);
    CHECK(exterior_character_eval(DynkinType('G', 2), {1, 0}, 3, Q) == chi1 * chi1 - chi2);
    CHECK(exterior_character_eval(DynkinType('G', 2), {1, 0}, 0, Q) == Rat(1));
    CHECK_THROWS_AS(exterior_character_eval(DynkinType('G', 2), {1, 0}, 8, Q), OutOfRangeK);
}

TEST_CASE("admissible exponent sets") {
    CHECK(admissible_exponents(DynkinType('G', 2), {1, 0}).exponents.size() == 4);
    CHECK(admissible_exponents(DynkinType('F', 4), {0, 0, 0, 1}).exponents.size() == 37);
    CHECK(admissible_exponents(DynkinType('E', 6), {1, 0, 0, 0, 0, 0}).exponents.size() == 111);
    CHECK(admissible_exponents(DynkinType('E', 6), {0, 0, 0, 0, 1, 0}).exponents.size() == 111);
    CHECK(admissible_exponents(DynkinType('E', 7), {0, 0, 0, 0, 0, 1, 0}).exponents.size() == 1151);
    CHECK_THROWS_AS(admissible_exponents(DynkinType('B', 3), {1, 0, 0}), MissingPivotalSet);
}

TEST_CASE("G2 decomposition matches the closed-form relations") {
    DynkinType g2('G', 2);
    CHECK(decompose_exterior(g2, {1, 0}, 1, 12345) == chipoly(2, {{{1, 0}, 1}}));
    CHECK(decompose_exterior(g2, {1, 0}, 2, 12345) == chipoly(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
    CHECK(decompose_exterior(g2, {1, 0}, 3, 12345) == chipoly(2, {{{2, 0}, 1}, {{0, 1}, -1}}));
    CHECK(verify_duality(g2, {1, 0}, 3, 12345));
    CHECK(verify_duality(g2, {1, 0}, 1, 12345));
}

TEST_CASE("F4 decomposition matches the closed-form relations") {
    DynkinType f4('F', 4);
    CHECK(decompose_exterior(f4, {0, 0, 0, 1}, 1, 12345) == chipoly(4, {{{0, 0, 0, 1}, 1}}));
    CHECK(decompose_exterior(f4, {0, 0, 0, 1}, 2, 12345) ==
          chipoly(4, {{{1, 0, 0, 0}, 1}, {{0, 0, 1, 0}, 1}}));
    CHECK(decompose_exterior(f4, {0, 0, 0, 1}, 3, 12345) ==
          chipoly(4, {{{0, 1, 0, 0}, 1}, {{1, 0, 0, 1}, 1}, {{0, 0, 0, 1}, -1}}));
    CHECK(decompose_exterior(f4, {0, 0, 0, 1}, 4, 12345) ==
          chipoly(4, {{{2, 0, 0, 0}, 1}, {{1, 0, 1, 0}, 1}, {{0, 0, 0, 2}, -1}, {{0, 1, 0, 0}, -1}}));
    CHECK(verify_duality(f4, {0, 0, 0, 1}, 13, 12345));
    CHECK(verify_duality(f4, {0, 0, 0, 1}, 5, 12345));
}

TEST_CASE("E6 decomposition") {
    DynkinType e6('E', 6);
    CHECK(decompose_exterior(e6, {1, 0, 0, 0, 0, 0}, 4, 12345) ==
          chipoly(6, {{{0, 0, 0, 0, 2, 0}, -1},
                      {{0, 1, 0, 0, 1, 0}, -1},
                      {{1, 0, 0, 0, 0, 0}, 1},
                      {{0, 0, 0, 1, 0, 0}, 1},
                      {{0, 0, 0, 1, 0, 1}, 1}}));
    CHECK_THROWS_AS(verify_duality(e6, {1, 0, 0, 0, 0, 0}, 4, 12345), NotSelfDual);
    // The conjugate representation decomposes into the mirrored monomials.
    auto p4 = decompose_exterior(e6, {1, 0, 0, 0, 0, 0}, 4, 12345);
    auto q4 = decompose_exterior(e6, {0, 0, 0, 0, 1, 0}, 4, 12345);
    PolyQ mirrored;
    mirrored.vars = p4.vars;
    mirrored.denom = 1;
    for (auto& [e, c] : p4.terms)
        mirrored.add_term({e[4], e[3], e[2], e[1], e[0], e[5]}, c);
    CHECK(q4 == mirrored);
}

TEST_CASE("decompositions agree with exterior characters at fresh points") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> small(1, 97);
    for (auto& [t, hw] : std::vector<std::pair<DynkinType, Weight>>{
             {DynkinType('G', 2), {1, 0}}, {DynkinType('F', 4), {0, 0, 0, 1}}}) {
        auto& dec = decompose_all(t, hw, 12345);
        auto& rho = RepCache::of(t).rep(hw);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Rat> Q(t.rank);
            for (auto& q : Q) q = rat(small(rng), small(rng));
            auto e = exterior_character_values(rho, Q, dec.dim);
            std::map<std::string, Rat> vals;
            for (int j = 0; j < t.rank; ++j)
                vals[dec.chivars[j]] = fundamental_character_eval(t, j + 1, Q);
            long k = 2 + trial % (dec.dim - 2);
            CHECK(dec.pk.at(k).eval(vals) == e[k]);
        }
    }
}

TEST_CASE("evaluating at the identity gives binomial coefficients") {
    for (auto& [t, hw] : std::vector<std::pair<DynkinType, Weight>>{
             {DynkinType('G', 2), {1, 0}}, {DynkinType('F', 4), {0, 0, 0, 1}}}) {
        auto& dec = decompose_all(t, hw, 12345);
        std::map<std::string, Rat> dims;
        for (int j = 0; j < t.rank; ++j)
            dims[dec.chivars[j]] = Rat(RepCache::of(t).fundamental(j + 1).dimension);
        for (long k = 0; k <= dec.dim; ++k) {
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), dec.dim, k);
            CHECK(dec.pk.at(k).eval(dims) == Rat(b));
        }
    }
}

TEST_CASE("user-supplied pivotal set: G2 adjoint") {
    // 2*rho majorizes every sum of distinct weights of the adjoint.
    DynkinType g2('G', 2);
    auto& dec = decompose_all(g2, {0, 1}, 4242, "", false, {{2, 2}});
    CHECK(dec.dim == 14);
    CHECK(dec.pk.at(1) == chipoly(2, {{{0, 1}, 1}}));
    // wedge^2 of a 14-dimensional representation has dimension 91.
    CHECK(dec.pk.at(2).eval({{"chi1", Rat(7)}, {"chi2", Rat(14)}}) == Rat(91));
}

TEST_CASE("polynomial JSON round trip") {
    PolyQ p = chipoly(3, {{{2, 0, 1}, 5}, {{0, 1, 0}, -3}});
    p.add_term({1, 1, 1}, rat(7, 2));
    auto j = poly_to_json(p);
    CHECK(poly_from_json(j) == p);
    CHECK(j.at("terms").size() == 3);
    // graded-lex order: total degree 1 first, ties by lex.
    CHECK(j.at("terms")[0].at("exp") == nlohmann::json({0, 1, 0}));
}

TEST_CASE("decompositions match the published relation tables term by term") {
    for (const char* name : {"G2", "F4", "E6", "E7"}) {
        std::ifstream in(std::string(LGM_FIXTURES_DIR) + "/charrel/" + name + ".json");
        REQUIRE(in.good());
        nlohmann::json fix = nlohmann::json::parse(in);
        DynkinType t = DynkinType::parse(fix.at("type").get<std::string>());
        Weight hw = fix.at("weight").get<Weight>();
        std::vector<std::string> vars = fix.at("variables").get<std::vector<std::string>>();
        auto& dec = decompose_all(t, hw, 12345, std::string(LGM_FIXTURES_DIR) + "/char");
        CHECK(dec.dim == fix.at("dimension").get<long>());
        for (auto& [kstr, expr] : fix.at("relations").items()) {
            long k = std::stol(kstr);
            PolyQ expected = parse_poly_expr(expr.get<std::string>(), vars);
            CHECK_MESSAGE(dec.pk.at(k) == expected, std::string(name), " k=", k);
            // G2, F4 and E7 tables list only the lower half; duality closes them.
            if (self_dual(t, hw)) CHECK(dec.pk.at(dec.dim - k) == dec.pk.at(k));
        }
    }
}
