#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgmirror/llmap.hpp"

using namespace lgm;

namespace {
const std::string kCache = std::string(LGM_FIXTURES_DIR) + "/char";
}

TEST_CASE("degree table: exceptional rows") {
    CHECK(ll_degree(DynkinType::parse("G2")) == Int(12));
    CHECK(ll_degree(DynkinType::parse("F4")) == Int(1080));       // 2^3 3^3 5
    CHECK(ll_degree(DynkinType::parse("E6")) == Int(204120));     // 2^3 3^6 5 7
    CHECK(ll_degree(DynkinType::parse("E7")) == Int(3870720));    // 2^12 3^3 5 7
    CHECK(ll_degree(DynkinType::parse("E8")) == Int(85050000));   // 2^4 3^5 5^5 7
}

TEST_CASE("degree table: classical closed forms for 2 <= l <= 8") {
    for (int l = 2; l <= 8; ++l) {
        CAPTURE(l);
        // A_l: the product formula agrees with Arnold's count for Laurent
        // polynomials with pole orders (kbar, l+1-kbar).  The closed form as
        // printed in the published table does not (see printed_table_a_degree).
        DynkinType a('A', l);
        int kbar = marked_node_of(a);
        CHECK(ll_degree(a) == arnold_a_degree(l, kbar));
        if (l >= 3) CHECK(ll_degree(DynkinType('B', l)) == table_b_degree(l));
        if (l >= 3) CHECK(ll_degree(DynkinType('C', l)) == table_c_degree(l));
        if (l >= 4) CHECK(ll_degree(DynkinType('D', l)) == table_d_degree(l));
    }
    // Document the discrepancy of the published A_l closed form: its value is
    // not even integral at (l, kbar) = (4, 2).
    CHECK(printed_table_a_degree(4, 2) == Rat(625) / Rat(36));
    CHECK(arnold_a_degree(4, 2) == Int(1080));
}

TEST_CASE("hurwitz dimensions match the table") {
    CHECK(hurwitz_dimension(0, {1, 1, 1}) == 7);                      // G2
    CHECK(hurwitz_dimension(5, {5, 5, 2, 2, 2, 2, 2}) == 42);         // E6
    CHECK(hurwitz_dimension(4, {5, 5, 2, 2, 2, 2}) == 36);            // F4
    CHECK(hurwitz_dimension(33, {11, 5, 3, 11, 5, 3, 1, 1, 3, 3}) == 130);  // E7
    for (int l = 3; l <= 6; ++l) {
        CHECK(hurwitz_dimension(0, {l - 2, l - 2, 1}) == 2 * l + 1);  // B_l
        CHECK(hurwitz_dimension(0, {l - 1, l - 1}) == 2 * l);         // C_l
        if (l >= 4)
            CHECK(hurwitz_dimension(0, {l - 3, l - 3, 1, 1}) == 2 * l + 2);  // D_l
    }
    // A_l: profile (kbar-1, l-kbar), dimension l+1.
    for (int l = 2; l <= 6; ++l) {
        int kbar = marked_node_of(DynkinType('A', l));
        CHECK(hurwitz_dimension(0, {kbar - 1, l - kbar}) == l + 1);
    }
}

TEST_CASE("ll_report ties curve data to the table") {
    LLReport g2 = ll_report(DynkinType::parse("G2"), kCache);
    CHECK(g2.degree == Int(12));
    CHECK(g2.genus == 0);
    CHECK(g2.genus_exact);
    CHECK(g2.hurwitz_dim == 7);
    std::vector<long> sg = g2.profile;
    std::sort(sg.begin(), sg.end());
    CHECK(sg == std::vector<long>{1, 1, 1});

    LLReport f4 = ll_report(DynkinType::parse("F4"), kCache);
    CHECK(f4.genus == 4);
    CHECK(f4.hurwitz_dim == 36);

    LLReport e8 = ll_report(DynkinType::parse("E8"), kCache);
    CHECK(e8.degree == Int(85050000));
    CHECK(e8.hurwitz_dim == 518);
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(hurwitz_dimension(-1, {1}), InvalidParameters);
    CHECK_THROWS_AS(hurwitz_dimension(0, {}), InvalidParameters);
    CHECK_THROWS_AS(hurwitz_dimension(0, {2, -1}), InvalidParameters);
}
