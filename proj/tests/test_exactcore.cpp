#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lgmirror/linsolve.hpp"
#include "lgmirror/series.hpp"

using namespace lgm;

TEST_CASE("rational parse/print/pow/root") {
    CHECK(rat_parse("-22/4") == rat(-11, 2));
    CHECK(rat_str(rat(-11, 2)) == "-11/2");
    CHECK(rat_pow(rat(2, 3), -3) == rat(27, 8));
    Rat r;
    CHECK(rat_root(rat(27, 8), 3, r));
    CHECK(r == rat(3, 2));
    CHECK(rat_root(rat(-27, 8), 3, r));
    CHECK(r == rat(-3, 2));
    CHECK_FALSE(rat_root(rat(2), 2, r));
}

TEST_CASE("cyclotomic field Q(zeta12)") {
    Cyclo z = Cyclo::zeta12_pow(1);
    Cyclo acc(1);
    for (int k = 0; k < 12; ++k) {
        CHECK(acc == Cyclo::zeta12_pow(k));
        acc *= z;
    }
    CHECK(acc == Cyclo(1));
    Cyclo z3 = cyclo_zeta3();
    CHECK((z3 * z3 + z3 + Cyclo(1)).is_zero()); // primitive cube root
    Cyclo i = cyclo_i();
    CHECK(i * i == Cyclo(-1));
    // inverse round-trip on a generic element
    Cyclo x = Cyclo(rat(3, 7)) + Cyclo::zeta12_pow(1) * rat(2, 5) + Cyclo::zeta12_pow(3) * rat(-1, 3);
    CHECK(x * x.inverse() == Cyclo(1));
}

static PolyQ mk(const std::vector<std::string>& v, long d = 1) { return PolyQ(v, d); }

TEST_CASE("polynomial arithmetic, substitution, derivative") {
    std::vector<std::string> v{"w0", "x", "y"};
    PolyQ x = PolyQ::variable(v, 1, "x");
    PolyQ y = PolyQ::variable(v, 1, "y");
    PolyQ w0 = PolyQ::variable(v, 1, "w0");
    PolyQ p = (x + y).pow(3);
    CHECK(p.terms.size() == 4);
    CHECK(p.eval({{"x", rat(2)}, {"y", rat(1)}, {"w0", rat(5)}}) == rat(27));
    PolyQ dp = p.derivative("x");
    CHECK(dp == PolyQ::constant(v, 1, rat(3)) * (x + y).pow(2));
    // Laurent + substitution
    PolyQ q = w0.pow(-2) * x + y;
    PolyQ qs = q.subst("x", w0.pow(3));
    CHECK(qs == w0 + y);
    // fractional exponents on w0
    PolyQ half = PolyQ::variable(v, 2, "w0"); // w0^1 with denom 2
    PolyQ sq = PolyQ::monomial(v, 2, {1, 0, 0}, rat(1)); // w0^{1/2}
    CHECK(sq * sq == half);
    CHECK(sq.derivative("w0") * (sq + sq) == PolyQ::constant(v, 2, rat(1)));
}

TEST_CASE("exact division and fractions") {
    std::vector<std::string> v{"x", "y"};
    PolyQ x = PolyQ::variable(v, 1, "x");
    PolyQ y = PolyQ::variable(v, 1, "y");
    PolyQ a = (x + y) * (x - y) * x.pow(-3);
    PolyQ q;
    CHECK(a.try_divide(x + y, q));
    CHECK(q == (x - y) * x.pow(-3));
    CHECK_FALSE((x * x + y).try_divide(x + y, q));
    FracQ f(x * x - y * y, x + y);
    CHECK(f.is_poly());
    CHECK(f.as_poly() == x - y);
    FracQ g = FracQ(x, x + y) + FracQ(y, x + y);
    CHECK(g.is_poly());
    CHECK(g.as_poly() == PolyQ::constant(v, 1, rat(1)));
}

TEST_CASE("series inverse, log, fractional powers") {
    using S = Series<Rat>;
    S s(1, 12, Rat(1));
    // s = 1 + t
    s.set(0, rat(1));
    s.set(1, rat(1));
    S inv = s.inverse();
    for (long k = 0; k < 12; ++k) CHECK(inv.coeff(k) == rat(k % 2 ? -1 : 1));
    S t(1, 12, Rat(1));
    t.set(1, rat(1));
    S lg = t.log1p();
    CHECK(lg.coeff(3) == rat(1, 3));
    CHECK(lg.coeff(4) == rat(-1, 4));
    // (1+t)^{1/2} squared = 1 + t
    S rt = t.binom_pow(rat(1, 2));
    S sq = rt * rt;
    CHECK(sq.coeff(0) == rat(1));
    CHECK(sq.coeff(1) == rat(1));
    for (long k = 2; k < sq.nmax; ++k) CHECK(sq.coeff(k) == rat(0));
    // Laurent inverse: (t^{-2}(1+t))^{-1} = t^2(1 - t + ...)
    S u(1, 10, Rat(1));
    u.set(-2, rat(1));
    u.set(-1, rat(1));
    S ui = u.inverse();
    CHECK(ui.coeff(2) == rat(1));
    CHECK(ui.coeff(3) == rat(-1));
}

TEST_CASE("bareiss: Hilbert 3x3 oracle") {
    MatQ A(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A(i, j) = rat(1, i + j + 1);
    std::vector<Rat> b{rat(1), rat(1), rat(1)};
    auto x = bareiss_solve(A, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == rat(3));
    CHECK((*x)[1] == rat(-24));
    CHECK((*x)[2] == rat(30));
    // singular matrix detected
    MatQ S(2, 2);
    S(0, 0) = rat(1); S(0, 1) = rat(2); S(1, 0) = rat(2); S(1, 1) = rat(4);
    CHECK_FALSE(bareiss_solve(S, {rat(1), rat(1)}).has_value());
}

TEST_CASE("dixon lifting agrees with bareiss") {
    std::mt19937 rng(12345);
    size_t n = 40;
    MatZ Az(n, n);
    MatQ Aq(n, n);
    std::vector<Int> bz(n);
    std::vector<Rat> bq(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            long v = static_cast<long>(rng() % 2001) - 1000;
            Az(i, j) = Int(v);
            Aq(i, j) = Rat(v);
        }
        long v = static_cast<long>(rng() % 2001) - 1000;
        bz[i] = Int(v);
        bq[i] = Rat(v);
    }
    auto xd = dixon_solve(Az, bz);
    auto xb = bareiss_solve(Aq, bq);
    REQUIRE(xd.has_value());
    REQUIRE(xb.has_value());
    for (size_t i = 0; i < n; ++i) CHECK((*xd)[i] == (*xb)[i]);
}

TEST_CASE("rational reconstruction round-trip") {
    Rat v = rat(-355, 113);
    Int m(1);
    for (int i = 0; i < 10; ++i) m *= 1000003;
    // x = v mod m
    Int den_inv;
    CHECK(mpz_invert(den_inv.get_mpz_t(), Int(113).get_mpz_t(), m.get_mpz_t()));
    Int x = (Int(-355) * den_inv) % m;
    if (x < 0) x += m;
    Rat out;
    CHECK(rat_reconstruct(x, m, out));
    CHECK(out == v);
}
