// Exact rational scalars on top of GMP, plus small parsing/printing helpers.
#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lgm {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", or "p/q" in base 10.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    if (e < 0) {
        if (b == 0) throw std::domain_error("0^negative");
        b = Rat(1) / b;
        e = -e;
    }
    Rat out;
    mpz_pow_ui(out.get_num().get_mpz_t(), b.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den().get_mpz_t(), b.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

// Exact k-th root of a rational, if one exists (principal sign rules: odd k may
// take negatives, even k requires nonnegative input).
inline bool rat_root(const Rat& x, long k, Rat& out) {
    if (k <= 0) throw std::invalid_argument("rat_root: k must be positive");
    if (k == 1) { out = x; return true; }
    Rat v = x;
    bool neg = v < 0;
    if (neg) {
        if (k % 2 == 0) return false;
        v = -v;
    }
    Rat r;
    if (!mpz_root(r.get_num().get_mpz_t(), v.get_num().get_mpz_t(), static_cast<unsigned long>(k))) return false;
    if (!mpz_root(r.get_den().get_mpz_t(), v.get_den().get_mpz_t(), static_cast<unsigned long>(k))) return false;
    out = neg ? Rat(-r) : r;
    return true;
}

} // namespace lgm
