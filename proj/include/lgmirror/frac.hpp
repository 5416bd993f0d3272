// Fractions of sparse Laurent polynomials, with opportunistic reduction
// (monomial content plus exact-division cancellation; no general gcd).
#pragma once

#include "poly.hpp"

namespace lgm {

template <class K>
struct Frac {
    Poly<K> num, den;

    Frac() = default;
    explicit Frac(const Poly<K>& n) : num(n), den(Poly<K>::constant(n.vars, n.denom, K(1))) {}
    Frac(const Poly<K>& n, const Poly<K>& d) : num(n), den(d) {
        if (den.is_zero()) throw std::domain_error("fraction with zero denominator");
        reduce();
    }

    static Frac constant(std::vector<std::string> vs, long dnm, const K& c) {
        return Frac(Poly<K>::constant(vs, dnm, c));
    }

    bool is_zero() const { return num.is_zero(); }

    bool is_poly() const {
        return den.terms.size() == 1;
    }

    // When the denominator is a single invertible monomial, fold it into num.
    Poly<K> as_poly() const {
        if (den.terms.size() != 1) throw std::domain_error("fraction is not polynomial");
        auto& [e, c] = *den.terms.begin();
        Expv ei(e.size());
        for (size_t i = 0; i < e.size(); ++i) ei[i] = -e[i];
        return num * Poly<K>::monomial(num.vars, num.denom, ei, kinv(c));
    }

    void reduce() {
        if (num.is_zero()) {
            den = Poly<K>::constant(den.vars, den.denom, K(1));
            return;
        }
        // Strip common monomial content.
        Expv mn = num.min_exps(), md = den.min_exps();
        Expv sh(mn.size());
        for (size_t i = 0; i < sh.size(); ++i) sh[i] = -std::min(mn[i], md[i]);
        bool nontrivial = false;
        for (int s : sh) nontrivial |= (s != 0);
        if (nontrivial) { num = num.shifted(sh); den = den.shifted(sh); }
        // Full cancellation if one divides the other.
        Poly<K> q;
        if (den.terms.size() > 1 && num.try_divide(den, q)) {
            num = q;
            den = Poly<K>::constant(den.vars, den.denom, K(1));
        } else if (den.terms.size() > 1 && num.terms.size() > 1 && den.try_divide(num, q)) {
            den = q;
            num = Poly<K>::constant(num.vars, num.denom, K(1));
        }
        // Normalize: leading denominator coefficient = 1.
        auto lead = std::prev(den.terms.end());
        if (!(lead->second == K(1))) {
            K inv = kinv(lead->second);
            num = num * inv;
            den = den * inv;
        }
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        if (a.den == b.den) return Frac(a.num + b.num, a.den);
        return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        if (a.den == b.den) return Frac(a.num - b.num, a.den);
        return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    Frac operator-() const { Frac r; r.num = -num; r.den = den; return r; }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num * b.num, a.den * b.den);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num.is_zero()) throw std::domain_error("division by zero fraction");
        return Frac(a.num * b.den, a.den * b.num);
    }
    Frac& operator+=(const Frac& b) { *this = *this + b; return *this; }
    Frac& operator-=(const Frac& b) { *this = *this - b; return *this; }
    Frac& operator*=(const Frac& b) { *this = *this * b; return *this; }
    Frac inverse() const {
        if (num.is_zero()) throw std::domain_error("inverse of zero fraction");
        Frac r;
        r.num = den;
        r.den = num;
        r.reduce();
        return r;
    }
    friend bool operator==(const Frac& a, const Frac& b) {
        return (a.num * b.den - b.num * a.den).is_zero();
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
};

using FracQ = Frac<Rat>;
using FracC = Frac<Cyclo>;

} // namespace lgm
