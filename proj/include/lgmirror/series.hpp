// Truncated Puiseux series in one local parameter, with coefficients in an
// arbitrary exact field-like type (typically Frac<K>).
//
// Exponents are k/ram with k integer; `nmax` is the (scaled) truncation bound:
// coefficients with exponent >= nmax/ram are unknown. Because coefficient
// types carry shape (variable sets), every series stores a multiplicative
// unit prototype `one`.
#pragma once

#include <map>
#include <numeric>
#include <stdexcept>

#include "frac.hpp"

namespace lgm {

inline bool cis_zero(const Rat& r) { return r == 0; }
inline bool cis_zero(const Cyclo& c) { return c.is_zero(); }
template <class K> bool cis_zero(const Frac<K>& f) { return f.is_zero(); }
inline Rat cinv(const Rat& r) { return Rat(1) / r; }
inline Cyclo cinv(const Cyclo& c) { return c.inverse(); }
template <class K> Frac<K> cinv(const Frac<K>& f) { return f.inverse(); }
inline Rat cmul_rat(const Rat& a, const Rat& s) { return a * s; }
inline Cyclo cmul_rat(const Cyclo& a, const Rat& s) { return a * s; }
template <class K> Frac<K> cmul_rat(const Frac<K>& f, const Rat& s) {
    Frac<K> r;
    r.num = f.num * K(s);
    r.den = f.den;
    return r;
}

constexpr long SERIES_EXACT = 1L << 40; // truncation sentinel for exact series

template <class C>
struct Series {
    long ram = 1;            // exponent denominator
    long nmax = 0;           // scaled truncation bound (exclusive)
    C one;                   // multiplicative unit prototype
    std::map<long, C> a;     // scaled exponent -> nonzero coefficient

    Series() = default;
    Series(long ram_, long nmax_, const C& one_) : ram(ram_), nmax(nmax_), one(one_) {}

    C zero() const { return one - one; }
    bool is_zero() const { return a.empty(); }
    long ord() const { return a.empty() ? nmax : a.begin()->first; }

    void set(long k, const C& c) {
        if (k >= nmax) return;
        if (cis_zero(c)) a.erase(k);
        else a.insert_or_assign(k, c);
    }
    void add(long k, const C& c) {
        if (k >= nmax || cis_zero(c)) return;
        auto it = a.find(k);
        if (it == a.end()) a.emplace(k, c);
        else {
            it->second += c;
            if (cis_zero(it->second)) a.erase(it);
        }
    }
    C coeff(long k) const { // scaled exponent
        auto it = a.find(k);
        return it == a.end() ? zero() : it->second;
    }

    Series rescaled(long newram) const {
        if (newram == ram) return *this;
        if (newram % ram != 0) throw std::invalid_argument("series ram not refined");
        long f = newram / ram;
        Series r(newram, nmax >= SERIES_EXACT ? nmax : nmax * f, one);
        for (auto& [k, c] : a) r.a.emplace(k * f, c);
        return r;
    }

    static long align(const Series& x, const Series& y, Series& xa, Series& ya) {
        long l = std::lcm(x.ram, y.ram);
        xa = x.rescaled(l);
        ya = y.rescaled(l);
        return l;
    }

    friend Series operator+(const Series& x, const Series& y) {
        Series xa, ya;
        long l = align(x, y, xa, ya);
        Series r(l, std::min(xa.nmax, ya.nmax), x.one);
        r.a = std::move(xa.a);
        for (auto& [k, c] : ya.a) {
            auto it = r.a.find(k);
            if (it == r.a.end()) r.a.emplace(k, c);
            else {
                it->second += c;
                if (cis_zero(it->second)) r.a.erase(it);
            }
        }
        r.chop();
        return r;
    }
    friend Series operator-(const Series& x, const Series& y) { return x + (-y); }
    Series operator-() const {
        Series r(ram, nmax, one);
        C z = zero();
        for (auto& [k, c] : a) r.a.emplace(k, z - c);
        return r;
    }
    friend Series operator*(const Series& x, const Series& y) {
        Series xa, ya;
        long l = align(x, y, xa, ya);
        long cut = std::min(sat_add(xa.nmax, ya.ord()), sat_add(ya.nmax, xa.ord()));
        Series r(l, cut, x.one);
        for (auto& [kx, cx] : xa.a)
            for (auto& [ky, cy] : ya.a)
                r.add(kx + ky, cx * cy);
        return r;
    }
    friend Series operator*(const Series& x, const C& s) {
        Series r(x.ram, x.nmax, x.one);
        for (auto& [k, c] : x.a) {
            C v = c * s;
            if (!cis_zero(v)) r.a.emplace(k, v);
        }
        return r;
    }
    Series& operator+=(const Series& y) { *this = *this + y; return *this; }
    Series& operator-=(const Series& y) { *this = *this - y; return *this; }
    Series& operator*=(const Series& y) { *this = *this * y; return *this; }

    static long sat_add(long x, long y) {
        if (x >= SERIES_EXACT && y >= SERIES_EXACT) return SERIES_EXACT;
        if (x >= SERIES_EXACT) return (y >= 0) ? SERIES_EXACT : x + y;
        if (y >= SERIES_EXACT) return (x >= 0) ? SERIES_EXACT : x + y;
        return x + y;
    }

    void chop() {
        for (auto it = a.begin(); it != a.end();)
            it = (it->first >= nmax) ? a.erase(it) : std::next(it);
    }
    void truncate(long newnmax) {
        nmax = std::min(nmax, newnmax);
        chop();
    }

    // Multiplicative inverse; requires a nonzero leading coefficient.
    Series inverse() const {
        if (a.empty()) throw std::domain_error("inverse of zero series");
        long v = ord();
        C c0inv = cinv(a.begin()->second);
        long span = (nmax >= SERIES_EXACT) ? SERIES_EXACT : nmax - v; // relative orders known
        if (span >= SERIES_EXACT && a.size() > 1) span = SERIES_EXACT; // exact input, still exact geometric tail? no:
        // An exact non-monomial input has an infinite inverse expansion; cap it.
        if (nmax >= SERIES_EXACT && a.size() > 1)
            throw std::domain_error("inverse of exact non-monomial series needs explicit truncation");
        Series u(ram, span, one);
        for (auto it = std::next(a.begin()); it != a.end(); ++it)
            u.add(it->first - v, it->second * c0inv);
        Series acc(ram, span, one);
        acc.set(0, one);
        Series pw = acc;
        Series mu = -u;
        while (!mu.is_zero()) {
            pw = pw * mu;
            if (pw.is_zero() || pw.ord() >= span) break;
            acc += pw;
        }
        Series r(ram, (nmax >= SERIES_EXACT) ? SERIES_EXACT : nmax - 2 * v, one);
        for (auto& [k, c] : acc.a) {
            C v2 = c * c0inv;
            if (!cis_zero(v2)) r.add(k - v, v2);
        }
        return r;
    }

    friend Series operator/(const Series& x, const Series& y) { return x * y.inverse(); }

    Series pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        if (n == 0) {
            Series r(ram, nmax >= SERIES_EXACT ? SERIES_EXACT : nmax, one);
            r.set(0, one);
            return r;
        }
        Series r = *this;
        Series b = *this;
        long left = n - 1;
        while (left > 0) { // simple iterated product; sizes here are small
            r = r * b;
            --left;
        }
        return r;
    }

    // (1 + u)^e for rational e, where *this = u must have positive order.
    Series binom_pow(const Rat& e) const {
        if (!a.empty() && ord() <= 0) throw std::domain_error("binom_pow needs positive order");
        if (nmax >= SERIES_EXACT && !a.empty())
            throw std::domain_error("binom_pow needs explicit truncation");
        Series r(ram, nmax, one);
        r.set(0, one);
        Series pw(ram, nmax, one);
        pw.set(0, one);
        Rat binom(1);
        long kmaxsteps = a.empty() ? 0 : (nmax / std::max<long>(1, ord()) + 1);
        for (long k = 1; k <= kmaxsteps; ++k) {
            binom *= (e - Rat(k - 1)) / Rat(k);
            pw = pw * (*this);
            if (pw.is_zero()) break;
            if (binom == 0) continue;
            for (auto& [kk, c] : pw.a) r.add(kk, cmul_rat(c, binom));
            if (pw.ord() >= nmax) break;
        }
        return r;
    }

    // log(1 + u), u = *this with positive order.
    Series log1p() const {
        if (!a.empty() && ord() <= 0) throw std::domain_error("log1p needs positive order");
        if (nmax >= SERIES_EXACT && !a.empty())
            throw std::domain_error("log1p needs explicit truncation");
        Series r(ram, nmax, one);
        Series pw(ram, nmax, one);
        pw.set(0, one);
        long kmaxsteps = a.empty() ? 0 : (nmax / std::max<long>(1, ord()) + 1);
        for (long k = 1; k <= kmaxsteps; ++k) {
            pw = pw * (*this);
            if (pw.is_zero()) break;
            Rat s = Rat((k % 2) ? 1 : -1, k);
            for (auto& [kk, c] : pw.a) r.add(kk, cmul_rat(c, s));
            if (pw.ord() >= nmax) break;
        }
        return r;
    }

    // d/ds where s is the (unscaled) local parameter.
    Series derivative() const {
        Series r(ram, nmax >= SERIES_EXACT ? SERIES_EXACT : nmax - ram, one);
        for (auto& [k, c] : a) {
            if (k == 0) continue;
            r.add(k - ram, cmul_rat(c, Rat(k, ram)));
        }
        return r;
    }
};

} // namespace lgm
