#pragma once
// Local expansion machinery shared by the Frobenius-manifold pipeline: series
// of mu-polynomials at the distinguished centers of the mu-line (0, roots of
// unity, infinity) with coefficients that are rational functions of the
// w-chart variables, perfect-power roots of such polynomials, and a small
// exact rectangular linear solver.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo.hpp"
#include "frac.hpp"
#include "linsolve.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace lgm {

struct UnstabilizedSeries : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonRationalCurve : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankDeficiency : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AnsatzRankDeficiency : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WDVVResidual : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ProportionalityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using FC = Frac<PolyC>;
using SFC = Series<FC>;

// Common exponent denominator for the w-chart: w0 carries powers in (1/12)Z,
// which covers every fractional degree occurring through rank 7.
constexpr long WDEN = 12;

inline std::vector<std::string> wchart_vars(int l) {
    std::vector<std::string> vs;
    for (int i = 0; i <= l; ++i) vs.push_back("w" + std::to_string(i));
    return vs;
}

// Value of a finite center label as an element of Q(zeta12).
inline Cyclo center_value(const std::string& label) {
    if (label == "0") return Cyclo(0);
    if (label == "1") return Cyclo(1);
    if (label == "-1") return Cyclo(-1);
    if (label == "i") return Cyclo::zeta12_pow(3);
    if (label == "-i") return Cyclo::zeta12_pow(9);
    if (label == "eps3") return Cyclo::zeta12_pow(4);
    if (label == "eps3^2") return Cyclo::zeta12_pow(8);
    if (label == "-eps3") return Cyclo::zeta12_pow(10);
    if (label == "-eps3^2") return Cyclo::zeta12_pow(2);
    throw std::invalid_argument("unknown center label: " + label);
}

// View a polynomial in (mu, w...) as univariate in mu with PolyC coefficients
// over the target w-variable list (exponent denominator WDEN).  Any variable
// outside {mu} u wvars must be dead.
inline std::map<long, PolyC> mu_profile(const PolyQ& p, const std::vector<std::string>& wvars) {
    std::map<long, PolyC> out;
    int imu = -1;
    std::vector<int> pos(p.vars.size(), -1);
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
        if (p.vars[i] == "mu") { imu = static_cast<int>(i); continue; }
        for (std::size_t j = 0; j < wvars.size(); ++j)
            if (wvars[j] == p.vars[i]) { pos[i] = static_cast<int>(j); break; }
    }
    if (imu < 0) throw std::invalid_argument("mu_profile: no mu variable");
    for (auto& [e, c] : p.terms) {
        Expv en(wvars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (static_cast<int>(i) == imu || e[i] == 0) continue;
            if (pos[i] < 0)
                throw std::invalid_argument("mu_profile: live variable " + p.vars[i]);
            en[pos[i]] = (pos[i] == 0) ? e[i] * static_cast<int>(WDEN) : e[i];
        }
        auto it = out.find(e[imu]);
        if (it == out.end()) it = out.emplace(e[imu], PolyC(wvars, WDEN)).first;
        it->second.add_term(en, Cyclo(c));
        if (it->second.is_zero()) out.erase(it);
    }
    return out;
}

inline FC fc_one(const std::vector<std::string>& wvars) {
    return FC(PolyC::constant(wvars, WDEN, Cyclo(1)));
}
inline FC fc_of(const PolyC& p) { return FC(p); }
inline FC fc_const(const std::vector<std::string>& wvars, const Cyclo& c) {
    return FC(PolyC::constant(wvars, WDEN, c));
}

// Exact series of a mu-polynomial at a center: mu = c + s for finite labels,
// mu = 1/s at infinity.  Result has ram = 1 and is exact (truncate before
// inverting).
inline SFC center_series(const std::map<long, PolyC>& f, const std::string& label,
                         const std::vector<std::string>& wvars) {
    SFC out(1, SERIES_EXACT, fc_one(wvars));
    if (label == "inf") {
        for (auto& [k, p] : f) out.add(-k, fc_of(p));
        return out;
    }
    Cyclo c = center_value(label);
    for (auto& [k, p] : f) {
        if (k < 0) throw std::invalid_argument("center_series: negative mu exponent");
        // (c + s)^k
        Cyclo cp(1);
        std::vector<Cyclo> cpow(k + 1);
        for (long j = 0; j <= k; ++j) { cpow[j] = cp; cp *= c; }
        Rat binom(1);
        for (long j = 0; j <= k; ++j) {
            if (j > 0) binom *= Rat(k - j + 1) / Rat(j);
            Cyclo coef = cpow[k - j] * binom;
            if (!coef.is_zero()) out.add(j, fc_of(p * coef));
        }
    }
    return out;
}

// Multiplicative inverse of an exact series with coefficients correct up to
// exponent `upto` (inclusive) in the result.
inline SFC series_inv_to(const SFC& s, long upto) {
    if (s.is_zero()) throw std::domain_error("series_inv_to: zero series");
    SFC t = s;
    long v = s.ord();
    long cut = upto + 2 * v + 1;
    if (t.nmax >= SERIES_EXACT || t.nmax > cut) t.truncate(cut);
    return t.inverse();
}

// Residue at the center of a series built in the local parameter of that
// center: coefficient of s^{-1} for finite centers; at infinity the form is
// R d(1/s) so the residue is minus the s^{+1} coefficient.
inline FC series_residue(const SFC& s, const std::string& label) {
    if (s.ram != 1) {
        // Fractional exponents never contribute to a residue.
        long k = (label == "inf") ? s.ram : -s.ram;
        if (k >= s.nmax && s.nmax < SERIES_EXACT)
            throw UnstabilizedSeries("series_residue: truncation too shallow");
        FC r = s.coeff(k);
        return (label == "inf") ? -r : r;
    }
    long k = (label == "inf") ? 1 : -1;
    if (k >= s.nmax && s.nmax < SERIES_EXACT)
        throw UnstabilizedSeries("series_residue: truncation too shallow");
    FC r = s.coeff(k);
    return (label == "inf") ? -r : r;
}

// ---------- perfect-power roots ----------

namespace detail {
// r-th root of a monomial term; nullopt if exponents or the coefficient fail.
inline std::optional<std::pair<Expv, Cyclo>> monomial_root(const Expv& e, const Cyclo& c,
                                                           long r) {
    Expv er(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] % r != 0) return std::nullopt;
        er[i] = e[i] / static_cast<int>(r);
    }
    if (c.is_rational()) {
        Rat rt;
        if (rat_root(c.rational_part(), r, rt)) return std::make_pair(er, Cyclo(rt));
        if (r % 2 == 0 && rat_root(-c.rational_part(), r, rt)) return std::nullopt;
        return std::nullopt;
    }
    // Non-rational coefficients: try the twelve roots of unity times a rational.
    for (int k = 0; k < 12; ++k) {
        Cyclo z = Cyclo::zeta12_pow(k);
        Cyclo q = c * z.inverse();
        if (!q.is_rational()) continue;
        if (k % r != 0) continue;
        Rat rt;
        if (rat_root(q.rational_part(), r, rt))
            return std::make_pair(er, Cyclo(rt) * Cyclo::zeta12_pow(k / static_cast<int>(r)));
    }
    return std::nullopt;
}
}  // namespace detail

// Exact r-th root of a polynomial that is a perfect r-th power (up to the
// fractional-exponent convention on w0); nullopt if no root exists in
// Q(zeta12)[w, w0^(1/WDEN)].
inline std::optional<PolyC> poly_perfect_root(const PolyC& p, long r) {
    if (r == 1) return p;
    if (p.is_zero()) return p;
    auto lead = std::prev(p.terms.end());
    auto rt = detail::monomial_root(lead->first, lead->second, r);
    if (!rt) return std::nullopt;
    PolyC q = PolyC::monomial(p.vars, p.denom, rt->first, rt->second);
    if (p.terms.size() == 1) return q;
    Cyclo lcfact = (lead->second * Rat(r)) / rt->second;  // r * lead(q)^(r-1) coefficient
    Expv lead_q = rt->first;
    std::size_t guard = 4 * p.terms.size() * p.terms.size() + 64;
    for (std::size_t it = 0; it < guard; ++it) {
        PolyC rem = p - q.pow(r);
        if (rem.is_zero()) return q;
        auto rl = std::prev(rem.terms.end());
        Expv te(rl->first.size());
        for (std::size_t i = 0; i < te.size(); ++i)
            te[i] = rl->first[i] - (r - 1) * lead_q[i];
        if (!(te < lead_q)) return std::nullopt;  // not strictly decreasing: not a power
        q.add_term(te, rl->second * lcfact.inverse());
    }
    return std::nullopt;
}

// x^(a/b) for a fraction whose numerator and denominator are perfect b-th
// powers (after monomial content is handled by the Frac reduction).
inline FC fc_rat_pow(const FC& x, const Rat& e) {
    long a = e.get_num().get_si();
    long b = e.get_den().get_si();
    if (x.is_zero()) {
        if (a <= 0) throw std::domain_error("fc_rat_pow: zero base");
        return x;
    }
    auto rn = poly_perfect_root(x.num, b);
    auto rd = poly_perfect_root(x.den, b);
    if (!rn || !rd)
        throw UnstabilizedSeries("fc_rat_pow: base is not a perfect power (exponent " +
                                 rat_str(e) + ")");
    FC root(*rn, *rd);
    if (a >= 0) {
        FC r = fc_one(x.num.vars);
        for (long k = 0; k < a; ++k) r *= root;
        return r;
    }
    FC r = fc_one(x.num.vars);
    for (long k = 0; k < -a; ++k) r *= root;
    return r.inverse();
}

// ---------- rectangular exact linear algebra ----------

struct LinsysResult {
    bool consistent = false;
    bool unique = false;
    std::vector<Rat> x;  // one solution (free variables set to zero)
};

// Gaussian elimination for A x = b with A rows x cols over Q.
inline LinsysResult row_reduce_solve(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    std::size_t rows = A.size();
    std::size_t cols = rows ? A[0].size() : 0;
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[rank]);
        std::swap(b[piv], b[rank]);
        Rat inv = Rat(1) / A[rank][c];
        for (std::size_t j = c; j < cols; ++j) A[rank][j] *= inv;
        b[rank] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || A[i][c] == 0) continue;
            Rat f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    LinsysResult res;
    res.consistent = true;
    for (std::size_t i = rank; i < rows; ++i)
        if (b[i] != 0) { res.consistent = false; return res; }
    res.unique = (rank == cols);
    res.x.assign(cols, Rat(0));
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] >= 0) res.x[c] = b[pivot_of_col[c]];
    return res;
}

}  // namespace lgm
