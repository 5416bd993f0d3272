// Sparse multivariate Laurent polynomials over an exact coefficient field.
//
// Exponents are integers except for the distinguished variable (index 0),
// whose exponents live in (1/denom)Z and are stored scaled by denom.
// Canonical term order for serialization is graded lex on the scaled
// exponent vectors; in-memory storage uses plain lex (any fixed order works).
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo.hpp"
#include "rational.hpp"

namespace lgm {

inline bool kis_zero(const Rat& r) { return r == 0; }
inline bool kis_zero(const Cyclo& c) { return c.is_zero(); }
inline Rat kinv(const Rat& r) { return Rat(1) / r; }
inline Cyclo kinv(const Cyclo& c) { return c.inverse(); }

using Expv = std::vector<int>;

template <class K>
struct Poly {
    std::vector<std::string> vars;
    long denom = 1;                // exponent denominator for vars[0]
    std::map<Expv, K> terms;       // exponent vector (scaled) -> nonzero coefficient

    Poly() = default;
    Poly(std::vector<std::string> vs, long d = 1) : vars(std::move(vs)), denom(d) {
        if (denom <= 0) throw std::invalid_argument("denom must be positive");
    }

    size_t nvars() const { return vars.size(); }
    bool is_zero() const { return terms.empty(); }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown variable: " + name);
    }

    void check_compatible(const Poly& o) const {
        if (vars != o.vars || denom != o.denom)
            throw std::invalid_argument("polynomial variable sets/denoms differ");
    }

    void add_term(const Expv& e, const K& c) {
        if (e.size() != vars.size()) throw std::invalid_argument("exponent arity mismatch");
        if (kis_zero(c)) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (kis_zero(it->second)) terms.erase(it);
        }
    }

    static Poly constant(std::vector<std::string> vs, long d, const K& c) {
        Poly p(std::move(vs), d);
        p.add_term(Expv(p.vars.size(), 0), c);
        return p;
    }
    static Poly variable(std::vector<std::string> vs, long d, const std::string& name) {
        Poly p(std::move(vs), d);
        Expv e(p.vars.size(), 0);
        int i = p.var_index(name);
        e[i] = (i == 0) ? static_cast<int>(d) : 1;
        p.add_term(e, K(1));
        return p;
    }
    static Poly monomial(std::vector<std::string> vs, long d, const Expv& e, const K& c) {
        Poly p(std::move(vs), d);
        p.add_term(e, c);
        return p;
    }

    Poly clone_shape() const { return Poly(vars, denom); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        Poly r = a;
        for (auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        Poly r = a;
        for (auto& [e, c] : b.terms) r.add_term(e, -c);
        return r;
    }
    Poly operator-() const {
        Poly r(vars, denom);
        for (auto& [e, c] : terms) r.terms.emplace(e, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        Poly r(a.vars, a.denom);
        const Poly& small = a.terms.size() <= b.terms.size() ? a : b;
        const Poly& big = a.terms.size() <= b.terms.size() ? b : a;
        Expv e(a.vars.size());
        for (auto& [ea, ca] : small.terms) {
            for (auto& [eb, cb] : big.terms) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend Poly operator*(const Poly& a, const K& s) {
        Poly r(a.vars, a.denom);
        if (kis_zero(s)) return r;
        for (auto& [e, c] : a.terms) {
            K v = c * s;
            if (!kis_zero(v)) r.terms.emplace(e, v);
        }
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) { return a * s; }
    Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
    Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
    Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars == b.vars && a.denom == b.denom && a.terms == b.terms;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(long n) const {
        if (n < 0) {
            if (terms.size() != 1) throw std::domain_error("negative power of non-monomial");
            auto& [e, c] = *terms.begin();
            Expv ei(e.size());
            for (size_t i = 0; i < e.size(); ++i) ei[i] = -e[i];
            K ci = kinv(c);
            Poly base = monomial(vars, denom, ei, ci);
            return base.pow(-n);
        }
        Poly r = constant(vars, denom, K(1));
        Poly b = *this;
        while (n > 0) {
            if (n & 1) r = r * b;
            b = (n >>= 1) ? b * b : b;
        }
        return r;
    }

    // d/dx with the fractional-exponent convention on vars[0].
    Poly derivative(const std::string& name) const {
        int i = var_index(name);
        Poly r(vars, denom);
        for (auto& [e, c] : terms) {
            if (e[i] == 0) continue;
            Rat factor = (i == 0) ? Rat(e[i], denom) : Rat(e[i]);
            Expv en = e;
            en[i] -= (i == 0) ? static_cast<int>(denom) : 1;
            r.add_term(en, c * factor);
        }
        return r;
    }

    // View as univariate in `name`: scaled exponent -> coefficient (exponent slot zeroed).
    std::map<int, Poly> univariate(const std::string& name) const {
        int i = var_index(name);
        std::map<int, Poly> out;
        for (auto& [e, c] : terms) {
            Expv er = e;
            er[i] = 0;
            auto it = out.find(e[i]);
            if (it == out.end()) it = out.emplace(e[i], Poly(vars, denom)).first;
            it->second.add_term(er, c);
        }
        return out;
    }

    int min_exp(const std::string& name) const {
        if (terms.empty()) throw std::domain_error("min_exp of zero polynomial");
        int i = var_index(name), m = terms.begin()->first[i];
        for (auto& [e, c] : terms) m = std::min(m, e[i]);
        return m;
    }
    int max_exp(const std::string& name) const {
        if (terms.empty()) throw std::domain_error("max_exp of zero polynomial");
        int i = var_index(name), m = terms.begin()->first[i];
        for (auto& [e, c] : terms) m = std::max(m, e[i]);
        return m;
    }

    // Substitute one variable by a polynomial (same shape). Negative exponents
    // of the substituted variable require the target to be an invertible monomial.
    Poly subst(const std::string& name, const Poly& target) const {
        check_compatible(target);
        int i = var_index(name);
        if (i == 0 && denom != 1)
            throw std::invalid_argument("substitution into fractional-exponent slot");
        std::map<long, Poly> pows; // target^k cache
        pows[0] = constant(vars, denom, K(1));
        auto tpow = [&](long k) -> const Poly& {
            auto it = pows.find(k);
            if (it != pows.end()) return it->second;
            Poly v = target.pow(k);
            return pows.emplace(k, std::move(v)).first->second;
        };
        Poly r(vars, denom);
        for (auto& [e, c] : terms) {
            Expv er = e;
            er[i] = 0;
            r += monomial(vars, denom, er, c) * tpow(e[i]);
        }
        return r;
    }

    // Substitute rational values for a subset of variables. Values are plugged in
    // for the *unscaled* variable; fractional exponents of vars[0] therefore
    // require value == 1 or an exact root to exist.
    Poly eval_partial(const std::map<std::string, Rat>& vals) const {
        std::vector<int> idx;
        std::vector<Rat> v;
        for (auto& [n, r] : vals) { idx.push_back(var_index(n)); v.push_back(r); }
        Poly out(vars, denom);
        for (auto& [e, c] : terms) {
            K coef = c;
            Expv er = e;
            bool dead = false;
            for (size_t j = 0; j < idx.size(); ++j) {
                int i = idx[j];
                int ex = e[i];
                er[i] = 0;
                if (ex == 0) continue;
                if (i == 0) {
                    if (ex % denom != 0) {
                        Rat rt;
                        if (v[j] == 1) { continue; }
                        if (!rat_root(v[j], denom, rt))
                            throw std::domain_error("fractional power of value without exact root");
                        coef = coef * rat_pow(rt, ex);
                        continue;
                    }
                    ex /= static_cast<int>(denom);
                }
                if (v[j] == 0) {
                    if (ex < 0) throw std::domain_error("evaluation pole: 0^negative");
                    dead = true;
                    break;
                }
                coef = coef * rat_pow(v[j], ex);
            }
            if (!dead) out.add_term(er, coef);
        }
        return out;
    }

    K eval(const std::map<std::string, Rat>& vals) const {
        Poly p = eval_partial(vals);
        if (p.terms.empty()) return K(0);
        if (p.terms.size() != 1 || p.terms.begin()->first != Expv(vars.size(), 0))
            throw std::invalid_argument("eval: not all variables were assigned");
        return p.terms.begin()->second;
    }

    // Monomial content: per-variable minimum exponent vector.
    Expv min_exps() const {
        if (terms.empty()) throw std::domain_error("min_exps of zero polynomial");
        Expv m = terms.begin()->first;
        for (auto& [e, c] : terms)
            for (size_t i = 0; i < e.size(); ++i) m[i] = std::min(m[i], e[i]);
        return m;
    }

    Poly shifted(const Expv& by) const {
        Poly r(vars, denom);
        for (auto& [e, c] : terms) {
            Expv en = e;
            for (size_t i = 0; i < en.size(); ++i) en[i] += by[i];
            r.terms.emplace(en, c);
        }
        return r;
    }

    // Exact division attempt: on success sets q with *this == q * d.
    // Both operands are first normalized to nonnegative exponents (Laurent
    // monomial content is split off), then leading-term reduction in lex order
    // either divides exactly or detects failure.
    bool try_divide(const Poly& d, Poly& q) const {
        check_compatible(d);
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        q = Poly(vars, denom);
        if (is_zero()) return true;
        Expv mn_a = min_exps(), mn_d = d.min_exps();
        Expv neg_a = mn_a, neg_d = mn_d, back(vars.size());
        for (size_t i = 0; i < back.size(); ++i) {
            neg_a[i] = -mn_a[i];
            neg_d[i] = -mn_d[i];
            back[i] = mn_a[i] - mn_d[i];
        }
        Poly rem = shifted(neg_a);
        Poly dd = d.shifted(neg_d);
        auto lead = std::prev(dd.terms.end());
        const Expv le = lead->first;
        K lcinv = kinv(lead->second);
        Poly qq(vars, denom);
        while (!rem.terms.empty()) {
            auto rl = std::prev(rem.terms.end());
            const Expv& re = rl->first;
            Expv qe(re.size());
            for (size_t i = 0; i < re.size(); ++i) {
                qe[i] = re[i] - le[i];
                if (qe[i] < 0) return false; // leading term not divisible
            }
            Poly t = monomial(vars, denom, qe, rl->second * lcinv);
            qq += t;
            rem = rem - t * dd;
        }
        q = qq.shifted(back);
        return true;
    }

    // Rename-preserving embedding into a different variable set (match by name).
    Poly lift(const std::vector<std::string>& newvars, long newdenom) const {
        Poly r(newvars, newdenom);
        std::vector<int> pos(vars.size());
        for (size_t i = 0; i < vars.size(); ++i) {
            int p = -1;
            for (size_t j = 0; j < newvars.size(); ++j)
                if (newvars[j] == vars[i]) { p = static_cast<int>(j); break; }
            if (p < 0) throw std::invalid_argument("lift: missing variable " + vars[i]);
            pos[i] = p;
        }
        for (auto& [e, c] : terms) {
            Expv en(newvars.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) {
                long raw = e[i];
                if (i == 0 && denom > 1) {
                    if (pos[i] == 0) {
                        if ((raw * newdenom) % denom != 0)
                            throw std::invalid_argument("lift: denom not refined");
                        en[0] = static_cast<int>(raw * newdenom / denom);
                    } else {
                        if (raw % denom != 0)
                            throw std::invalid_argument("lift: fractional exponent into integer slot");
                        en[pos[i]] = static_cast<int>(raw / denom);
                    }
                } else {
                    en[pos[i]] = (pos[i] == 0) ? static_cast<int>(raw * newdenom) : static_cast<int>(raw);
                }
            }
            r.add_term(en, c);
        }
        return r;
    }
};

using PolyQ = Poly<Rat>;
using PolyC = Poly<Cyclo>;

// Graded-lex comparison on scaled exponent vectors (grade uses a common scale
// so the fractional slot is weighted correctly).
inline bool graded_lex_less(const Expv& a, const Expv& b, long denom) {
    long long ga = 0, gb = 0;
    for (size_t i = 0; i < a.size(); ++i) ga += (i == 0) ? a[i] : static_cast<long long>(a[i]) * denom;
    for (size_t i = 0; i < b.size(); ++i) gb += (i == 0) ? b[i] : static_cast<long long>(b[i]) * denom;
    if (ga != gb) return ga < gb;
    return a < b;
}

} // namespace lgm
