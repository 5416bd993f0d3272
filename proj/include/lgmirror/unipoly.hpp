#pragma once

// Dense univariate polynomials over the cyclotomic field, plus the small
// amount of lattice geometry (convex hulls, interior-point counts) used for
// Newton polygons. Coefficient index = exponent; trailing zeros trimmed.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclo.hpp"

namespace lgm {

using UniC = std::vector<Cyclo>;

inline void uni_trim(UniC& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline long uni_deg(const UniC& p) { return static_cast<long>(p.size()) - 1; }

inline Cyclo uni_eval(const UniC& p, const Cyclo& x) {
    Cyclo acc{Rat(0)};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline UniC uni_mul(const UniC& a, const UniC& b) {
    if (a.empty() || b.empty()) return {};
    UniC r(a.size() + b.size() - 1, Cyclo{Rat(0)});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    uni_trim(r);
    return r;
}

inline UniC uni_sub(const UniC& a, const UniC& b) {
    UniC r = a;
    if (b.size() > r.size()) r.resize(b.size(), Cyclo{Rat(0)});
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    uni_trim(r);
    return r;
}

inline UniC uni_scale(const UniC& a, const Cyclo& s) {
    UniC r = a;
    for (auto& c : r) c = c * s;
    uni_trim(r);
    return r;
}

// Euclidean division over the coefficient field: a = q*b + r with deg r < deg b.
inline void uni_divmod(const UniC& a, const UniC& b, UniC& q, UniC& r) {
    if (b.empty()) throw std::domain_error("uni_divmod: division by zero");
    r = a;
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Cyclo{Rat(0)});
    Cyclo lead_inv = b.back().inverse();
    while (r.size() >= b.size() && !r.empty()) {
        Cyclo f = r.back() * lead_inv;
        std::size_t shift = r.size() - b.size();
        q[shift] = q[shift] + f;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] = r[shift + i] - f * b[i];
        uni_trim(r);
    }
    uni_trim(q);
}

inline UniC uni_div_exact(const UniC& a, const UniC& b) {
    UniC q, r;
    uni_divmod(a, b, q, r);
    if (!r.empty()) throw std::domain_error("uni_div_exact: nonzero remainder");
    return q;
}

inline UniC uni_derivative(const UniC& p) {
    UniC d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    uni_trim(d);
    return d;
}

// Synthetic division by (x - c): returns quotient, sets `rem` to p(c).
inline UniC uni_divide_linear(const UniC& p, const Cyclo& c, Cyclo& rem) {
    UniC q(p.size() > 0 ? p.size() - 1 : 0, Cyclo{Rat(0)});
    Cyclo carry{Rat(0)};
    for (std::size_t i = p.size(); i-- > 0;) {
        Cyclo v = p[i] + carry * c;
        if (i == 0) { rem = v; break; }
        q[i - 1] = v;
        carry = v;
    }
    uni_trim(q);
    return q;
}

// Multiplicity of the root c, and the first nonvanishing Taylor coefficient
// of p at c (i.e. p^{(m)}(c)/m! for m the multiplicity).
inline long uni_root_multiplicity(const UniC& p, const Cyclo& c, Cyclo& leading) {
    if (p.empty()) throw std::domain_error("root multiplicity of zero polynomial");
    UniC cur = p;
    long m = 0;
    for (;;) {
        Cyclo rem;
        UniC q = uni_divide_linear(cur, c, rem);
        if (!rem.is_zero()) { leading = rem; return m; }
        ++m;
        cur = std::move(q);
    }
}

inline UniC uni_remainder(UniC a, const UniC& b) {
    if (b.empty()) throw std::domain_error("univariate division by zero");
    Cyclo lead_inv = b.back().inverse();
    while (uni_deg(a) >= uni_deg(b)) {
        long shift = uni_deg(a) - uni_deg(b);
        Cyclo f = a.back() * lead_inv;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = a[i + shift] - b[i] * f;
        uni_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline UniC uni_gcd(UniC a, UniC b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniC r = uni_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Cyclo inv = a.back().inverse();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

// Yun's squarefree decomposition: returns F with f = const * prod F[i]^{i+1},
// where F[i] collects the primes of multiplicity i+1 (monic).
inline std::vector<UniC> uni_squarefree_decomposition(const UniC& f) {
    std::vector<UniC> out;
    if (uni_deg(f) <= 0) return out;
    UniC fp = uni_derivative(f);
    UniC g = uni_gcd(f, fp);
    UniC c = uni_div_exact(f, g);
    UniC d = uni_sub(uni_div_exact(fp, g), uni_derivative(c));
    while (uni_deg(c) > 0) {
        UniC a = uni_gcd(c, d);
        out.push_back(a);
        c = uni_div_exact(c, a);
        d = uni_sub(uni_div_exact(d, a), uni_derivative(c));
    }
    return out;
}

inline bool uni_squarefree(const UniC& p) {
    if (uni_deg(p) <= 1) return true;
    return uni_deg(uni_gcd(p, uni_derivative(p))) == 0;
}

// ---------------------------------------------------------------------------
// Lattice geometry.

using LPoint = std::pair<long, long>;

inline long lp_cross(const LPoint& o, const LPoint& a, const LPoint& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

// Convex hull (Andrew's monotone chain), counter-clockwise, no collinear
// points retained.
inline std::vector<LPoint> convex_hull(std::vector<LPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<LPoint> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && lp_cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && lp_cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

inline bool strictly_inside(const std::vector<LPoint>& hull, const LPoint& p) {
    if (hull.size() < 3) return false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const LPoint& a = hull[i];
        const LPoint& b = hull[(i + 1) % hull.size()];
        if (lp_cross(a, b, p) <= 0) return false;
    }
    return true;
}

inline long interior_lattice_points(const std::vector<LPoint>& hull) {
    if (hull.size() < 3) return 0;
    long x0 = hull[0].first, x1 = x0, y0 = hull[0].second, y1 = y0;
    for (auto& [x, y] : hull) {
        x0 = std::min(x0, x); x1 = std::max(x1, x);
        y0 = std::min(y0, y); y1 = std::max(y1, y);
    }
    long n = 0;
    for (long x = x0 + 1; x < x1; ++x)
        for (long y = y0 + 1; y < y1; ++y)
            if (strictly_inside(hull, {x, y})) ++n;
    return n;
}

} // namespace lgm
