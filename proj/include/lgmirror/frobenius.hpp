#pragma once
// The mirror pipeline: residue tensors in the w-chart, flat coordinates from
// puncture residues, prepotential reconstruction through a quasi-homogeneous
// ansatz, WDVV verification, and the intersection-form check.
//
// All residue computations happen on the mu-line.  For a genus-zero
// superpotential lambda = num/den the sum of residues of any meromorphic
// 1-form vanishes, which converts critical-point sums into sums over the
// poles of lambda together with mu = 0 and mu = infinity ("contour flip").
// Higher-genus members are handled branchwise through Newton-Puiseux
// expansions of the plane curve at its lambda-poles.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dynkin.hpp"
#include "expr.hpp"
#include "frac.hpp"
#include "localexp.hpp"
#include "poly.hpp"
#include "series.hpp"
#include "spectral.hpp"

namespace lgm {

// ---------- local branches of lambda at the distinguished centers ----------

struct LocalBranch {
    std::string label;  // center on the mu-line
    long order = 0;     // pole order of lambda along the branch (n_i + 1)
    SFC lambda;         // Laurent series in the local parameter s (ram = 1)
    FC c0;              // leading coefficient: lambda ~ c0 s^(-order)
};

namespace detail {

inline SFC truncated(const SFC& s, long cut) {
    SFC t = s;
    if (t.nmax >= SERIES_EXACT || t.nmax > cut) t.truncate(cut);
    return t;
}

}  // namespace detail

// Branches of a rational (genus-zero) superpotential: one per pole center,
// with lambda expanded to absolute exponent < depth.
inline std::vector<LocalBranch> rational_branches(const Superpotential& sp,
                                                  const std::vector<std::string>& wvars,
                                                  long depth = 4) {
    auto num_mu = mu_profile(sp.num, wvars);
    auto den_mu = mu_profile(sp.den, wvars);
    std::vector<LocalBranch> out;
    for (auto& [label, order] : sp.pole_profile) {
        SFC n = center_series(num_mu, label, wvars);
        SFC d = center_series(den_mu, label, wvars);
        SFC lam = detail::truncated(n, depth + d.ord()) * series_inv_to(d, depth - n.ord());
        lam.truncate(depth);
        LocalBranch b;
        b.label = label;
        b.order = order;
        if (lam.ord() != -order)
            throw NonRationalCurve("branch at " + label + " has order " +
                                   std::to_string(-lam.ord()) + ", profile says " +
                                   std::to_string(order));
        b.c0 = lam.coeff(lam.ord());
        b.lambda = lam;
        out.push_back(std::move(b));
    }
    return out;
}

// ---------- w-chart residue tensors (genus zero) ----------

struct WChartTensors {
    std::vector<std::string> wvars;
    int node = 0;  // 1-based shifted node (e-direction w_node)
    std::vector<std::vector<std::vector<FC>>> cTilde;  // (l+1)^3, totally symmetric
    std::vector<std::vector<FC>> etaTilde;             // (1/w0) cTilde[node]
    std::vector<std::vector<FC>> gammaTilde;           // w0 cTilde[0]
};

// Residue tensors of eta, gamma and c in the w-chart of a genus-zero
// superpotential.  Components are minus the sum over the poles of lambda
// (mu = 0 and infinity are always among them) of
//   Res d_i(lambda) d_j(lambda) d_k(lambda) / (mu^2 d_mu(lambda)) dmu.
inline WChartTensors lg_tensors(const Superpotential& sp, int node) {
    std::vector<std::string> wvars;
    for (auto& v : sp.num.vars)
        if (!v.empty() && v[0] == 'w') wvars.push_back(v);
    int n = static_cast<int>(wvars.size());  // l + 1
    PolyQ W = sp.num.derivative("mu") * sp.den - sp.num * sp.den.derivative("mu");
    std::vector<std::map<long, PolyC>> Ni;
    for (int i = 0; i < n; ++i) Ni.push_back(mu_profile(sp.num.derivative(wvars[i]), wvars));
    auto den_mu = mu_profile(sp.den, wvars);
    auto W_mu = mu_profile(W, wvars);

    std::set<std::string> labels;
    for (auto& [lab, ord] : sp.pole_profile) labels.insert(lab);
    labels.insert("0");
    labels.insert("inf");

    FC zero = fc_const(wvars, Cyclo(0));
    std::vector<std::vector<std::vector<FC>>> c(
        n, std::vector<std::vector<FC>>(n, std::vector<FC>(n, zero)));

    for (const auto& label : labels) {
        SFC Sden = center_series(den_mu, label, wvars);
        SFC SW = center_series(W_mu, label, wvars);
        SFC Smu2(1, SERIES_EXACT, fc_one(wvars));
        if (label == "inf") {
            Smu2.add(-2, fc_one(wvars));
        } else {
            Cyclo cc = center_value(label);
            Smu2.add(2, fc_one(wvars));
            if (!cc.is_zero()) {
                Smu2.add(0, fc_const(wvars, cc * cc));
                Smu2.add(1, fc_const(wvars, cc * Rat(2)));
            }
        }
        std::vector<SFC> SN;
        long mino = 0;
        for (int i = 0; i < n; ++i) {
            SN.push_back(center_series(Ni[i], label, wvars));
            if (!SN.back().is_zero()) mino = std::min(mino, SN.back().ord());
        }
        SFC D = Sden * SW * Smu2;
        SFC Dinv = series_inv_to(D, 1 - 3 * mino);
        long target = 2;  // need coefficients up to s^{+1}
        for (int i = 0; i < n; ++i) {
            if (SN[i].is_zero()) continue;
            long oi = SN[i].ord();
            for (int j = i; j < n; ++j) {
                if (SN[j].is_zero()) continue;
                long oj = SN[j].ord();
                for (int k = j; k < n; ++k) {
                    if (SN[k].is_zero()) continue;
                    long ok = SN[k].ord(), oD = Dinv.ord();
                    SFC S = detail::truncated(SN[i], target - oj - ok - oD) *
                            detail::truncated(SN[j], target - oi - ok - oD) *
                            detail::truncated(SN[k], target - oi - oj - oD) * Dinv;
                    FC r = series_residue(S, label);
                    if (!r.is_zero()) c[i][j][k] -= r;
                }
            }
        }
    }
    // Distribute the sorted representatives over all index orders.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int a = std::min({i, j, k}), cmax = std::max({i, j, k});
                int bmid = i + j + k - a - cmax;
                c[i][j][k] = c[a][bmid][cmax];
            }

    WChartTensors out;
    out.wvars = wvars;
    out.node = node;
    out.cTilde = std::move(c);
    FC w0 = fc_of(PolyC::variable(wvars, WDEN, "w0"));
    out.etaTilde.assign(n, std::vector<FC>(n, zero));
    out.gammaTilde.assign(n, std::vector<FC>(n, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.etaTilde[i][j] = out.cTilde[node][i][j] / w0;
            out.gammaTilde[i][j] = out.cTilde[0][i][j] * w0;
        }
    return out;
}

// ---------- implicit branches of a plane-curve family ----------

namespace detail {

// Evaluate a lambda-coefficient stack at a branch: sum_k C_k(s) L(s)^k.
inline SFC horner_eval(const std::vector<SFC>& C, const SFC& L) {
    SFC acc = C.back();
    for (std::size_t k = C.size() - 1; k-- > 0;) acc = acc * L + C[k];
    return acc;
}

inline std::vector<SFC> lambda_stack(const PolyQ& p, const std::string& label,
                                     const std::vector<std::string>& wvars) {
    auto bylam = p.univariate("lambda");
    long dmax = bylam.empty() ? 0 : bylam.rbegin()->first;
    std::vector<SFC> C(dmax + 1, SFC(1, SERIES_EXACT, fc_one(wvars)));
    for (auto& [k, q] : bylam) {
        if (k < 0) throw std::invalid_argument("lambda_stack: negative lambda exponent");
        C[k] = center_series(mu_profile(q, wvars), label, wvars);
    }
    return C;
}

}  // namespace detail

// All pole branches of the family curve at one center, each expanded to
// absolute exponent < depth via Newton iteration.  Only unramified branches
// (mu - c a local coordinate) with linear edge polynomials are supported;
// anything else raises UnstabilizedSeries.
inline std::vector<LocalBranch> curve_branches_at(const SpectralFamily& fam,
                                                  const std::string& label, long depth = 4) {
    std::vector<std::string> wvars;
    for (auto& v : fam.poly.vars)
        if (!v.empty() && v[0] == 'w') wvars.push_back(v);
    PolyQ P2 = fam.poly * PolyQ::variable(fam.poly.vars, 1, "w0");  // clear w0^{-1}
    std::vector<SFC> C = detail::lambda_stack(P2, label, wvars);
    long d = static_cast<long>(C.size()) - 1;
    // Newton polygon points (k, ord C_k).
    std::vector<std::pair<long, long>> pts;
    for (long k = 0; k <= d; ++k)
        if (!C[k].is_zero()) pts.emplace_back(k, C[k].ord());
    std::vector<LocalBranch> out;
    if (pts.size() < 2) return out;
    // Lower convex hull, scanned from k = d downward; edges with positive pole
    // order p give branches lambda ~ y0 s^{-p}.
    std::vector<std::pair<long, long>> hull;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull.back();
            // keep hull lower-convex: slope(a->b) vs slope(a->it)
            if ((b.second - a.second) * (it->first - a.first) >=
                (it->second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(*it);
    }
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        auto [k2, v2] = hull[e];      // higher lambda-degree
        auto [k1, v1] = hull[e + 1];  // lower lambda-degree
        long num = v1 - v2, denw = k2 - k1;
        if (num <= 0) continue;  // not a pole edge
        if (num % denw != 0) {
            if (denw > 1)
                throw UnstabilizedSeries("ramified branch at " + label + " (slope " +
                                         std::to_string(num) + "/" + std::to_string(denw) +
                                         ") not supported");
            continue;
        }
        long p = num / denw;
        if (denw != 1)
            throw UnstabilizedSeries("multi-sheet edge at " + label + " not supported");
        // Edge polynomial is linear: y0 = -lc(C_k1) / lc(C_k2) when the edge
        // joins adjacent hull points of width 1.
        FC y0 = -(C[k1].coeff(v1) / C[k2].coeff(v2));
        // Newton refinement of lambda = y0 s^{-p} + ...
        SFC lam(1, depth, fc_one(wvars));
        lam.add(-p, y0);
        std::vector<SFC> Cp(std::max<std::size_t>(1, C.size() - 1),
                            SFC(1, SERIES_EXACT, fc_one(wvars)));
        for (std::size_t k = 1; k < C.size(); ++k) {
            Cp[k - 1] = C[k] * fc_const(wvars, Cyclo(static_cast<long>(k)));
        }
        long resid_goal = depth + d * p + 8;
        for (int iter = 0; iter < 64; ++iter) {
            SFC F = detail::horner_eval(C, lam);
            if (F.is_zero() || F.ord() >= resid_goal) break;
            SFC Fp = detail::horner_eval(Cp, lam);
            SFC corr = detail::truncated(F, resid_goal) * series_inv_to(Fp, resid_goal);
            corr.truncate(depth);
            if (corr.is_zero()) break;
            lam = lam - corr;
            if (iter == 63)
                throw UnstabilizedSeries("Newton iteration failed to stabilize at " + label);
        }
        lam.truncate(depth);
        LocalBranch b;
        b.label = label;
        b.order = p;
        b.lambda = lam;
        b.c0 = y0;
        out.push_back(std::move(b));
    }
    return out;
}

inline std::vector<std::string> all_center_labels() {
    return {"0", "1", "-1", "eps3", "eps3^2", "i", "-i", "-eps3", "-eps3^2", "inf"};
}

// Branches at every lambda-pole of the family curve.
inline std::vector<LocalBranch> curve_branches(const SpectralFamily& fam, long depth = 4) {
    std::vector<LocalBranch> out;
    for (auto& lab : all_center_labels()) {
        auto bs = curve_branches_at(fam, lab, depth);
        for (auto& b : bs) out.push_back(std::move(b));
    }
    return out;
}

// ---------- branchwise c-tensor rows (all genera) ----------

// Row a of the c-tensor in the w-chart:
//   c_{aij} = sum over lambda-pole branches of
//             Res d_aP d_iP d_jP / (mu^2 (d_lambda P)^2 d_mu P) dmu
// evaluated along the branch (only the poles of lambda contribute).
inline std::vector<std::vector<FC>> c_row_branchwise(const SpectralFamily& fam,
                                                     const std::vector<LocalBranch>& branches,
                                                     int a) {
    std::vector<std::string> wvars;
    for (auto& v : fam.poly.vars)
        if (!v.empty() && v[0] == 'w') wvars.push_back(v);
    int n = static_cast<int>(wvars.size());
    PolyQ P2 = fam.poly * PolyQ::variable(fam.poly.vars, 1, "w0");
    PolyQ Pl = P2.derivative("lambda");
    PolyQ Pm = P2.derivative("mu");
    std::vector<PolyQ> Pw;
    for (int i = 0; i < n; ++i) Pw.push_back(P2.derivative(wvars[i]));

    FC zero = fc_const(wvars, Cyclo(0));
    std::vector<std::vector<FC>> row(n, std::vector<FC>(n, zero));
    for (const auto& b : branches) {
        auto eval = [&](const PolyQ& g) {
            return detail::horner_eval(detail::lambda_stack(g, b.label, wvars), b.lambda);
        };
        SFC SPl = eval(Pl), SPm = eval(Pm), SPa = eval(Pw[a]);
        // 1/mu^2 and the dmu/ds factor.
        SFC form(1, SERIES_EXACT, fc_one(wvars));
        if (b.label == "inf") {
            form.add(2 + 2, -fc_one(wvars));  // mu^{-2} = s^2 ; dmu = -s^{-2} ds
            form = SFC(1, SERIES_EXACT, fc_one(wvars));
            form.add(0, -fc_one(wvars));  // s^2 * s^{-2} = 1, sign from dmu
        } else {
            Cyclo cc = center_value(b.label);
            SFC mu2(1, SERIES_EXACT, fc_one(wvars));
            mu2.add(2, fc_one(wvars));
            if (!cc.is_zero()) {
                mu2.add(0, fc_const(wvars, cc * cc));
                mu2.add(1, fc_const(wvars, cc * Rat(2)));
            }
            form = series_inv_to(mu2, 2 - 3 * b.lambda.ord() * static_cast<long>(
                                              std::max<long>(1, P2.max_exp("lambda"))));
        }
        SFC denom = SPl * SPl * SPm;
        long upto = 2 - SPa.ord() * 3 - form.ord();
        SFC dinv = series_inv_to(denom, upto);
        for (int i = 0; i < n; ++i) {
            SFC SPi = eval(Pw[i]);
            if (SPi.is_zero()) continue;
            for (int j = i; j < n; ++j) {
                SFC SPj = eval(Pw[j]);
                if (SPj.is_zero()) continue;
                SFC S = SPa * SPi * SPj * dinv * form;
                FC r = S.coeff(-1);
                if (!r.is_zero()) {
                    row[i][j] += r;
                    if (i != j) row[j][i] += r;
                }
            }
        }
    }
    return row;
}

// c0 row (Eq. of the divergence-count argument): valid in all genera.
inline std::vector<std::vector<FC>> c0_tensor(const SpectralFamily& fam, long depth = 6) {
    auto branches = curve_branches(fam, depth);
    return c_row_branchwise(fam, branches, 0);
}

}  // namespace lgm
