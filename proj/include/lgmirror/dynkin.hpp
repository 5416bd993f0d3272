// Simple Dynkin types, Cartan data, and node numbering.
//
// Node numbering follows the affine-diagram figures used throughout the
// relation tables, not Bourbaki. For A/B/C/D the two agree (plain chains,
// short root last for B, long root last for C). For the exceptional types the
// long chain is numbered first and the branch node last:
//
//   paper      E6: 1-2-3-4-5, branch 6 on node 3   (Bourbaki 1,3,4,5,6 / 2)
//   paper      E7: 1-2-3-4-5-6, branch 7 on node 3 (Bourbaki 1,3,4,5,6,7 / 2)
//   paper      E8: 1-2-3-4-5-6-7, branch 8 on node 3
//   F4, G2: Bourbaki order (long roots first for F4; alpha1 short for G2).
//
// The translation table is exposed as bourbaki_node().
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <map>

#include "linsolve.hpp"
#include "rational.hpp"

namespace lgm {

struct DynkinType {
    char series = 'A';
    int rank = 1;

    DynkinType() = default;
    DynkinType(char s, int r) : series(s), rank(r) { validate(); }

    void validate() const {
        bool ok = false;
        switch (series) {
            case 'A': ok = rank >= 1; break;
            case 'B': ok = rank >= 2; break;
            case 'C': ok = rank >= 2; break;
            case 'D': ok = rank >= 4; break;
            case 'E': ok = rank >= 6 && rank <= 8; break;
            case 'F': ok = rank == 4; break;
            case 'G': ok = rank == 2; break;
            default: ok = false;
        }
        if (!ok) throw std::invalid_argument("invalid Dynkin type " + name());
    }

    std::string name() const { return std::string(1, series) + std::to_string(rank); }

    static DynkinType parse(const std::string& s) {
        if (s.size() < 2) throw std::invalid_argument("bad type string: " + s);
        return DynkinType(s[0], std::stoi(s.substr(1)));
    }

    friend bool operator==(const DynkinType& a, const DynkinType& b) {
        return a.series == b.series && a.rank == b.rank;
    }
};

using Weight = std::vector<int>; // components in the fundamental-weight basis

struct RootSystemData {
    DynkinType type;
    std::vector<std::vector<int>> cartan;       // C[i][j] = 2(a_i,a_j)/(a_j,a_j)
    std::vector<Rat> symmetrizer;               // D_j = (a_j,a_j)/2, short roots = 1... scaled so min = 1
    std::vector<std::vector<Rat>> symmetrized;  // K[i][j] = (a_i, a_j)
    std::vector<std::vector<Rat>> inverse_cartan;
    int marked_node = 0;                        // 1-based
    std::vector<Rat> degree_ratios;             // d_j / d_kbar
    std::vector<Weight> positive_roots;         // omega-basis components
};

inline int marked_node_of(const DynkinType& t) {
    switch (t.series) {
        case 'A': return t.rank / 2 == 0 ? 1 : t.rank / 2;
        case 'B': return t.rank - 1;
        case 'C': return t.rank;
        case 'D': return t.rank - 2;
        case 'E': return 3;
        case 'F': return 2;
        case 'G': return 2;
    }
    throw std::invalid_argument("invalid type");
}

// Paper node index (1-based) -> Bourbaki node index (1-based).
inline int bourbaki_node(const DynkinType& t, int i) {
    if (t.series != 'E') return i;
    return (i == t.rank) ? 2 : (i == 1 ? 1 : i + 1);
}

inline std::vector<std::vector<int>> cartan_matrix(const DynkinType& t) {
    int l = t.rank;
    std::vector<std::vector<int>> C(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) C[i][i] = 2;
    auto link = [&](int i, int j, int cij = -1, int cji = -1) {
        C[i - 1][j - 1] = cij;
        C[j - 1][i - 1] = cji;
    };
    switch (t.series) {
        case 'A':
            for (int i = 1; i < l; ++i) link(i, i + 1);
            break;
        case 'B': // alpha_l short
            for (int i = 1; i + 1 < l; ++i) link(i, i + 1);
            link(l - 1, l, -2, -1);
            break;
        case 'C': // alpha_l long
            for (int i = 1; i + 1 < l; ++i) link(i, i + 1);
            link(l - 1, l, -1, -2);
            break;
        case 'D':
            for (int i = 1; i + 1 < l - 1; ++i) link(i, i + 1);
            link(l - 2, l - 1);
            link(l - 2, l);
            break;
        case 'E':
            for (int i = 1; i + 1 < l; ++i) link(i, i + 1);
            link(3, l);
            break;
        case 'F':
            link(1, 2);
            link(2, 3, -2, -1); // alpha1, alpha2 long
            link(3, 4);
            break;
        case 'G':
            link(1, 2, -1, -3); // alpha1 short, alpha2 long
            break;
    }
    return C;
}

namespace detail {
inline std::vector<std::vector<Rat>> invert_int_matrix(const std::vector<std::vector<int>>& C) {
    size_t n = C.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    MatQ A(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) A(i, j) = Rat(C[i][j]);
    for (size_t col = 0; col < n; ++col) {
        std::vector<Rat> e(n, Rat(0));
        e[col] = Rat(1);
        auto x = bareiss_solve(A, e);
        if (!x) throw std::runtime_error("Cartan matrix not invertible");
        for (size_t i = 0; i < n; ++i) inv[i][col] = (*x)[i];
    }
    return inv;
}
} // namespace detail

inline RootSystemData root_system(const DynkinType& t) {
    t.validate();
    RootSystemData rs;
    rs.type = t;
    rs.cartan = cartan_matrix(t);
    int l = t.rank;
    // Symmetrizer: D_j proportional to (a_j, a_j)/2, normalized min = 1.
    // Solve D_i C_ij = D_j C_ji along edges.
    rs.symmetrizer.assign(l, Rat(0));
    rs.symmetrizer[0] = Rat(1);
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                if (i == j || rs.cartan[i][j] == 0) continue;
                if (rs.symmetrizer[i] != 0 && rs.symmetrizer[j] == 0) {
                    rs.symmetrizer[j] = rs.symmetrizer[i] * Rat(rs.cartan[j][i]) / Rat(rs.cartan[i][j]);
                    changed = true;
                }
            }
    }
    Rat mn = rs.symmetrizer[0];
    for (auto& d : rs.symmetrizer) mn = std::min(mn, d);
    for (auto& d : rs.symmetrizer) d /= mn;
    rs.symmetrized.assign(l, std::vector<Rat>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) rs.symmetrized[i][j] = Rat(rs.cartan[i][j]) * rs.symmetrizer[j];
    rs.inverse_cartan = detail::invert_int_matrix(rs.cartan);
    rs.marked_node = marked_node_of(t);
    int kb = rs.marked_node - 1;
    rs.degree_ratios.assign(l, Rat(0));
    for (int j = 0; j < l; ++j)
        rs.degree_ratios[j] = rs.inverse_cartan[j][kb] / rs.inverse_cartan[kb][kb];
    // Positive roots: close simple roots under reflections, keep positives.
    // Track alpha-basis coordinates alongside omega-basis components.
    std::vector<std::pair<Weight, std::vector<int>>> all;
    std::map<Weight, std::vector<int>> seen;
    for (int i = 0; i < l; ++i) {
        Weight w(l);
        for (int j = 0; j < l; ++j) w[j] = rs.cartan[i][j];
        std::vector<int> a(l, 0);
        a[i] = 1;
        seen.emplace(w, a);
    }
    for (bool grew = true; grew;) {
        grew = false;
        auto snapshot = seen;
        for (auto& [w, a] : snapshot) {
            for (int i = 0; i < l; ++i) {
                if (w[i] == 0) continue;
                Weight w2 = w;
                std::vector<int> a2 = a;
                for (int j = 0; j < l; ++j) w2[j] -= w[i] * rs.cartan[i][j];
                a2[i] -= w[i];
                if (seen.emplace(std::move(w2), std::move(a2)).second) grew = true;
            }
        }
    }
    for (auto& [w, a] : seen) {
        bool pos = false;
        for (int x : a) {
            if (x > 0) { pos = true; break; }
            if (x < 0) { pos = false; break; }
        }
        if (pos) rs.positive_roots.push_back(w);
    }
    return rs;
}

inline std::vector<Rat> degrees(const DynkinType& t) { return root_system(t).degree_ratios; }

// Inner product of weights (omega-basis) under the symmetrized form:
// (omega_i, omega_j) = (C^-1)_{ij} D_j.
inline Rat weight_inner(const RootSystemData& rs, const Weight& a, const Weight& b) {
    int l = rs.type.rank;
    Rat s(0);
    for (int i = 0; i < l; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < l; ++j) {
            if (b[j] == 0) continue;
            s += Rat(a[i]) * rs.inverse_cartan[i][j] * rs.symmetrizer[j] * Rat(b[j]);
        }
    }
    return s;
}

// Dominance order: a <= b iff b - a is a nonnegative-integer combination of
// simple roots (components n = C^{-T} applied suitably; solved exactly).
inline bool dominance_leq(const Weight& a, const Weight& b, const RootSystemData& rs) {
    int l = rs.type.rank;
    if ((int)a.size() != l || (int)b.size() != l)
        throw std::invalid_argument("dominance_leq: length mismatch");
    // b - a = sum_k n_k alpha_k; in omega components (alpha_k)_j = C[k][j],
    // so (b-a)_j = sum_k n_k C[k][j] and n = C^{-T} (b-a).
    for (int k = 0; k < l; ++k) {
        Rat nk(0);
        for (int j = 0; j < l; ++j) nk += rs.inverse_cartan[j][k] * Rat(b[j] - a[j]);
        if (nk < 0 || nk.get_den() != 1) return false;
    }
    return true;
}

} // namespace lgm
