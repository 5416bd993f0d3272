// Weight systems of irreducible representations: Freudenthal multiplicities
// over the dominant cone, Weyl-orbit expansion, Weyl dimension formula oracle.
#pragma once

#include <algorithm>
#include <map>
#include <queue>

#include "dynkin.hpp"

namespace lgm {

struct WeightSystem {
    Weight highest;
    std::map<Weight, long> entries; // weight (omega components) -> multiplicity
    long dimension = 0;
};

// Sort a weight into the dominant chamber by simple reflections.
inline Weight dominize(const RootSystemData& rs, Weight w) {
    int l = rs.type.rank;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < l; ++i) {
            if (w[i] < 0) {
                int wi = w[i];
                for (int j = 0; j < l; ++j) w[j] -= wi * rs.cartan[i][j];
                moved = true;
            }
        }
    }
    return w;
}

inline Rat weyl_dimension(const RootSystemData& rs, const Weight& hw) {
    int l = rs.type.rank;
    Weight rho(l, 1);
    Weight hwrho(l);
    for (int i = 0; i < l; ++i) hwrho[i] = hw[i] + 1;
    Rat num(1), den(1);
    for (const Weight& beta : rs.positive_roots) {
        num *= weight_inner(rs, hwrho, beta);
        den *= weight_inner(rs, rho, beta);
    }
    return num / den;
}

inline WeightSystem weight_system(const RootSystemData& rs, const Weight& hw) {
    int l = rs.type.rank;
    if ((int)hw.size() != l) throw std::invalid_argument("weight length mismatch");
    for (int c : hw)
        if (c < 0) throw std::invalid_argument("weight_system: non-dominant highest weight");

    // 1) Full weight set by downward simple-root strings from the highest weight.
    std::map<Weight, char> wset;
    {
        std::vector<Weight> frontier{hw};
        wset.emplace(hw, 1);
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const Weight& w : frontier) {
                for (int i = 0; i < l; ++i) {
                    if (w[i] <= 0) continue;
                    Weight w2 = w;
                    for (int k = 0; k < w[i]; ++k) {
                        for (int j = 0; j < l; ++j) w2[j] -= rs.cartan[i][j];
                        if (wset.emplace(w2, 1).second) next.push_back(w2);
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    // 2) Dominant representatives ordered by decreasing height.
    std::map<Weight, Rat> heights; // height of hw - mu in the root lattice
    std::vector<Weight> dominants;
    for (auto& [w, tag] : wset) {
        bool dom = true;
        for (int c : w) dom &= (c >= 0);
        if (!dom) continue;
        Rat h(0);
        for (int k = 0; k < l; ++k) {
            Rat nk(0);
            for (int j = 0; j < l; ++j) nk += rs.inverse_cartan[j][k] * Rat(hw[j] - w[j]);
            h += nk;
        }
        heights.emplace(w, h);
        dominants.push_back(w);
    }
    std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
        return heights[a] < heights[b];
    });

    // 3) Freudenthal recursion over dominant weights, shallow first.
    std::map<Weight, Rat> mult;
    Weight rho(l, 1);
    Weight hwrho(l);
    for (int i = 0; i < l; ++i) hwrho[i] = hw[i] + 1;
    Rat chw = weight_inner(rs, hwrho, hwrho);
    for (const Weight& mu : dominants) {
        if (mu == hw) { mult[mu] = Rat(1); continue; }
        Weight murho(l);
        for (int i = 0; i < l; ++i) murho[i] = mu[i] + 1;
        Rat denom = chw - weight_inner(rs, murho, murho);
        Rat acc(0);
        for (const Weight& beta : rs.positive_roots) {
            Weight nu = mu;
            for (long k = 1;; ++k) {
                for (int j = 0; j < l; ++j) nu[j] += beta[j];
                if (!wset.count(nu)) break;
                Weight nudom = dominize(rs, nu);
                auto it = mult.find(nudom);
                if (it == mult.end())
                    throw std::logic_error("Freudenthal ordering violated");
                acc += it->second * weight_inner(rs, nu, beta);
            }
        }
        mult[mu] = Rat(2) * acc / denom;
        if (mult[mu].get_den() != 1) throw std::logic_error("non-integer multiplicity");
    }

    // 4) Expand to the full system.
    WeightSystem ws;
    ws.highest = hw;
    for (auto& [w, tag] : wset) {
        Rat m = mult.at(dominize(rs, w));
        long mv = static_cast<long>(m.get_num().get_si());
        ws.entries.emplace(w, mv);
        ws.dimension += mv;
    }
    return ws;
}

} // namespace lgm
