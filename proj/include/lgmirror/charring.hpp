// Character-ring decompositions: evaluate fundamental and exterior-power
// characters at exact rational torus points, and express exterior characters
// of the minimal representations as integer polynomials in the fundamental
// characters by sampling and exact linear solves.
#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <random>

#include "linsolve.hpp"
#include "poly_json.hpp"
#include "weights.hpp"

namespace lgm {

struct ZeroTorusPoint : std::invalid_argument {
    ZeroTorusPoint() : std::invalid_argument("torus point has a zero component") {}
};
struct OutOfRangeK : std::out_of_range {
    explicit OutOfRangeK(const std::string& m) : std::out_of_range(m) {}
};
struct MissingPivotalSet : std::invalid_argument {
    explicit MissingPivotalSet(const std::string& m) : std::invalid_argument(m) {}
};
struct SingularSample : std::runtime_error {
    SingularSample() : std::runtime_error("sampling matrix singular after bounded retries") {}
};
struct VerificationFailure : std::runtime_error {
    explicit VerificationFailure(const std::string& m) : std::runtime_error(m) {}
};
struct NotSelfDual : std::invalid_argument {
    explicit NotSelfDual(const std::string& m) : std::invalid_argument(m) {}
};

// Cache of root systems and weight systems, one per Dynkin type.
class RepCache {
  public:
    static RepCache& of(const DynkinType& t) {
        static std::map<std::string, std::unique_ptr<RepCache>> cache;
        auto& slot = cache[t.name()];
        if (!slot) slot.reset(new RepCache(t));
        return *slot;
    }
    const RootSystemData& rs() const { return rs_; }
    const WeightSystem& rep(const Weight& hw) {
        auto it = reps_.find(hw);
        if (it == reps_.end()) it = reps_.emplace(hw, weight_system(rs_, hw)).first;
        return it->second;
    }
    const WeightSystem& fundamental(int i) { // 1-based node index
        Weight hw(rs_.type.rank, 0);
        hw[i - 1] = 1;
        return rep(hw);
    }

  private:
    explicit RepCache(const DynkinType& t) : rs_(root_system(t)) {}
    RootSystemData rs_;
    std::map<Weight, WeightSystem> reps_;
};

// chi(Q^n) = sum over the weight system of mult * prod_j Q_j^{n mu_j},
// computed over a common denominator with cached integer powers.
inline Rat character_eval(const WeightSystem& ws, const std::vector<Rat>& Q, long n = 1) {
    int l = static_cast<int>(Q.size());
    if (l != (int)ws.highest.size()) throw std::invalid_argument("character_eval: bad point size");
    for (const Rat& q : Q)
        if (q == 0) throw ZeroTorusPoint();
    std::vector<long> M(l, 0);
    for (const auto& [w, m] : ws.entries)
        for (int j = 0; j < l; ++j) M[j] = std::max(M[j], std::abs(n * (long)w[j]));
    std::vector<std::vector<Int>> apow(l), bpow(l);
    for (int j = 0; j < l; ++j) {
        Int a = Q[j].get_num(), b = Q[j].get_den();
        apow[j].resize(2 * M[j] + 1);
        bpow[j].resize(2 * M[j] + 1);
        apow[j][0] = 1;
        bpow[j][0] = 1;
        for (long e = 1; e <= 2 * M[j]; ++e) {
            apow[j][e] = apow[j][e - 1] * a;
            bpow[j][e] = bpow[j][e - 1] * b;
        }
    }
    Int N(0), term;
    for (const auto& [w, m] : ws.entries) {
        term = m;
        for (int j = 0; j < l; ++j) {
            term *= apow[j][M[j] + n * w[j]];
            term *= bpow[j][M[j] - n * w[j]];
        }
        N += term;
    }
    Int D(1);
    for (int j = 0; j < l; ++j) D *= apow[j][M[j]] * bpow[j][M[j]];
    return Rat(N) / Rat(D);
}

inline Rat fundamental_character_eval(const DynkinType& t, int i, const std::vector<Rat>& Q) {
    if (i < 1 || i > t.rank) throw std::invalid_argument("node index out of range");
    return character_eval(RepCache::of(t).fundamental(i), Q);
}

// e_0..e_kmax of the multiset of torus eigenvalues, via power sums and
// Newton's identities: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
inline std::vector<Rat> exterior_character_values(const WeightSystem& ws,
                                                  const std::vector<Rat>& Q, long kmax) {
    if (kmax < 0 || kmax > ws.dimension)
        throw OutOfRangeK("exterior power out of range 0.." + std::to_string(ws.dimension));
    std::vector<Rat> p(kmax + 1), e(kmax + 1);
    for (long nn = 1; nn <= kmax; ++nn) p[nn] = character_eval(ws, Q, nn);
    e[0] = Rat(1);
    for (long k = 1; k <= kmax; ++k) {
        Rat s(0);
        for (long i = 1; i <= k; ++i) {
            Rat c = e[k - i] * p[i];
            if (i % 2 == 0) s -= c; else s += c;
        }
        e[k] = s / Rat(k);
    }
    return e;
}

inline Rat exterior_character_eval(const DynkinType& t, const Weight& hw, long k,
                                   const std::vector<Rat>& Q) {
    const WeightSystem& ws = RepCache::of(t).rep(hw);
    return exterior_character_values(ws, Q, k)[k];
}

struct AdmissibleExponentSet {
    std::vector<Weight> pivotal;   // generating dominant weights
    std::vector<Weight> exponents; // admissible iota vectors, lex order
};

// Committed pivotal sets for the minimal representations.
inline std::vector<Weight> pivotal_set(const DynkinType& t, const Weight& hw) {
    const std::string n = t.name();
    auto is = [&](const char* type, std::initializer_list<int> w) {
        return n == type && hw == Weight(w);
    };
    if (is("G2", {1, 0})) return {{2, 0}};
    if (is("F4", {0, 0, 0, 1})) return {{0, 0, 2, 2}};
    if (is("E6", {1, 0, 0, 0, 0, 0}))
        return {{0, 1, 0, 1, 2, 0}, {1, 2, 0, 0, 1, 0}, {2, 0, 0, 2, 0, 0},
                {1, 1, 0, 1, 1, 0}, {0, 0, 1, 0, 3, 0}, {0, 3, 0, 0, 0, 0},
                {0, 2, 0, 0, 2, 0}, {0, 0, 0, 0, 4, 1}, {0, 0, 0, 0, 5, 0}};
    if (is("E6", {0, 0, 0, 0, 1, 0})) { // conjugate: mirror 1<->5, 2<->4
        auto base = pivotal_set(t, {1, 0, 0, 0, 0, 0});
        for (auto& w : base) {
            std::swap(w[0], w[4]);
            std::swap(w[1], w[3]);
        }
        return base;
    }
    if (is("E7", {0, 0, 0, 0, 0, 1, 0}))
        return {{0, 0, 0, 2, 0, 2, 2}, {0, 0, 0, 1, 1, 1, 3}, {0, 1, 0, 0, 1, 3, 2},
                {0, 1, 0, 1, 0, 4, 1}, {1, 0, 0, 1, 0, 5, 1}, {1, 0, 0, 1, 0, 6, 1},
                {0, 0, 1, 1, 0, 3, 1}, {0, 0, 1, 0, 0, 7, 0}, {0, 0, 0, 0, 2, 0, 4},
                {0, 1, 1, 0, 0, 5, 0}, {1, 1, 0, 0, 0, 7, 0}, {1, 0, 0, 0, 0, 9, 0},
                {0, 0, 0, 3, 0, 1, 1}, {0, 0, 2, 0, 0, 4, 0}, {0, 0, 0, 4, 0, 0, 0},
                {0, 0, 0, 0, 1, 0, 5}, {0, 0, 0, 0, 0, 10, 0}, {0, 0, 0, 0, 0, 0, 6}};
    throw MissingPivotalSet("no committed pivotal set for " + n + " with this weight");
}

// All iota >= 0 with sum_i iota_i omega_i below some pivotal weight in the
// dominance order on root coordinates (no integrality demanded: the relevant
// weights range over several cosets of the root lattice).
inline AdmissibleExponentSet admissible_exponents(const DynkinType& t, const Weight& hw,
                                                  std::vector<Weight> pivotal = {}) {
    if (pivotal.empty()) pivotal = pivotal_set(t, hw);
    const RootSystemData& rs = RepCache::of(t).rs();
    int l = t.rank;
    // Root coordinates of omega_j: rc_k(omega_j) = (C^-1)_{jk}.
    std::vector<std::vector<Rat>> rcw(l, std::vector<Rat>(l));
    for (int j = 0; j < l; ++j)
        for (int k = 0; k < l; ++k) rcw[j][k] = rs.inverse_cartan[j][k];
    std::vector<std::vector<Rat>> rcp;
    for (const Weight& w : pivotal) {
        std::vector<Rat> rc(l, Rat(0));
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k) rc[k] += Rat(w[j]) * rcw[j][k];
        rcp.push_back(std::move(rc));
    }
    AdmissibleExponentSet out;
    out.pivotal = pivotal;
    std::vector<Rat> partial(l, Rat(0));
    Weight iota(l, 0);
    auto dominated = [&]() {
        for (const auto& rc : rcp) {
            bool ok = true;
            for (int k = 0; k < l; ++k)
                if (partial[k] > rc[k]) { ok = false; break; }
            if (ok) return true;
        }
        return false;
    };
    std::function<void(int)> walk = [&](int j) {
        if (!dominated()) return;
        if (j == l) {
            out.exponents.push_back(iota);
            return;
        }
        for (int v = 0;; ++v) {
            iota[j] = v;
            if (v > 0)
                for (int k = 0; k < l; ++k) partial[k] += rcw[j][k];
            if (!dominated()) break;
            walk(j + 1);
        }
        for (int k = 0; k < l; ++k) partial[k] -= Rat(iota[j]) * rcw[j][k];
        iota[j] = 0;
    };
    walk(0);
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

// The full decomposition chi_{wedge^k rho} = p_k(chi_1..chi_l) for all k.
struct CharacterDecomposition {
    DynkinType type;
    Weight hw;
    long dim = 0;
    AdmissibleExponentSet adm;
    std::vector<std::string> chivars;
    std::map<long, PolyQ> pk;
};

namespace detail {

inline std::string weight_tag(const Weight& w) {
    std::string s;
    for (int c : w) s += std::to_string(c);
    return s;
}

inline std::filesystem::path cache_file(const std::string& dir, const DynkinType& t,
                                        const Weight& hw, long k) {
    return std::filesystem::path(dir) /
           (t.name() + "_" + weight_tag(hw) + "_" + std::to_string(k) + ".json");
}

inline CharacterDecomposition compute_decomposition(const DynkinType& t, const Weight& hw,
                                                    uint64_t seed,
                                                    std::vector<Weight> user_pivotal) {
    CharacterDecomposition dec;
    dec.type = t;
    dec.hw = hw;
    dec.adm = admissible_exponents(t, hw, std::move(user_pivotal));
    int l = t.rank;
    for (int i = 1; i <= l; ++i) dec.chivars.push_back("chi" + std::to_string(i));
    RepCache& rc = RepCache::of(t);
    const WeightSystem& rho = rc.rep(hw);
    dec.dim = rho.dimension;
    size_t n = dec.adm.exponents.size();

    std::mt19937 rng(static_cast<uint32_t>(seed));
    std::uniform_int_distribution<int> small(1, 97);
    auto draw_point = [&]() {
        std::vector<Rat> Q(l);
        for (int j = 0; j < l; ++j) Q[j] = rat(small(rng), small(rng));
        return Q;
    };
    auto chis_at = [&](const std::vector<Rat>& Q) {
        std::vector<Rat> chi(l);
        for (int i = 0; i < l; ++i) chi[i] = character_eval(rc.fundamental(i + 1), Q);
        return chi;
    };
    auto monomials_at = [&](const std::vector<Rat>& chi) {
        // Powers of each chi value up to the largest exponent that occurs.
        std::vector<int> mx(l, 0);
        for (const Weight& e : dec.adm.exponents)
            for (int j = 0; j < l; ++j) mx[j] = std::max(mx[j], e[j]);
        std::vector<std::vector<Rat>> pw(l);
        for (int j = 0; j < l; ++j) {
            pw[j].resize(mx[j] + 1);
            pw[j][0] = Rat(1);
            for (int e = 1; e <= mx[j]; ++e) pw[j][e] = pw[j][e - 1] * chi[j];
        }
        std::vector<Rat> row(n);
        for (size_t c = 0; c < n; ++c) {
            Rat v(1);
            for (int j = 0; j < l; ++j)
                if (dec.adm.exponents[c][j] != 0) v *= pw[j][dec.adm.exponents[c][j]];
            row[c] = v;
        }
        return row;
    };

    std::optional<std::vector<std::vector<Rat>>> sols;
    for (int attempt = 0; attempt < 5 && !sols; ++attempt) {
        MatQ A(n, n);
        std::vector<std::vector<Rat>> ext(n); // per-row e_0..e_dim
        for (size_t r = 0; r < n; ++r) {
            auto Q = draw_point();
            auto row = monomials_at(chis_at(Q));
            for (size_t c = 0; c < n; ++c) A(r, c) = std::move(row[c]);
            ext[r] = exterior_character_values(rho, Q, dec.dim);
        }
        std::vector<std::vector<Rat>> Bs(dec.dim / 2 + 1, std::vector<Rat>(n));
        for (long k = 0; k <= dec.dim / 2; ++k)
            for (size_t r = 0; r < n; ++r) Bs[k][r] = ext[r][k];
        sols = rat_linear_solve_multi(A, Bs);
    }
    if (!sols) throw SingularSample();

    for (long k = 0; k <= dec.dim / 2; ++k) {
        PolyQ p;
        p.vars = dec.chivars;
        p.denom = 1;
        for (size_t c = 0; c < n; ++c) {
            const Rat& coef = (*sols)[k][c];
            if (coef == 0) continue;
            if (coef.get_den() != 1)
                throw VerificationFailure("non-integer coefficient in wedge^" +
                                          std::to_string(k) + " decomposition");
            Expv e(dec.adm.exponents[c].begin(), dec.adm.exponents[c].end());
            p.add_term(e, coef);
        }
        dec.pk.emplace(k, std::move(p));
    }

    // The pivotal set only majorizes wedge powers up to dim/2; the upper half
    // follows from wedge^{dim-k} rho = (wedge^k rho)^* (the determinant of rho
    // is the trivial character), i.e. p_{dim-k} is p_k with the variables
    // permuted by the duality involution on the fundamental weights.
    std::vector<int> dualnode(l); // 0-based: i -> i*
    const RootSystemData& rsys = rc.rs();
    for (int i = 0; i < l; ++i) {
        Weight neg(l, 0);
        neg[i] = -1;
        Weight d = dominize(rsys, neg);
        int target = -1;
        for (int j = 0; j < l; ++j)
            if (d[j] != 0) { target = j; break; }
        dualnode[i] = target;
    }
    for (long k = dec.dim / 2 + 1; k <= dec.dim; ++k) {
        const PolyQ& src = dec.pk.at(dec.dim - k);
        PolyQ p;
        p.vars = dec.chivars;
        p.denom = 1;
        for (const auto& [e, c] : src.terms) {
            Expv e2(l, 0);
            for (int i = 0; i < l; ++i) e2[dualnode[i]] = e[i];
            p.add_term(e2, c);
        }
        dec.pk.emplace(k, std::move(p));
    }

    // Independent check at fresh points.
    for (int v = 0; v < 10; ++v) {
        auto Q = draw_point();
        auto chi = chis_at(Q);
        std::map<std::string, Rat> vals;
        for (int j = 0; j < l; ++j) vals[dec.chivars[j]] = chi[j];
        auto e = exterior_character_values(rho, Q, dec.dim);
        for (long k = 0; k <= dec.dim; ++k)
            if (dec.pk.at(k).eval(vals) != e[k])
                throw VerificationFailure("decomposition failed verification at fresh point");
    }
    return dec;
}

} // namespace detail

// Decompositions are deterministic in (type, hw, seed); computed once per
// process and optionally cached on disk (one JSON file per exterior power).
inline const CharacterDecomposition& decompose_all(const DynkinType& t, const Weight& hw,
                                                   uint64_t seed,
                                                   const std::string& cache_dir = "",
                                                   bool regen = false,
                                                   std::vector<Weight> user_pivotal = {}) {
    static std::map<std::string, CharacterDecomposition> memo;
    std::string key = t.name() + ":" + detail::weight_tag(hw) + ":" + std::to_string(seed);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    if (!cache_dir.empty() && !regen) {
        CharacterDecomposition dec;
        dec.type = t;
        dec.hw = hw;
        dec.dim = RepCache::of(t).rep(hw).dimension;
        for (int i = 1; i <= t.rank; ++i) dec.chivars.push_back("chi" + std::to_string(i));
        bool complete = true;
        for (long k = 0; k <= dec.dim && complete; ++k) {
            auto f = detail::cache_file(cache_dir, t, hw, k);
            std::ifstream in(f);
            if (!in) { complete = false; break; }
            nlohmann::json j;
            in >> j;
            dec.pk.emplace(k, poly_from_json(j));
        }
        if (complete) {
            dec.adm = admissible_exponents(t, hw, std::move(user_pivotal));
            return memo.emplace(key, std::move(dec)).first->second;
        }
    }

    CharacterDecomposition dec = detail::compute_decomposition(t, hw, seed, std::move(user_pivotal));
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        for (const auto& [k, p] : dec.pk) {
            std::ofstream out(detail::cache_file(cache_dir, t, hw, k));
            out << poly_to_json(p).dump(2) << "\n";
        }
    }
    return memo.emplace(key, std::move(dec)).first->second;
}

inline const PolyQ& decompose_exterior(const DynkinType& t, const Weight& hw, long k,
                                       uint64_t seed, const std::string& cache_dir = "") {
    const CharacterDecomposition& dec = decompose_all(t, hw, seed, cache_dir);
    if (k < 0 || k > dec.dim)
        throw OutOfRangeK("exterior power out of range 0.." + std::to_string(dec.dim));
    return dec.pk.at(k);
}

inline bool self_dual(const DynkinType& t, const Weight& hw) {
    const RootSystemData& rs = RepCache::of(t).rs();
    Weight neg(hw.size());
    for (size_t i = 0; i < hw.size(); ++i) neg[i] = -hw[i];
    return dominize(rs, neg) == hw;
}

inline bool verify_duality(const DynkinType& t, const Weight& hw, long k, uint64_t seed,
                           const std::string& cache_dir = "") {
    if (!self_dual(t, hw)) throw NotSelfDual(t.name() + ": representation is not self-dual");
    const CharacterDecomposition& dec = decompose_all(t, hw, seed, cache_dir);
    return dec.pk.at(k) == dec.pk.at(dec.dim - k);
}

} // namespace lgm
