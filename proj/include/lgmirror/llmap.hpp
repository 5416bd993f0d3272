#pragma once
// Lyashko-Looijenga degrees via the quasi-homogeneous Bezout theorem, and
// Hurwitz-space dimensions for the ramification data attached to each Dynkin
// type.  The degree formula is
//
//   deg(LL) = (l+1)! (omega_kbar, omega_kbar)^l / prod_j (omega_j, omega_kbar)
//
// where kbar is the marked node and (.,.) the symmetrized inner product on the
// weight lattice; the overall normalization of the inner product cancels.

#include <stdexcept>
#include <string>
#include <vector>

#include "dynkin.hpp"
#include "rational.hpp"
#include "spectral.hpp"

namespace lgm {

struct NonIntegralDegree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// deg(LL) for the minimal-weight stratum of the given type.  Exact integer;
// throws NonIntegralDegree if the product formula fails to clear denominators
// (which would indicate corrupt root-system data).
inline Int ll_degree(const DynkinType& t) {
    RootSystemData rs = root_system(t);
    int l = t.rank;
    Weight ek(l, 0);
    ek[rs.marked_node - 1] = 1;
    Rat okk = weight_inner(rs, ek, ek);
    Rat acc(1);
    for (long j = 2; j <= l + 1; ++j) acc *= j;  // (l+1)!
    for (int j = 0; j < l; ++j) {
        Weight ej(l, 0);
        ej[j] = 1;
        acc *= okk / weight_inner(rs, ej, ek);
    }
    acc.canonicalize();
    if (acc.get_den() != 1)
        throw NonIntegralDegree("ll_degree: non-integral value " + rat_str(acc) + " for " +
                                t.name());
    return acc.get_num();
}

// Dimension of the Hurwitz stratum H_{g;n} with ramification profile n over
// infinity: 2g + 2m + sum(n_i) with m = (number of parts) - 1.
inline long hurwitz_dimension(long g, const std::vector<long>& profile) {
    if (g < 0) throw InvalidParameters("hurwitz_dimension: negative genus");
    if (profile.empty()) throw InvalidParameters("hurwitz_dimension: empty profile");
    long s = 0;
    for (long n : profile) {
        if (n < 0) throw InvalidParameters("hurwitz_dimension: negative profile entry");
        s += n;
    }
    return 2 * g + 2 * (static_cast<long>(profile.size()) - 1) + s;
}

struct LLReport {
    DynkinType type;
    Int degree;                  // deg(LL)
    long genus = 0;              // genus of the spectral curve (bound for E7)
    bool genus_exact = true;
    std::vector<long> profile;   // ramification profile over infinity (n_i)
    long hurwitz_dim = 0;        // 2g + 2m + sum n_i
};

// Full topological report for one type.  E8 is degree-only (the curve pipeline
// is out of scope at that rank); its genus/profile fields are taken from the
// published table rather than computed.
inline LLReport ll_report(const DynkinType& t, const std::string& cache_dir = "") {
    LLReport out;
    out.type = t;
    out.degree = ll_degree(t);
    if (t.series == 'E' && t.rank == 8) {
        out.genus = 128;
        out.genus_exact = false;
        out.profile = {29, 29, 14, 14, 14, 14, 14, 14, 9, 9, 9, 9,
                       5,  5,  4,  4,  4,  4,  4,  4,  2, 2, 0, 0};
    } else {
        SpectralFamily fam =
            spectral_family(t, minimal_weight(t), marked_node_of(t), cache_dir);
        NewtonPolygonData np = newton_polygon_genus(fam);
        out.genus = np.genus;
        out.genus_exact = np.genus_exact;
        out.profile = np.profile_at_infinity;
    }
    out.hurwitz_dim = hurwitz_dimension(out.genus, out.profile);
    return out;
}

// Closed forms of the published degree table for the classical series, for
// cross-checking against the product formula.  The published A_l entry
// disagrees with the product formula (and with Arnold's count for Laurent
// polynomials with poles of orders (kbar, l+1-kbar)); arnold_a_degree below is
// the closed form the product formula actually satisfies.
inline Int table_b_degree(int l) {
    Rat v = Rat(2 * (l + 1) * l) * rat_pow(Rat(l - 1), l - 1);
    return v.get_num();
}
inline Int table_c_degree(int l) {
    Rat v = Rat(l + 1) * rat_pow(Rat(l), l);
    return v.get_num();
}
inline Int table_d_degree(int l) {
    Rat v = Rat(4 * (l + 1) * l * (l - 1)) * rat_pow(Rat(l - 2), l - 2);
    return v.get_num();
}
// (l+1)! a^a b^b / (a! b!) with a = kbar, b = l+1-kbar.
inline Int arnold_a_degree(int l, int kbar) {
    long a = kbar, b = l + 1 - kbar;
    Rat v(1);
    for (long j = 2; j <= l + 1; ++j) v *= j;
    v *= rat_pow(Rat(a), a) * rat_pow(Rat(b), b);
    for (long j = 2; j <= a; ++j) v /= j;
    for (long j = 2; j <= b; ++j) v /= j;
    v.canonicalize();
    return v.get_num();
}
// The A_l closed form exactly as printed in the published table:
// (l-kbar)! (l+1)^l / ((l-kbar+1)^kbar kbar^(l-kbar) prod_{j=kbar+1}^l (l-j+1)).
// Returned as a rational because it is not even integral in general.
inline Rat printed_table_a_degree(int l, int kbar) {
    Rat num(1);
    for (long j = 2; j <= l - kbar; ++j) num *= j;
    num *= rat_pow(Rat(l + 1), l);
    Rat den = rat_pow(Rat(l - kbar + 1), kbar) * rat_pow(Rat(kbar), l - kbar);
    for (long j = kbar + 1; j <= l; ++j) den *= Rat(l - j + 1);
    Rat v = num / den;
    v.canonicalize();
    return v;
}

}  // namespace lgm
