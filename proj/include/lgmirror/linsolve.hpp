// Exact linear solvers: fraction-free Bareiss elimination for small systems,
// Dixon p-adic lifting with rational reconstruction for large ones.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace lgm {

inline Int to_int(const Rat& q) {
    if (q.get_den() != 1) throw std::invalid_argument("to_int: not an integer");
    return q.get_num();
}

struct MatQ {
    size_t rows = 0, cols = 0;
    std::vector<Rat> a;
    MatQ() = default;
    MatQ(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
    Rat& operator()(size_t i, size_t j) { return a[i * cols + j]; }
    const Rat& operator()(size_t i, size_t j) const { return a[i * cols + j]; }
};

// ---------- Bareiss ----------

// Solves A x = b for square nonsingular A. Returns nullopt when singular.
inline std::optional<std::vector<Rat>> bareiss_solve(const MatQ& A, const std::vector<Rat>& b) {
    size_t n = A.rows;
    if (A.cols != n || b.size() != n) throw std::invalid_argument("bareiss_solve: shape mismatch");
    // Clear denominators row by row, then run integer fraction-free elimination
    // on the augmented matrix.
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        Int l(1);
        for (size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A(i, j).get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].get_den().get_mpz_t());
        for (size_t j = 0; j < n; ++j) m[i][j] = to_int(A(i, j) * Rat(l));
        m[i][n] = to_int(b[i] * Rat(l));
    }
    Int prev(1);
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[k]);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    // Back substitution over the rationals.
    std::vector<Rat> x(n);
    for (size_t k = n; k-- > 0;) {
        Rat s(m[k][n]);
        for (size_t j = k + 1; j < n; ++j) s -= Rat(m[k][j]) * x[j];
        x[k] = s / Rat(m[k][k]);
    }
    return x;
}

// ---------- Dixon lifting ----------

namespace detail {

using u64 = uint64_t;
using u128 = unsigned __int128;

constexpr u64 DIXON_P = 2305843009213693951ull; // Mersenne prime 2^61 - 1

inline u64 addm(u64 a, u64 b) { u64 s = a + b; return (s >= DIXON_P || s < a) ? s - DIXON_P : s; }
inline u64 subm(u64 a, u64 b) { return a >= b ? a - b : a + DIXON_P - b; }
inline u64 mulm(u64 a, u64 b) { return static_cast<u64>((u128)a * b % DIXON_P); }
inline u64 powm(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulm(r, a);
        a = mulm(a, a);
        e >>= 1;
    }
    return r;
}
inline u64 invm(u64 a) { return powm(a % DIXON_P, DIXON_P - 2); }

inline u64 mod_of(const Int& z) {
    u64 r = mpz_fdiv_ui(z.get_mpz_t(), DIXON_P); // nonnegative remainder
    return r;
}

} // namespace detail

// Rational reconstruction: given x mod m, find n/d with |n|, d <= sqrt(m/2).
inline bool rat_reconstruct(const Int& x, const Int& m, Rat& out) {
    Int a = m, b = x % m;
    if (b < 0) b += m;
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int x0 = a, x1 = b, v0(0), v1(1);
    while (x1 > bound) {
        if (x1 == 0) return false;
        Int q = x0 / x1;
        Int x2 = x0 - q * x1, v2 = v0 - q * v1;
        x0 = x1; x1 = x2; v0 = v1; v1 = v2;
    }
    if (v1 == 0) return false;
    Int n = x1, d = v1;
    if (d < 0) { d = -d; n = -n; }
    if (d > bound) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) return false;
    out = Rat(n) / Rat(d);
    return true;
}

struct MatZ {
    size_t rows = 0, cols = 0;
    std::vector<Int> a;
    MatZ() = default;
    MatZ(size_t r, size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
    Int& operator()(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& operator()(size_t i, size_t j) const { return a[i * cols + j]; }
};

// Inverse of A mod DIXON_P by Gauss-Jordan; nullopt if singular mod p.
inline std::optional<std::vector<std::vector<detail::u64>>> dixon_invert_modp(const MatZ& A) {
    using namespace detail;
    size_t n = A.rows;
    std::vector<std::vector<u64>> m(n, std::vector<u64>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = mod_of(A(i, j));
        m[i][n + i] = 1;
    }
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[k]);
        u64 d = invm(m[k][k]);
        for (size_t j = 0; j < 2 * n; ++j) m[k][j] = mulm(m[k][j], d);
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            u64 f = m[i][k];
            for (size_t j = 0; j < 2 * n; ++j) m[i][j] = subm(m[i][j], mulm(f, m[k][j]));
        }
    }
    std::vector<std::vector<u64>> inv(n, std::vector<u64>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

// Solves A x = b exactly via p-adic lifting with a precomputed mod-p inverse.
inline std::vector<Rat> dixon_solve_with_inverse(const MatZ& A,
                                                 const std::vector<std::vector<detail::u64>>& inv,
                                                 const std::vector<Int>& b,
                                                 size_t check_every = 8) {
    using namespace detail;
    size_t n = A.rows;
    if (A.cols != n || b.size() != n) throw std::invalid_argument("dixon_solve: shape mismatch");
    Int p;
    mpz_set_ui(p.get_mpz_t(), detail::DIXON_P);
    std::vector<Int> r = b;           // current residual (divided by p^k)
    std::vector<Int> x(n, Int(0));    // accumulated solution mod p^k
    Int pk(1);
    std::vector<u64> rm(n), y(n);
    std::vector<Rat> sol(n);
    for (size_t iter = 0;; ++iter) {
        for (size_t i = 0; i < n; ++i) rm[i] = mod_of(r[i]);
        for (size_t i = 0; i < n; ++i) {
            const std::vector<u64>& row = inv[i];
            u128 acc = 0;
            for (size_t j = 0; j < n; ++j) {
                acc += (u128)row[j] * rm[j]; // each product < 2^122; reduce before 2^128
                if ((j & 31) == 31) acc %= DIXON_P;
            }
            y[i] = static_cast<u64>(acc % DIXON_P);
        }
        // x += y * p^k ; r = (r - A y) / p
        std::vector<Int> yz(n);
        for (size_t i = 0; i < n; ++i) mpz_set_ui(yz[i].get_mpz_t(), y[i]);
        for (size_t i = 0; i < n; ++i) x[i] += pk * yz[i];
        for (size_t i = 0; i < n; ++i) {
            Int s = r[i];
            for (size_t j = 0; j < n; ++j)
                if (y[j] != 0) s -= A(i, j) * yz[j];
            mpz_divexact(r[i].get_mpz_t(), s.get_mpz_t(), p.get_mpz_t());
        }
        pk *= p;
        bool allzero = true;
        for (size_t i = 0; i < n; ++i) allzero &= (r[i] == 0);
        if (allzero || (iter + 1) % check_every == 0) {
            bool ok = true;
            for (size_t i = 0; i < n; ++i)
                if (!rat_reconstruct(x[i], pk, sol[i])) { ok = false; break; }
            if (ok) {
                // Exact verification A sol = b.
                bool verified = true;
                for (size_t i = 0; i < n && verified; ++i) {
                    Rat s(0);
                    for (size_t j = 0; j < n; ++j)
                        if (sol[j] != 0) s += Rat(A(i, j)) * sol[j];
                    verified = (s == Rat(b[i]));
                }
                if (verified) return sol;
            }
            if (allzero) {
                // Residual vanished: x is an exact integer solution.
                for (size_t i = 0; i < n; ++i) {
                    Int xi = x[i] % pk;
                    if (xi > pk / 2) xi -= pk;
                    sol[i] = Rat(xi);
                }
                bool verified = true;
                for (size_t i = 0; i < n && verified; ++i) {
                    Rat s(0);
                    for (size_t j = 0; j < n; ++j)
                        if (sol[j] != 0) s += Rat(A(i, j)) * sol[j];
                    verified = (s == Rat(b[i]));
                }
                if (verified) return sol;
            }
        }
        if (iter > 200000) throw std::runtime_error("dixon_solve: lifting did not converge");
    }
}

// Returns nullopt if A is singular mod p (callers should treat that as
// "resample"; a matrix singular over Q is always singular mod p).
inline std::optional<std::vector<Rat>> dixon_solve(const MatZ& A, const std::vector<Int>& b,
                                                   size_t check_every = 8) {
    auto inv = dixon_invert_modp(A);
    if (!inv) return std::nullopt;
    return dixon_solve_with_inverse(A, *inv, b, check_every);
}

// Front door used by the higher layers: Bareiss for n <= 200, Dixon above.
inline std::optional<std::vector<Rat>> rat_linear_solve(const MatQ& A, const std::vector<Rat>& b) {
    size_t n = A.rows;
    if (n <= 200) return bareiss_solve(A, b);
    // Clear denominators per row, hand to Dixon.
    MatZ Az(n, n);
    std::vector<Int> bz(n);
    for (size_t i = 0; i < n; ++i) {
        Int l(1);
        for (size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A(i, j).get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].get_den().get_mpz_t());
        for (size_t j = 0; j < n; ++j) Az(i, j) = to_int(A(i, j) * Rat(l));
        bz[i] = to_int(b[i] * Rat(l));
    }
    return dixon_solve(Az, bz);
}

// Many right-hand sides against one matrix, sharing the elimination work
// (a single mod-p inverse on the Dixon path).
inline std::optional<std::vector<std::vector<Rat>>> rat_linear_solve_multi(
    const MatQ& A, const std::vector<std::vector<Rat>>& Bs) {
    size_t n = A.rows;
    std::vector<std::vector<Rat>> out;
    // With many right-hand sides the shared mod-p inverse amortizes much
    // sooner than in the single-shot case.
    if (n <= 60) {
        for (const auto& b : Bs) {
            auto x = bareiss_solve(A, b);
            if (!x) return std::nullopt;
            out.push_back(std::move(*x));
        }
        return out;
    }
    MatZ Az(n, n);
    std::vector<Int> row_l(n);
    for (size_t i = 0; i < n; ++i) {
        Int l(1);
        for (size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A(i, j).get_den().get_mpz_t());
        for (const auto& b : Bs)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].get_den().get_mpz_t());
        for (size_t j = 0; j < n; ++j) Az(i, j) = to_int(A(i, j) * Rat(l));
        row_l[i] = l;
    }
    auto inv = dixon_invert_modp(Az);
    if (!inv) return std::nullopt;
    for (const auto& b : Bs) {
        std::vector<Int> bz(n);
        for (size_t i = 0; i < n; ++i) bz[i] = to_int(b[i] * Rat(row_l[i]));
        out.push_back(dixon_solve_with_inverse(Az, *inv, bz));
    }
    return out;
}

} // namespace lgm
