// The cyclotomic field Q(z) with z a primitive 12th root of unity, z^4 = z^2 - 1.
// Covers every branch-point location the curves in scope need: 0, infinity,
// +-1, +-i, and the primitive 3rd/6th roots of unity.
#pragma once

#include <array>
#include <stdexcept>

#include "rational.hpp"

namespace lgm {

struct Cyclo {
    std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)}; // c0 + c1 z + c2 z^2 + c3 z^3

    Cyclo() = default;
    Cyclo(const Rat& r) { c[0] = r; }
    Cyclo(long n) { c[0] = Rat(n); }

    static Cyclo zeta12_pow(long k) {
        k %= 12; if (k < 0) k += 12;
        // z^6 = -1, and z^4 = z^2 - 1, z^5 = z^3 - z.
        Cyclo out;
        bool neg = k >= 6;
        k %= 6;
        Rat s = neg ? Rat(-1) : Rat(1);
        switch (k) {
            case 0: out.c[0] = s; break;
            case 1: out.c[1] = s; break;
            case 2: out.c[2] = s; break;
            case 3: out.c[3] = s; break;
            case 4: out.c[2] = s; out.c[0] = -s; break;
            case 5: out.c[3] = s; out.c[1] = -s; break;
        }
        return out;
    }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
    bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }
    const Rat& rational_part() const { return c[0]; }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        Cyclo r;
        for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        Cyclo r;
        for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    Cyclo operator-() const {
        Cyclo r;
        for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
        return r;
    }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        // Raw product has degree <= 6; reduce with z^4 = z^2 - 1 (hence
        // z^5 = z^3 - z, z^6 = -1).
        std::array<Rat, 7> raw;
        for (auto& x : raw) x = 0;
        for (int i = 0; i < 4; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; j < 4; ++j) {
                if (b.c[j] == 0) continue;
                raw[i + j] += a.c[i] * b.c[j];
            }
        }
        Cyclo r;
        r.c[0] = raw[0] - raw[4] - raw[6];
        r.c[1] = raw[1] - raw[5];
        r.c[2] = raw[2] + raw[4];
        r.c[3] = raw[3] + raw[5];
        return r;
    }
    friend Cyclo operator*(const Cyclo& a, const Rat& s) {
        Cyclo r;
        for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] * s;
        return r;
    }
    friend Cyclo operator*(const Rat& s, const Cyclo& a) { return a * s; }
    Cyclo& operator+=(const Cyclo& b) { *this = *this + b; return *this; }
    Cyclo& operator-=(const Cyclo& b) { *this = *this - b; return *this; }
    Cyclo& operator*=(const Cyclo& b) { *this = *this * b; return *this; }
    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c == b.c; }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo inverse() const {
        // Solve (this)*(x) = 1 as a 4x4 rational linear system in the power basis.
        if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
        // Columns: this * z^j expressed in the basis.
        std::array<std::array<Rat, 5>, 4> m; // augmented
        for (int j = 0; j < 4; ++j) {
            Cyclo col = (*this) * zeta12_pow(j);
            for (int i = 0; i < 4; ++i) m[i][j] = col.c[i];
        }
        for (int i = 0; i < 4; ++i) m[i][4] = (i == 0) ? Rat(1) : Rat(0);
        // Gaussian elimination.
        for (int col = 0, row = 0; col < 4 && row < 4; ++col) {
            int p = -1;
            for (int i = row; i < 4; ++i)
                if (m[i][col] != 0) { p = i; break; }
            if (p < 0) continue;
            std::swap(m[p], m[row]);
            Rat inv = Rat(1) / m[row][col];
            for (int jj = col; jj <= 4; ++jj) m[row][jj] *= inv;
            for (int i = 0; i < 4; ++i) {
                if (i == row || m[i][col] == 0) continue;
                Rat f = m[i][col];
                for (int jj = col; jj <= 4; ++jj) m[i][jj] -= f * m[row][jj];
            }
            ++row;
        }
        Cyclo x;
        for (int i = 0; i < 4; ++i) x.c[i] = m[i][4];
        if (((*this) * x) != Cyclo(Rat(1))) throw std::domain_error("cyclotomic inverse failed");
        return x;
    }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
};

inline Cyclo cyclo_i() { return Cyclo::zeta12_pow(3); }
inline Cyclo cyclo_zeta3() { return Cyclo::zeta12_pow(4); }
inline Cyclo cyclo_zeta6() { return Cyclo::zeta12_pow(2); }

} // namespace lgm
