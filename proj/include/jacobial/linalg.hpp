#pragma once

#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jacobial/rational.hpp"

namespace jacobial {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline IntMat int_identity(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Fraction-free Bareiss elimination; exact determinant of a square matrix.
inline Int determinant(IntMat a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

struct SmithForm {
    IntMat s;  // diagonal form with d1 | d2 | ..., s = u * a * v
    IntMat u;  // row transform, unimodular
    IntMat v;  // column transform, unimodular
    int rank = 0;
};

// Smith normal form by integer row/column reduction, picking the smallest
// nonzero pivot each round. Matrices here are at most 16x16, so no further
// pivot-growth mitigation is needed.
inline SmithForm smith_normal_form(IntMat a) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    SmithForm f;
    f.u = int_identity(m);
    f.v = int_identity(n);

    auto swap_rows = [&](int i, int j) { std::swap(a[i], a[j]); std::swap(f.u[i], f.u[j]); };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < n; ++r) std::swap(f.v[r][i], f.v[r][j]);
    };
    auto add_row = [&](int dst, int src, const Int& c) {
        for (int j = 0; j < n; ++j) a[dst][j] += c * a[src][j];
        for (int j = 0; j < m; ++j) f.u[dst][j] += c * f.u[src][j];
    };
    auto add_col = [&](int dst, int src, const Int& c) {
        for (int r = 0; r < m; ++r) a[r][dst] += c * a[r][src];
        for (int r = 0; r < n; ++r) f.v[r][dst] += c * f.v[r][src];
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < n; ++j) a[i][j] = -a[i][j];
        for (int j = 0; j < m; ++j) f.u[i][j] = -f.u[i][j];
    };

    // Diagonalize: clear row t and column t around the smallest pivot.
    auto reduce_from = [&](int t0) {
        int t = t0;
        while (t < m && t < n) {
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    if (a[i][j] == 0) continue;
                    Int v = a[i][j] < 0 ? Int(-a[i][j]) : a[i][j];
                    if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
                }
            if (pi < 0) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            if (a[t][t] < 0) negate_row(t);

            bool clean = false;
            while (!clean) {
                clean = true;
                for (int i = t + 1; i < m; ++i) {
                    if (a[i][t] == 0) continue;
                    add_row(i, t, -Int(a[i][t] / a[t][t]));
                    if (a[i][t] != 0) {
                        swap_rows(t, i);
                        if (a[t][t] < 0) negate_row(t);
                        clean = false;
                    }
                }
                for (int j = t + 1; j < n; ++j) {
                    if (a[t][j] == 0) continue;
                    add_col(j, t, -Int(a[t][j] / a[t][t]));
                    if (a[t][j] != 0) {
                        swap_cols(t, j);
                        clean = false;
                    }
                }
            }
            ++t;
        }
        return t;
    };

    f.rank = reduce_from(0);

    // Enforce the divisibility chain d1 | d2 | ... by folding a bad pair back
    // into the reduction; each pass replaces (di, dj) by (gcd, lcm).
    bool chain_ok = false;
    while (!chain_ok) {
        chain_ok = true;
        for (int i = 0; i + 1 < f.rank && chain_ok; ++i)
            for (int j = i + 1; j < f.rank && chain_ok; ++j)
                if (a[j][j] % a[i][i] != 0) {
                    add_col(i, j, 1);
                    reduce_from(i);
                    chain_ok = false;
                }
    }
    f.s = std::move(a);
    return f;
}

// Solves a*x = b over the rationals; a must be square and invertible.
inline RatVec solve_rational(RatMat a, RatVec b) {
    const int n = static_cast<int>(a.size());
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) { piv = i; break; }
        if (piv < 0) throw std::logic_error("singular system");
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    RatVec x(n, Rat(0));
    for (int k = n - 1; k >= 0; --k) {
        Rat s = b[k];
        for (int j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return x;
}

inline int rank_rational(RatMat a) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int i = 0; i < m; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Basis of the rational null space {x : a*x = 0}, one vector per free column.
inline std::vector<RatVec> kernel_rational(RatMat a) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        Rat p = a[rank][col];
        for (int j = 0; j < n; ++j) a[rank][j] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = 0; j < n; ++j) a[i][j] -= f * a[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(n, Rat(0));
        v[c] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Scales a rational vector to a primitive integer vector (gcd 1, first
// nonzero entry positive).
inline IntVec primitive_integer(const RatVec& v) {
    Int l = 1;
    for (const Rat& r : v) l = lcm_int(l, den(r));
    IntVec w;
    w.reserve(v.size());
    for (const Rat& r : v) w.push_back(num(r) * (l / den(r)));
    Int g = 0;
    for (const Int& x : w) g = gcd_int(g, x);
    if (g > 1)
        for (Int& x : w) x /= g;
    for (const Int& x : w) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : w) y = -y;
        break;
    }
    return w;
}

// Does a*x = b have an integer solution x?
inline bool integer_solvable(const IntMat& a, const IntVec& b) {
    const int m = static_cast<int>(a.size());
    SmithForm f = smith_normal_form(a);
    IntVec c(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) c[i] += f.u[i][j] * b[j];
    for (int i = 0; i < m; ++i) {
        if (i < f.rank) {
            if (c[i] % f.s[i][i] != 0) return false;
        } else {
            if (c[i] != 0) return false;
        }
    }
    return true;
}

} // namespace jacobial
