#pragma once

#include <vector>

#include "jacobial/curves.hpp"
#include "jacobial/linalg.hpp"

namespace jacobial {

using Multidegree = std::vector<long long>;

inline long long total(const Multidegree& d) {
    long long t = 0;
    for (long long x : d) t += x;
    return t;
}

inline long long sum_over(const Multidegree& d, std::uint32_t mask) {
    long long t = 0;
    for (size_t i = 0; i < d.size(); ++i)
        if ((mask >> i) & 1u) t += d[i];
    return t;
}

// Boundary map d: C_1(Gamma) -> C_0(Gamma) for the fixed orientation "lower
// vertex index -> higher". Column e is +1 at the target, -1 at the source;
// loop columns are zero. The orientation is part of the public contract:
// psi offsets depend on it, homology and the degree class group do not.
struct BoundaryMap {
    IntMat matrix;                              // |V| x |E|
    std::vector<std::pair<int, int>> oriented;  // (source, target) per edge
};

inline BoundaryMap boundary_map(const DualGraph& g) {
    BoundaryMap bm;
    bm.matrix.assign(g.vertex_count(), IntVec(g.edge_count(), 0));
    bm.oriented.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        int s = std::min(a, b), t = std::max(a, b);
        bm.oriented.emplace_back(s, t);
        if (s != t) {
            bm.matrix[s][e] -= 1;
            bm.matrix[t][e] += 1;
        }
    }
    return bm;
}

// Fundamental cycles of the BFS spanning tree rooted at vertex 0 (edges
// scanned in spec order). Basis vector i has coefficient +1 on its own
// non-tree edge; loops are their own cycles.
struct CycleBasis {
    std::vector<IntVec> basis;  // g vectors in edge coordinates
    std::vector<int> tree;      // edge indices of the spanning tree
    std::vector<int> nontree;   // edge indices, one per basis vector
};

inline CycleBasis cycle_basis(const DualGraph& g) {
    BoundaryMap bm = boundary_map(g);
    CycleBasis cb;
    std::vector<int> parent_edge(g.vertex_count(), -1);
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<bool> in_tree(g.edge_count(), false);

    std::vector<int> queue{0};
    seen[0] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edge(e);
            int other = (a == v) ? b : (b == v) ? a : -1;
            if (other < 0 || seen[other]) continue;
            seen[other] = true;
            in_tree[e] = true;
            parent_edge[other] = e;
            queue.push_back(other);
        }
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (in_tree[e]) cb.tree.push_back(e);

    // signed tree path from vertex `from` to vertex `to`
    auto tree_path = [&](int from, int to, IntVec& coeff) {
        auto depth = [&](int v) {
            int d = 0;
            while (parent_edge[v] != -1) {
                auto [s, t] = bm.oriented[parent_edge[v]];
                v = (v == t) ? s : t;
                ++d;
            }
            return d;
        };
        int u = from, w = to;
        int du = depth(u), dw = depth(w);
        // walking from u toward the root adds +1 when traversing an edge
        // against its orientation toward the root... record signs directly:
        // traversing edge e from x to y contributes +1 if (s,t) == (x,y),
        // -1 if (s,t) == (y,x).
        std::vector<std::pair<int, int>> up_u, up_w;  // (edge, sign)
        while (du > dw) {
            int e = parent_edge[u];
            auto [s, t] = bm.oriented[e];
            int p = (u == t) ? s : t;
            up_u.emplace_back(e, (u == s) ? +1 : -1);  // traverse u -> p
            u = p;
            --du;
        }
        while (dw > du) {
            int e = parent_edge[w];
            auto [s, t] = bm.oriented[e];
            int p = (w == t) ? s : t;
            up_w.emplace_back(e, (w == s) ? +1 : -1);
            w = p;
            --dw;
        }
        while (u != w) {
            int eu = parent_edge[u];
            auto [su, tu] = bm.oriented[eu];
            int pu = (u == tu) ? su : tu;
            up_u.emplace_back(eu, (u == su) ? +1 : -1);
            u = pu;
            int ew = parent_edge[w];
            auto [sw, tw] = bm.oriented[ew];
            int pw = (w == tw) ? sw : tw;
            up_w.emplace_back(ew, (w == sw) ? +1 : -1);
            w = pw;
        }
        // path from -> meet contributes as recorded; meet -> to is up_w reversed
        for (auto [e, s] : up_u) coeff[e] += s;
        for (auto [e, s] : up_w) coeff[e] -= s;
    };

    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_tree[e]) continue;
        IntVec c(g.edge_count(), 0);
        c[e] = 1;
        if (!g.is_loop(e)) {
            auto [s, t] = bm.oriented[e];
            tree_path(t, s, c);  // close the cycle: e runs s -> t
        }
        cb.basis.push_back(std::move(c));
        cb.nontree.push_back(e);
    }
    return cb;
}

// Laplacian with loops ignored: L = boundary * boundary^T.
inline IntMat laplacian(const DualGraph& g) {
    BoundaryMap bm = boundary_map(g);
    const int n = g.vertex_count();
    IntMat L(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int e = 0; e < g.edge_count(); ++e)
                L[i][j] += bm.matrix[i][e] * bm.matrix[j][e];
    return L;
}

// Number of spanning trees, by the matrix-tree theorem: any principal minor
// of the loopless Laplacian.
inline Int complexity(const DualGraph& g) {
    const int n = g.vertex_count();
    if (n == 1) return 1;
    IntMat L = laplacian(g);
    IntMat minor(n - 1, IntVec(n - 1, 0));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = L[i][j];
    return determinant(minor);
}

// The lattice generators C_i: off-diagonal |C_i . C_j|, diagonal minus the
// row sum. Defined for both curve models.
inline IntMat class_lattice_generators(const CurveModel& X) {
    const int n = X.component_count();
    IntMat gen(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) {
        Int diag = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            int m = X.pairwise_length(i, j);
            gen[i][j] = m;
            diag += m;
        }
        gen[i][i] = -diag;
    }
    return gen;
}

inline Int complexity(const CurveModel& X) {
    if (X.is_graph()) return complexity(X.graph());
    const int n = X.component_count();
    if (n == 1) return 1;
    IntMat gen = class_lattice_generators(X);
    IntMat minor(n - 1, IntVec(n - 1, 0));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = -gen[i][j];
    return determinant(minor);
}

// Degree class group: degree-0 multidegrees modulo the lattice spanned by
// the C_i. Stored with the reduction transform, so multidegrees can be put
// into a canonical coset form.
class DegreeClassGroup {
public:
    explicit DegreeClassGroup(const CurveModel& X) : ncomp_(X.component_count()) {
        // Columns: the generators C_i expressed in the basis u_k = e_k - e_n
        // of the degree-0 sublattice (coordinates = first n-1 entries).
        const int n = ncomp_;
        IntMat gen = class_lattice_generators(X);
        IntMat a(std::max(n - 1, 0), IntVec(n, 0));
        for (int k = 0; k + 1 < n; ++k)
            for (int i = 0; i < n; ++i) a[k][i] = gen[i][k];
        snf_ = smith_normal_form(a);
        order_ = 1;
        for (int i = 0; i < snf_.rank; ++i) {
            Int d = snf_.s[i][i];
            order_ *= d;
            if (d != 1) invariant_factors_.push_back(d);
        }
        if (n == 1) order_ = 1;
        Int c = complexity(X);
        if (order_ != c)
            throw std::logic_error("degree class group order != complexity");
    }

    const std::vector<Int>& invariant_factors() const { return invariant_factors_; }
    const Int& order() const { return order_; }

    // Canonical coset of a degree-0 multidegree: U*d mod diag(S).
    std::vector<Int> canonical_form(const Multidegree& d) const {
        const int n = ncomp_;
        std::vector<Int> c(std::max(n - 1, 0), 0);
        for (int i = 0; i + 1 < n; ++i) {
            for (int j = 0; j + 1 < n; ++j) c[i] += snf_.u[i][j] * Int(d[j]);
            Int m = snf_.s[i][i];
            if (m != 0) {
                c[i] %= m;
                if (c[i] < 0) c[i] += m;
            }
        }
        return c;
    }

private:
    int ncomp_;
    SmithForm snf_;
    Int order_ = 1;
    std::vector<Int> invariant_factors_;
};

inline DegreeClassGroup degree_class_group(const CurveModel& X) {
    return DegreeClassGroup(X);
}

// d == d' in the degree class group, i.e. d - d' lies in the C_i lattice.
inline bool same_degree_class(const CurveModel& X, const Multidegree& d,
                              const Multidegree& dp) {
    if (total(d) != total(dp)) return false;
    DegreeClassGroup grp(X);
    Multidegree diff(d.size());
    for (size_t i = 0; i < d.size(); ++i) diff[i] = d[i] - dp[i];
    auto c = grp.canonical_form(diff);
    for (const Int& x : c)
        if (x != 0) return false;
    return true;
}

} // namespace jacobial
