#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jacobial/errors.hpp"

namespace jacobial {

// Hard cap on the number of components; subcurve scans are 2^gamma.
inline constexpr int kMaxComponents = 16;

// A subcurve is a nonempty set of component indices, stored as a bitmask.
// Canonical form is the sorted index list, so equality is structural.
class Subcurve {
public:
    Subcurve(std::uint32_t mask, int ncomp) : mask_(mask), ncomp_(ncomp) {
        if (mask == 0) throw Error(ErrorCode::EmptySubcurve, "empty subcurve");
    }

    static Subcurve of(std::initializer_list<int> members, int ncomp) {
        std::uint32_t m = 0;
        for (int i : members) m |= (1u << i);
        return Subcurve(m, ncomp);
    }

    std::uint32_t mask() const { return mask_; }
    int component_count() const { return ncomp_; }
    bool contains(int i) const { return (mask_ >> i) & 1u; }
    bool proper() const { return mask_ != full_mask(); }
    std::uint32_t full_mask() const { return (ncomp_ == 32) ? ~0u : ((1u << ncomp_) - 1u); }
    Subcurve complement() const { return Subcurve(full_mask() & ~mask_, ncomp_); }
    int size() const {
        int n = 0;
        for (int i = 0; i < ncomp_; ++i) n += contains(i);
        return n;
    }

    std::vector<int> members() const {
        std::vector<int> m;
        for (int i = 0; i < ncomp_; ++i)
            if (contains(i)) m.push_back(i);
        return m;
    }

    friend bool operator==(const Subcurve& a, const Subcurve& b) {
        return a.mask_ == b.mask_ && a.ncomp_ == b.ncomp_;
    }
    friend bool operator<(const Subcurve& a, const Subcurve& b) {
        // lexicographic on sorted member lists
        return a.members() < b.members();
    }

private:
    std::uint32_t mask_;
    int ncomp_;
};

struct Component {
    std::string name;
    int genus = 0;
};

// Dual graph of a nodal curve: a vertex per irreducible component, an edge
// per node. Parallel edges and loops are allowed. The edge order is the
// construction order and is part of the public contract: it indexes
// C_1(Gamma) and the offsets of the toric arrangement.
class DualGraph {
public:
    DualGraph(std::vector<Component> vertices,
              std::vector<std::pair<int, int>> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        const int n = static_cast<int>(vertices_.size());
        if (n == 0)
            throw Error(ErrorCode::MalformedSpec, "graph needs at least one vertex");
        if (n > kMaxComponents)
            throw Error(ErrorCode::TooManyComponents,
                        "more than " + std::to_string(kMaxComponents) + " components");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (vertices_[i].name == vertices_[j].name)
                    throw Error(ErrorCode::DuplicateName,
                                "duplicate vertex name '" + vertices_[i].name + "'");
        for (auto& [a, b] : edges_) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw Error(ErrorCode::MalformedSpec, "edge endpoint out of range");
            if (vertices_[a].genus < 0 || vertices_[b].genus < 0)
                throw Error(ErrorCode::MalformedSpec, "negative genus");
        }
        if (!connected(full_mask()))
            throw Error(ErrorCode::DisconnectedGraph, "dual graph is not connected");
    }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Component>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const Component& vertex(int i) const { return vertices_[i]; }
    std::pair<int, int> edge(int e) const { return edges_[e]; }
    bool is_loop(int e) const { return edges_[e].first == edges_[e].second; }

    int vertex_index(const std::string& name) const {
        for (int i = 0; i < vertex_count(); ++i)
            if (vertices_[i].name == name) return i;
        throw Error(ErrorCode::UnknownName, "no vertex named '" + name + "'");
    }

    int loops_at(int v) const {
        int n = 0;
        for (auto& [a, b] : edges_)
            if (a == v && b == v) ++n;
        return n;
    }

    // Number of non-loop edges between v and w (v != w).
    int multiplicity(int v, int w) const {
        int n = 0;
        for (auto& [a, b] : edges_)
            if ((a == v && b == w) || (a == w && b == v)) n += (v != w);
        return n;
    }

    std::uint32_t full_mask() const {
        return (vertex_count() == 32) ? ~0u : ((1u << vertex_count()) - 1u);
    }

    // Connectivity of the subgraph induced on `mask`, ignoring edges outside.
    bool connected(std::uint32_t mask) const { return connected_without(mask, {}); }

    // Same, with the listed edge indices removed.
    bool connected_without(std::uint32_t mask, const std::vector<int>& removed) const {
        if (mask == 0) return false;
        int start = -1;
        for (int i = 0; i < vertex_count(); ++i)
            if ((mask >> i) & 1u) { start = i; break; }
        std::uint32_t seen = 1u << start;
        std::vector<int> stack{start};
        auto removed_has = [&](int e) {
            return std::find(removed.begin(), removed.end(), e) != removed.end();
        };
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = 0; e < edge_count(); ++e) {
                if (removed_has(e)) continue;
                auto [a, b] = edges_[e];
                int other = -1;
                if (a == v) other = b;
                else if (b == v) other = a;
                else continue;
                if (!((mask >> other) & 1u)) continue;
                if (!((seen >> other) & 1u)) {
                    seen |= 1u << other;
                    stack.push_back(other);
                }
            }
        }
        return seen == mask;
    }

    // Bridge edges, i.e. separating nodes of the curve. Parallel edges are
    // never bridges; loops are never bridges.
    std::vector<int> bridges() const {
        std::vector<int> out;
        for (int e = 0; e < edge_count(); ++e) {
            if (is_loop(e)) continue;
            if (!connected_without(full_mask(), {e})) out.push_back(e);
        }
        return out;
    }

private:
    std::vector<Component> vertices_;
    std::vector<std::pair<int, int>> edges_;
};

// One ordinary singular point of a non-nodal curve: the set of components
// passing through it. Ideal-sheaf twists at such a point drop chi by one on
// every subcurve meeting it.
struct OrdinaryPoint {
    std::uint32_t component_mask = 0;
};

// Abstract Gorenstein intersection data: component genera plus pairwise
// scheme-theoretic intersection lengths |C_i . C_j|. Used for the Kodaira
// curves of type III and IV, where the curve is not nodal and no dual graph
// exists. The chi/delta conventions below are exact for nodal curves and for
// the ordinary singularities of types III/IV; they are not a general
// Gorenstein calculus.
class IntersectionTable {
public:
    IntersectionTable(std::vector<Component> components,
                      std::vector<std::vector<int>> pairwise,
                      std::vector<int> self_lengths = {},
                      std::vector<OrdinaryPoint> points = {})
        : components_(std::move(components)),
          pairwise_(std::move(pairwise)),
          self_(std::move(self_lengths)),
          points_(std::move(points)) {
        const int n = static_cast<int>(components_.size());
        if (n == 0)
            throw Error(ErrorCode::MalformedSpec, "table needs at least one component");
        if (n > kMaxComponents)
            throw Error(ErrorCode::TooManyComponents,
                        "more than " + std::to_string(kMaxComponents) + " components");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (components_[i].name == components_[j].name)
                    throw Error(ErrorCode::DuplicateName,
                                "duplicate component name '" + components_[i].name + "'");
        if (self_.empty()) self_.assign(n, 0);
        if (static_cast<int>(self_.size()) != n ||
            static_cast<int>(pairwise_.size()) != n)
            throw Error(ErrorCode::MalformedSpec, "table shape mismatch");
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(pairwise_[i].size()) != n)
                throw Error(ErrorCode::MalformedSpec, "pairwise matrix is not square");
            if (pairwise_[i][i] != 0)
                throw Error(ErrorCode::MalformedSpec,
                            "pairwise diagonal must be zero (use self lengths)");
            if (self_[i] < 0 || components_[i].genus < 0)
                throw Error(ErrorCode::MalformedSpec, "negative table entry");
            for (int j = 0; j < n; ++j) {
                if (pairwise_[i][j] < 0)
                    throw Error(ErrorCode::MalformedSpec, "negative intersection length");
                if (pairwise_[i][j] != pairwise_[j][i])
                    throw Error(ErrorCode::MalformedSpec, "pairwise matrix is not symmetric");
            }
        }
        if (!connected(full_mask()))
            throw Error(ErrorCode::DisconnectedGraph, "intersection table is not connected");
    }

    int component_count() const { return static_cast<int>(components_.size()); }
    const std::vector<Component>& components() const { return components_; }
    const Component& component(int i) const { return components_[i]; }
    int pairwise(int i, int j) const { return pairwise_[i][j]; }
    int self_length(int i) const { return self_[i]; }
    const std::vector<OrdinaryPoint>& ordinary_points() const { return points_; }

    std::uint32_t full_mask() const {
        return (component_count() == 32) ? ~0u : ((1u << component_count()) - 1u);
    }

    bool connected(std::uint32_t mask) const {
        if (mask == 0) return false;
        int start = -1;
        for (int i = 0; i < component_count(); ++i)
            if ((mask >> i) & 1u) { start = i; break; }
        std::uint32_t seen = 1u << start;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < component_count(); ++w) {
                if (w == v || !((mask >> w) & 1u) || pairwise_[v][w] == 0) continue;
                if (!((seen >> w) & 1u)) {
                    seen |= 1u << w;
                    stack.push_back(w);
                }
            }
        }
        return seen == mask;
    }

private:
    std::vector<Component> components_;
    std::vector<std::vector<int>> pairwise_;
    std::vector<int> self_;
    std::vector<OrdinaryPoint> points_;
};

// A combinatorial curve: either a dual graph (nodal) or an intersection
// table (abstract Gorenstein). Operations that need actual nodes (strata,
// homology, arrangements) require the graph form.
class CurveModel {
public:
    CurveModel(DualGraph g) : model_(std::move(g)) {}
    CurveModel(IntersectionTable t) : model_(std::move(t)) {}

    bool is_graph() const { return std::holds_alternative<DualGraph>(model_); }
    const DualGraph& graph() const {
        if (!is_graph())
            throw Error(ErrorCode::UnsupportedModel, "operation needs a dual graph");
        return std::get<DualGraph>(model_);
    }
    const IntersectionTable& table() const { return std::get<IntersectionTable>(model_); }

    int component_count() const {
        return is_graph() ? graph().vertex_count() : table().component_count();
    }

    const Component& component(int i) const {
        return is_graph() ? graph().vertex(i) : table().component(i);
    }

    int component_index(const std::string& name) const {
        for (int i = 0; i < component_count(); ++i)
            if (component(i).name == name) return i;
        throw Error(ErrorCode::UnknownName, "no component named '" + name + "'");
    }

    std::uint32_t full_mask() const {
        return is_graph() ? graph().full_mask() : table().full_mask();
    }

    bool connected(std::uint32_t mask) const {
        return is_graph() ? graph().connected(mask) : table().connected(mask);
    }

    // Intersection length |C_i . C_j| between distinct components.
    int pairwise_length(int i, int j) const {
        return is_graph() ? graph().multiplicity(i, j) : table().pairwise(i, j);
    }

    // Self-nodes of a component (loops for graphs).
    int self_length(int i) const {
        return is_graph() ? graph().loops_at(i) : table().self_length(i);
    }

    const std::vector<OrdinaryPoint> ordinary_points() const {
        if (is_graph()) {
            std::vector<OrdinaryPoint> pts;
            for (int e = 0; e < graph().edge_count(); ++e) {
                auto [a, b] = graph().edge(e);
                pts.push_back({(1u << a) | (1u << b)});
            }
            return pts;
        }
        return table().ordinary_points();
    }

private:
    std::variant<DualGraph, IntersectionTable> model_;
};

// chi(O_Y) for the subcurve on `mask`. Dual graph: |V(Y)| - |E_in(Y)| - sum g;
// loops count in E_in. Table: inclusion-exclusion at depth two.
inline int euler_char_structure(const CurveModel& X, std::uint32_t mask) {
    if (mask == 0) throw Error(ErrorCode::EmptySubcurve, "empty subcurve");
    long long chi = 0;
    if (X.is_graph()) {
        const DualGraph& g = X.graph();
        for (int v = 0; v < g.vertex_count(); ++v)
            if ((mask >> v) & 1u) chi += 1 - g.vertex(v).genus;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edge(e);
            if (((mask >> a) & 1u) && ((mask >> b) & 1u)) chi -= 1;
        }
    } else {
        const IntersectionTable& t = X.table();
        for (int i = 0; i < t.component_count(); ++i) {
            if (!((mask >> i) & 1u)) continue;
            chi += 1 - t.component(i).genus - t.self_length(i);
            for (int j = i + 1; j < t.component_count(); ++j)
                if ((mask >> j) & 1u) chi -= t.pairwise(i, j);
        }
    }
    return static_cast<int>(chi);
}

inline int euler_char_structure(const CurveModel& X, const Subcurve& Y) {
    return euler_char_structure(X, Y.mask());
}

// p_a(X) = 1 - chi(O_X).
inline int arithmetic_genus(const CurveModel& X) {
    return 1 - euler_char_structure(X, X.full_mask());
}

// delta_Y = |Y . Y^c|: edges across the cut, or summed intersection lengths.
inline int delta(const CurveModel& X, std::uint32_t mask) {
    if (mask == 0 || mask == X.full_mask())
        throw Error(ErrorCode::ImproperSubcurve, "delta needs a proper nonempty subcurve");
    long long d = 0;
    const int n = X.component_count();
    for (int i = 0; i < n; ++i) {
        if (!((mask >> i) & 1u)) continue;
        for (int j = 0; j < n; ++j)
            if (!((mask >> j) & 1u) && j != i) d += X.pairwise_length(i, j);
    }
    return static_cast<int>(d);
}

inline int delta(const CurveModel& X, const Subcurve& Y) { return delta(X, Y.mask()); }

// deg_Y(omega_X) = 2 p_a(Y) - 2 + delta_Y via adjunction, per component.
inline int omega_degree(const CurveModel& X, int i) {
    std::uint32_t m = 1u << i;
    int d = (X.component_count() == 1) ? 0 : delta(X, m);
    return 2 * (X.component(i).genus + X.self_length(i)) - 2 + d;
}

enum class SubcurveFilter { All, BiconnectedPair };

// All nonempty proper subcurves in lexicographic order on member sets;
// BiconnectedPair keeps those with Y and Y^c both connected.
inline std::vector<Subcurve> subcurves(const CurveModel& X, SubcurveFilter filter) {
    const int n = X.component_count();
    if (n > kMaxComponents)
        throw Error(ErrorCode::TooManyComponents, "subcurve scan capped at 16 components");
    std::vector<Subcurve> out;
    const std::uint32_t full = X.full_mask();
    for (std::uint32_t m = 1; m < full; ++m) {
        if (filter == SubcurveFilter::BiconnectedPair) {
            if (!X.connected(m) || !X.connected(full & ~m)) continue;
        }
        out.emplace_back(m, n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct SeparatingBlocks {
    std::vector<int> bridges;          // edge indices in the original graph
    std::vector<DualGraph> blocks;     // induced on components, bridge edges removed
    std::vector<std::vector<int>> block_vertices;       // original vertex ids per block
    std::vector<std::vector<int>> boundary_components;  // bridge-incident, per block
};

// Splits the graph at its bridges. A bridgeless graph comes back as the
// single block. Vertex and edge order inside each block follows the original
// order.
inline SeparatingBlocks separating_blocks(const DualGraph& g) {
    SeparatingBlocks out;
    out.bridges = g.bridges();

    std::vector<bool> is_bridge(g.edge_count(), false);
    for (int e : out.bridges) is_bridge[e] = true;

    std::vector<int> block_of(g.vertex_count(), -1);
    int nblocks = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (block_of[s] != -1) continue;
        int id = nblocks++;
        std::vector<int> stack{s};
        block_of[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = 0; e < g.edge_count(); ++e) {
                if (is_bridge[e]) continue;
                auto [a, b] = g.edge(e);
                int other = (a == v) ? b : (b == v) ? a : -1;
                if (other < 0 || block_of[other] != -1) continue;
                block_of[other] = id;
                stack.push_back(other);
            }
        }
    }

    for (int id = 0; id < nblocks; ++id) {
        std::vector<int> verts;
        std::vector<int> local(g.vertex_count(), -1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (block_of[v] == id) {
                local[v] = static_cast<int>(verts.size());
                verts.push_back(v);
            }
        std::vector<Component> comps;
        for (int v : verts) comps.push_back(g.vertex(v));
        std::vector<std::pair<int, int>> edges;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (is_bridge[e]) continue;
            auto [a, b] = g.edge(e);
            if (block_of[a] == id && block_of[b] == id)
                edges.emplace_back(local[a], local[b]);
        }
        std::vector<int> boundary;
        for (int e : out.bridges) {
            auto [a, b] = g.edge(e);
            if (block_of[a] == id) boundary.push_back(a);
            if (block_of[b] == id) boundary.push_back(b);
        }
        std::sort(boundary.begin(), boundary.end());
        boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
        out.blocks.emplace_back(std::move(comps), std::move(edges));
        out.block_vertices.push_back(std::move(verts));
        out.boundary_components.push_back(std::move(boundary));
    }
    return out;
}

} // namespace jacobial
