#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "jacobial/curves.hpp"
#include "jacobial/lattice.hpp"
#include "jacobial/rational.hpp"

namespace jacobial {

// Rational weight per component with integral total. Subcurve sums q_Y
// drive every stability inequality in the library.
class Polarization {
public:
    explicit Polarization(RatVec values) : values_(std::move(values)) {
        Rat t = 0;
        for (const Rat& v : values_) t += v;
        if (!is_integer(t))
            throw Error(ErrorCode::NonIntegralTotal,
                        "polarization total " + rat_str(t) + " is not an integer");
        total_ = num(t);
    }

    int size() const { return static_cast<int>(values_.size()); }
    const RatVec& values() const { return values_; }
    const Rat& operator[](int i) const { return values_[i]; }
    const Int& total() const { return total_; }

    Rat sum_over(std::uint32_t mask) const {
        Rat s = 0;
        for (int i = 0; i < size(); ++i)
            if ((mask >> i) & 1u) s += values_[i];
        return s;
    }

    Polarization shifted(const Multidegree& m) const {
        RatVec v = values_;
        for (size_t i = 0; i < v.size(); ++i) v[i] += Rat(m[i]);
        return Polarization(std::move(v));
    }

    friend bool operator==(const Polarization& a, const Polarization& b) {
        return a.values_ == b.values_;
    }

private:
    RatVec values_;
    Int total_;
};

inline Polarization make_polarization(RatVec values) {
    return Polarization(std::move(values));
}

// q^E for a vector bundle of the given rank and multidegree:
// q_{C_i} = -deg_i / rank.
inline Polarization polarization_from_bundle(long long rank, const Multidegree& deg) {
    if (rank < 1) throw Error(ErrorCode::BadParameter, "rank must be positive");
    RatVec v;
    v.reserve(deg.size());
    for (long long d : deg) v.emplace_back(Rat(-d, rank));
    return Polarization(std::move(v));
}

struct GeneralityReport {
    bool general = false;
    std::optional<Subcurve> witness;  // a biconnected-pair Y with q_Y integral
};

// General = q_Y not an integer for every proper Y with Y and Y^c connected.
inline GeneralityReport is_general(const CurveModel& X, const Polarization& q) {
    for (const Subcurve& Y : subcurves(X, SubcurveFilter::BiconnectedPair))
        if (is_integer(q.sum_over(Y.mask()))) return {false, Y};
    return {true, std::nullopt};
}

namespace detail {

// Connected components of the induced submodel on `mask`.
inline std::vector<std::uint32_t> connected_parts(const CurveModel& X, std::uint32_t mask) {
    std::vector<std::uint32_t> parts;
    std::uint32_t left = mask;
    while (left) {
        int start = 0;
        while (!((left >> start) & 1u)) ++start;
        std::uint32_t comp = 1u << start;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i = 0; i < X.component_count(); ++i) {
                if (!((left >> i) & 1u) || ((comp >> i) & 1u)) continue;
                for (int j = 0; j < X.component_count(); ++j)
                    if (((comp >> j) & 1u) && X.pairwise_length(i, j) > 0) {
                        comp |= 1u << i;
                        grew = true;
                        break;
                    }
            }
        }
        parts.push_back(comp);
        left &= ~comp;
    }
    return parts;
}

// Integral at Y: q_Z integral for every connected component Z of Y and Y^c.
inline bool integral_at(const CurveModel& X, const Polarization& q, std::uint32_t mask) {
    for (std::uint32_t part : connected_parts(X, mask))
        if (!is_integer(q.sum_over(part))) return false;
    for (std::uint32_t part : connected_parts(X, X.full_mask() & ~mask))
        if (!is_integer(q.sum_over(part))) return false;
    return true;
}

} // namespace detail

// Non-degenerate = not integral at any proper Y whose cut contains a
// non-separating node. Weaker than general exactly across bridges.
inline bool is_nondegenerate(const DualGraph& g, const Polarization& q) {
    CurveModel X(g);
    std::vector<bool> is_bridge(g.edge_count(), false);
    for (int e : g.bridges()) is_bridge[e] = true;
    const std::uint32_t full = g.full_mask();
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        bool nonsep_cut = false;
        for (int e = 0; e < g.edge_count() && !nonsep_cut; ++e) {
            auto [a, b] = g.edge(e);
            if (((mask >> a) & 1u) != ((mask >> b) & 1u) && !is_bridge[e])
                nonsep_cut = true;
        }
        if (nonsep_cut && detail::integral_at(X, q, mask)) return false;
    }
    return true;
}

enum class Verdict { Stable, StrictlySemistable, Unstable };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Stable: return "stable";
        case Verdict::StrictlySemistable: return "strictly_semistable";
        case Verdict::Unstable: return "unstable";
    }
    return "?";
}

struct StabilityWitness {
    Subcurve Y;
    long long chi;  // chi of the restriction to Y
    Rat bound;      // q_Y
};

struct StabilityReport {
    Verdict verdict = Verdict::Stable;
    std::vector<StabilityWitness> witnesses;  // every tight or violated Y
};

// Stability of the line bundle with the given multidegree: chi(L_Y) vs q_Y
// over the biconnected-pair subcurves.
inline StabilityReport check_line_bundle(const CurveModel& X, const Polarization& q,
                                         const Multidegree& d) {
    long long chi_total = total(d) + euler_char_structure(X, X.full_mask());
    if (Int(chi_total) != q.total())
        throw Error(ErrorCode::WrongTotal,
                    "chi(L) = " + std::to_string(chi_total) + " but |q| = " + q.total().str());
    StabilityReport rep;
    bool violated = false, tight = false;
    for (const Subcurve& Y : subcurves(X, SubcurveFilter::BiconnectedPair)) {
        long long chi = sum_over(d, Y.mask()) + euler_char_structure(X, Y.mask());
        Rat qy = q.sum_over(Y.mask());
        if (Rat(chi) < qy) {
            violated = true;
            rep.witnesses.push_back({Y, chi, qy});
        } else if (Rat(chi) == qy) {
            tight = true;
            rep.witnesses.push_back({Y, chi, qy});
        }
    }
    rep.verdict = violated ? Verdict::Unstable
                           : (tight ? Verdict::StrictlySemistable : Verdict::Stable);
    return rep;
}

namespace detail {

// Largest integer strictly above / below a rational bound.
inline long long open_floor(const Rat& a) {  // min integer with a < z
    return static_cast<long long>(floor_rat(a)) + 1;
}
inline long long open_ceil(const Rat& b) {  // max integer with z < b
    return static_cast<long long>(ceil_rat(b)) - 1;
}

// Depth-first enumeration over a per-coordinate integer box with a fixed
// total, in lexicographic order.
template <typename F>
void scan_box(const std::vector<long long>& lo, const std::vector<long long>& hi,
              long long target, F&& emit) {
    const int n = static_cast<int>(lo.size());
    std::vector<long long> suffix_lo(n + 1, 0), suffix_hi(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        suffix_lo[i] = suffix_lo[i + 1] + lo[i];
        suffix_hi[i] = suffix_hi[i + 1] + hi[i];
    }
    Multidegree d(n);
    auto rec = [&](auto&& self, int i, long long remaining) -> void {
        if (i == n) {
            if (remaining == 0) emit(d);
            return;
        }
        for (long long v = lo[i]; v <= hi[i]; ++v) {
            long long rest = remaining - v;
            if (rest < suffix_lo[i + 1] || rest > suffix_hi[i + 1]) continue;
            d[i] = v;
            self(self, i + 1, rest);
        }
    };
    if (n == 0) {
        if (target == 0) emit(d);
        return;
    }
    rec(rec, 0, target);
}

} // namespace detail

// All multidegrees whose line bundles are q-stable, for general q. The
// search box comes from the two-sided singleton bound
// q_i < chi(L_i) < q_i + delta_i.
inline std::vector<Multidegree> stable_multidegrees(const CurveModel& X,
                                                    const Polarization& q) {
    if (!is_general(X, q).general)
        throw Error(ErrorCode::NotGeneral, "stable_multidegrees needs a general polarization");
    const int n = X.component_count();
    long long chi_X = euler_char_structure(X, X.full_mask());
    long long target = static_cast<long long>(q.total()) - chi_X;
    if (n == 1) return {Multidegree{target}};

    std::vector<long long> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        long long chi_i = euler_char_structure(X, 1u << i);
        int delta_i = delta(X, 1u << i);
        lo[i] = detail::open_floor(q[i] - Rat(chi_i));
        hi[i] = detail::open_ceil(q[i] - Rat(chi_i) + Rat(delta_i));
    }
    std::vector<Multidegree> out;
    detail::scan_box(lo, hi, target, [&](const Multidegree& d) {
        if (check_line_bundle(X, q, d).verdict == Verdict::Stable) out.push_back(d);
    });
    return out;
}

// A torus orbit of sheaves: not locally free exactly at the nodes S, with a
// line-bundle multidegree on the partial normalization at S.
struct Stratum {
    std::vector<int> edges;  // sorted node indices
    Multidegree degrees;
};

namespace detail {

// chi(O_{Y_S}) computed in the graph with the edges S deleted. The formula
// handles disconnected Y_S.
inline long long chi_partial(const DualGraph& g, std::uint32_t mask,
                             const std::vector<bool>& removed) {
    long long chi = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v) & 1u) chi += 1 - g.vertex(v).genus;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (removed[e]) continue;
        auto [a, b] = g.edge(e);
        if (((mask >> a) & 1u) && ((mask >> b) & 1u)) chi -= 1;
    }
    return chi;
}

} // namespace detail

// Membership of the stratum in B_S(q): chi over every proper subcurve is at
// least q_Y, and the total matches |q|. The scan runs over all proper
// subcurves, since Y_S may be disconnected.
inline bool stratum_in_B(const DualGraph& g, const Polarization& q, const Stratum& s) {
    CurveModel X(g);
    std::vector<bool> removed(g.edge_count(), false);
    for (int e : s.edges) {
        if (e < 0 || e >= g.edge_count())
            throw Error(ErrorCode::BadParameter, "stratum edge out of range");
        removed[e] = true;
    }
    if (!g.connected_without(g.full_mask(), s.edges))
        throw Error(ErrorCode::DisconnectedNormalization,
                    "normalization at S is disconnected");
    if (!is_general(X, q).general)
        throw Error(ErrorCode::NotGeneral, "stratum_in_B needs a general polarization");

    const std::uint32_t full = g.full_mask();
    long long chi_total = total(s.degrees) + detail::chi_partial(g, full, removed);
    if (Int(chi_total) != q.total()) return false;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        long long chi = sum_over(s.degrees, mask) + detail::chi_partial(g, mask, removed);
        if (Rat(chi) < q.sum_over(mask)) return false;
    }
    return true;
}

struct StrataLevel {
    std::vector<int> edges;          // the set S
    std::vector<Multidegree> degrees;  // B_S(q), lexicographic
};

// All strata (S, B_S(q)) over subsets S with connected partial
// normalization, graded by |S|. Grade zero reproduces stable_multidegrees.
inline std::vector<StrataLevel> enumerate_strata(const DualGraph& g, const Polarization& q) {
    if (g.edge_count() > 12)
        throw Error(ErrorCode::TooManyEdges, "strata enumeration capped at 12 edges");
    CurveModel X(g);
    if (!is_general(X, q).general)
        throw Error(ErrorCode::NotGeneral, "enumerate_strata needs a general polarization");

    const int ne = g.edge_count();
    const int n = g.vertex_count();
    const std::uint32_t full = g.full_mask();
    std::vector<StrataLevel> out;
    for (std::uint32_t smask = 0; smask < (1u << ne); ++smask) {
        std::vector<int> S;
        std::vector<bool> removed(ne, false);
        for (int e = 0; e < ne; ++e)
            if ((smask >> e) & 1u) {
                S.push_back(e);
                removed[e] = true;
            }
        if (!g.connected_without(full, S)) continue;

        long long chi_XS = detail::chi_partial(g, full, removed);
        long long target = static_cast<long long>(q.total()) - chi_XS;
        std::vector<long long> lo(n), hi(n);
        bool empty_box = false;
        for (int i = 0; i < n && !empty_box; ++i) {
            std::uint32_t m = 1u << i;
            std::uint32_t cm = full & ~m;
            long long chi_i = detail::chi_partial(g, m, removed);
            lo[i] = static_cast<long long>(ceil_rat(q[i] - Rat(chi_i)));
            if (n == 1) {
                hi[i] = std::max(lo[i], target);
            } else {
                long long chi_c = detail::chi_partial(g, cm, removed);
                // chi over the complement >= q_{Y^c} bounds d_i from above
                Rat ub = Rat(target) - q.sum_over(cm) + Rat(chi_c);
                hi[i] = static_cast<long long>(floor_rat(ub));
            }
            if (hi[i] < lo[i]) empty_box = true;
        }
        StrataLevel level;
        level.edges = S;
        if (!empty_box) {
            detail::scan_box(lo, hi, target, [&](const Multidegree& d) {
                for (std::uint32_t mask = 1; mask < full; ++mask) {
                    long long chi = sum_over(d, mask) + detail::chi_partial(g, mask, removed);
                    if (Rat(chi) < q.sum_over(mask)) return;
                }
                level.degrees.push_back(d);
            });
        }
        out.push_back(std::move(level));
    }
    std::sort(out.begin(), out.end(), [](const StrataLevel& a, const StrataLevel& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        return a.edges < b.edges;
    });
    return out;
}

// --- separating blocks -----------------------------------------------------

struct BlockDecomposition {
    SeparatingBlocks structure;
    std::vector<Polarization> block_polarizations;
};

namespace detail {

inline int bridges_at_vertex(const DualGraph& g, int v) {
    int n = 0;
    for (int e : g.bridges()) {
        auto [a, b] = g.edge(e);
        if (a == v) ++n;
        if (b == v) ++n;
    }
    return n;
}

} // namespace detail

// Splits q into the induced polarization on each separating block:
// q^i_C = q_C + (bridges at C)/2. Defined when every block sum
// q_{Y_i} + (bridges at Y_i)/2 is an integer.
inline BlockDecomposition induced_block_polarizations(const DualGraph& g,
                                                      const Polarization& q) {
    BlockDecomposition out{separating_blocks(g), {}};
    for (size_t b = 0; b < out.structure.blocks.size(); ++b) {
        RatVec vals;
        Rat tot = 0;
        for (int v : out.structure.block_vertices[b]) {
            Rat qc = q[v] + Rat(detail::bridges_at_vertex(g, v), 2);
            vals.push_back(qc);
            tot += qc;
        }
        if (!is_integer(tot))
            throw Error(ErrorCode::NotBlockCompatible,
                        "block total " + rat_str(tot) + " is not an integer");
        out.block_polarizations.emplace_back(std::move(vals));
    }
    return out;
}

// Inverse of the decomposition: q_C = q^i_C - (bridges at C)/2, blocks in
// separating_blocks order.
inline Polarization combine_block_polarizations(const DualGraph& g,
                                                const std::vector<Polarization>& qs) {
    SeparatingBlocks blocks = separating_blocks(g);
    if (qs.size() != blocks.blocks.size())
        throw Error(ErrorCode::BadParameter, "one polarization per block required");
    RatVec vals(g.vertex_count(), Rat(0));
    for (size_t b = 0; b < blocks.blocks.size(); ++b) {
        const auto& verts = blocks.block_vertices[b];
        if (qs[b].size() != static_cast<int>(verts.size()))
            throw Error(ErrorCode::BadParameter, "block polarization size mismatch");
        for (size_t k = 0; k < verts.size(); ++k)
            vals[verts[k]] = qs[b][static_cast<int>(k)] -
                             Rat(detail::bridges_at_vertex(g, verts[k]), 2);
    }
    return Polarization(std::move(vals));
}

// --- Abel maps --------------------------------------------------------------

inline bool has_separating_point(const CurveModel& X) {
    if (X.component_count() == 1) return false;
    const std::uint32_t full = X.full_mask();
    for (std::uint32_t mask = 1; mask < full; ++mask)
        if (delta(X, mask) == 1) return true;
    return false;
}

struct AbelPolarization {
    Polarization raw;        // q' from the twist formula, usually not general
    Polarization perturbed;  // deterministic general perturbation, same total
};

// Deterministic perturbation towards a general polarization: add
// eps * (1, 2, 4, ..., 2^(n-1) - (2^n - 1)) and halve eps until general.
inline Polarization perturb_to_general(const CurveModel& X, const Polarization& q) {
    if (is_general(X, q).general) return q;
    const int n = X.component_count();
    std::vector<Int> w;
    Int sum = 0;
    for (int i = 0; i < n; ++i) {
        Int x = Int(1) << i;
        w.push_back(x);
        sum += x;
    }
    w[n - 1] -= sum;

    Int D = 1;
    for (const Subcurve& Y : subcurves(X, SubcurveFilter::BiconnectedPair))
        D = lcm_int(D, den(q.sum_over(Y.mask())));
    Rat eps(Int(1), Int(2) * D * n * (Int(1) << n));
    for (;;) {
        RatVec vals = q.values();
        for (int i = 0; i < n; ++i) vals[i] += eps * Rat(w[i]);
        Polarization cand(std::move(vals));
        if (is_general(X, cand).general) return cand;
        eps /= 2;
    }
}

// The polarization q' with Im(A_L) inside J(q'): per component,
// q'_i = deg_i L - deg_i(omega)/2 - 1/gamma. Total is chi(L) - 1.
inline AbelPolarization abel_polarization(const CurveModel& X, const Multidegree& d) {
    if (has_separating_point(X))
        throw Error(ErrorCode::HasSeparatingPoints,
                    "abel_polarization needs a curve without separating points");
    const int n = X.component_count();
    RatVec vals;
    for (int i = 0; i < n; ++i)
        vals.push_back(Rat(d[i]) - Rat(omega_degree(X, i), 2) - Rat(1, n));
    Polarization raw(std::move(vals));
    Polarization gen = perturb_to_general(X, raw);
    return {raw, gen};
}

// Does some line bundle twist L place the whole Abel image inside J(q)?
// Smooth points of C_i map to the twist d - 1_i; the node e = (a, b) maps to
// the stratum ({e}, d - 1_a - 1_b) (minus 2 on one component for a loop).
// Returns the lexicographically first witness multidegree.
inline std::optional<Multidegree> admits_abel_map(const CurveModel& X,
                                                  const Polarization& q) {
    if (!is_general(X, q).general)
        throw Error(ErrorCode::NotGeneral, "admits_abel_map needs a general polarization");
    if (has_separating_point(X))
        throw Error(ErrorCode::HasBridges,
                    "admits_abel_map needs a curve without separating points; "
                    "decompose into separating blocks first");
    const int n = X.component_count();
    const std::uint32_t full = X.full_mask();
    long long deg_L = static_cast<long long>(q.total()) + arithmetic_genus(X);

    std::vector<OrdinaryPoint> points;
    if (X.is_graph()) {
        points = X.ordinary_points();
    } else {
        points = X.table().ordinary_points();
        bool has_intersections = false;
        for (int i = 0; i < n && !has_intersections; ++i)
            for (int j = i + 1; j < n; ++j)
                if (X.pairwise_length(i, j) > 0) { has_intersections = true; break; }
        if (points.empty() && has_intersections)
            throw Error(ErrorCode::UnsupportedModel,
                        "intersection table lacks singular point data");
    }

    std::vector<long long> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        if (n == 1) {
            lo[i] = hi[i] = deg_L;
            continue;
        }
        long long chi_i = euler_char_structure(X, 1u << i);
        int delta_i = delta(X, 1u << i);
        lo[i] = detail::open_floor(q[i] - Rat(chi_i));
        hi[i] = detail::open_ceil(q[i] - Rat(chi_i) + Rat(delta_i) + 1);
    }

    auto node_images_ok = [&](const Multidegree& d) {
        if (X.is_graph()) {
            const DualGraph& g = X.graph();
            for (int e = 0; e < g.edge_count(); ++e) {
                auto [a, b] = g.edge(e);
                Multidegree dd = d;
                dd[a] -= 1;
                dd[b] -= 1;  // loop: same component twice
                if (!stratum_in_B(g, q, Stratum{{e}, dd})) return false;
            }
            return true;
        }
        for (const OrdinaryPoint& p : points) {
            for (std::uint32_t mask = 1; mask < full; ++mask) {
                long long drop = (p.component_mask & mask) ? 1 : 0;
                long long chi = sum_over(d, mask) + euler_char_structure(X, mask) - drop;
                if (Rat(chi) < q.sum_over(mask)) return false;
            }
        }
        return true;
    };

    std::optional<Multidegree> found;
    detail::scan_box(lo, hi, deg_L, [&](const Multidegree& d) {
        if (found) return;
        for (int i = 0; i < n; ++i) {
            Multidegree twist = d;
            twist[i] -= 1;
            if (check_line_bundle(X, q, twist).verdict != Verdict::Stable) return;
        }
        if (!node_images_ok(d)) return;
        found = d;
    });
    return found;
}

} // namespace jacobial
