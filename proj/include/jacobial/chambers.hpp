#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "jacobial/gallery.hpp"
#include "jacobial/stability.hpp"

namespace jacobial {

// --- exact linear feasibility via Fourier-Motzkin ----------------------------

// One inequality a.x < b (strict) or a.x <= b.
struct LinIneq {
    RatVec a;
    Rat b;
    bool strict = false;
};

namespace fm {

// Normalizes to a primitive integer normal so duplicate and dominated rows
// can be discarded; keeps only the tightest bound per normal.
inline void compress(std::vector<LinIneq>& rows) {
    std::map<IntVec, LinIneq> best;
    std::vector<LinIneq> trivial;
    for (LinIneq& r : rows) {
        bool all_zero = std::all_of(r.a.begin(), r.a.end(),
                                    [](const Rat& x) { return x == 0; });
        if (all_zero) {
            // 0 < b / 0 <= b: keep only if it is a contradiction
            bool contradiction = r.strict ? !(Rat(0) < r.b) : !(Rat(0) <= r.b);
            if (contradiction) trivial.push_back(r);
            continue;
        }
        Int scale_num = 1, scale_den = 1;
        IntVec key;
        {
            Int l = 1;
            for (const Rat& x : r.a) l = lcm_int(l, den(x));
            IntVec w;
            for (const Rat& x : r.a) w.push_back(num(x) * (l / den(x)));
            Int g = 0;
            for (const Int& x : w) g = gcd_int(g, x);
            if (g == 0) g = 1;
            for (Int& x : w) x /= g;
            key = w;
            scale_num = l;
            scale_den = g;
        }
        Rat scale = Rat(scale_num, scale_den);  // key = a * scale, scale > 0
        Rat nb = r.b * scale;
        auto it = best.find(key);
        if (it == best.end()) {
            best[key] = {RatVec(key.size()), nb, r.strict};
            for (size_t i = 0; i < key.size(); ++i) best[key].a[i] = Rat(key[i]);
        } else {
            LinIneq& cur = it->second;
            if (nb < cur.b || (nb == cur.b && r.strict && !cur.strict)) {
                cur.b = nb;
                cur.strict = r.strict;
            }
        }
    }
    rows.clear();
    for (auto& [k, r] : best) rows.push_back(std::move(r));
    for (auto& r : trivial) rows.push_back(std::move(r));
}

// Eliminates the last active variable (index k), returning the projection.
inline std::vector<LinIneq> eliminate(const std::vector<LinIneq>& rows, int k) {
    std::vector<LinIneq> zero, lower, upper;
    for (const LinIneq& r : rows) {
        if (r.a[k] == 0) zero.push_back(r);
        else if (r.a[k] > 0) upper.push_back(r);
        else lower.push_back(r);
    }
    std::vector<LinIneq> out = zero;
    for (const LinIneq& lo : lower)
        for (const LinIneq& up : upper) {
            // lo: a.x + c*xk <= b with c < 0  =>  xk >= (a.x - b)/(-c)
            // up: a'.x + c'*xk <= b' with c' > 0
            Rat c = -lo.a[k], cp = up.a[k];
            LinIneq r;
            r.a.assign(lo.a.size(), Rat(0));
            for (size_t j = 0; j < lo.a.size(); ++j)
                r.a[j] = lo.a[j] * cp + up.a[j] * c;
            r.a[k] = 0;
            r.b = lo.b * cp + up.b * c;
            r.strict = lo.strict || up.strict;
            out.push_back(std::move(r));
        }
    compress(out);
    return out;
}

} // namespace fm

// Decides feasibility of {x : rows} over the rationals and, when feasible,
// produces an exact solution by back-substitution through the eliminations.
inline std::optional<RatVec> feasible_point(std::vector<LinIneq> rows, int nvars) {
    fm::compress(rows);
    std::vector<std::vector<LinIneq>> levels(nvars + 1);
    levels[nvars] = std::move(rows);
    for (int k = nvars - 1; k >= 0; --k)
        levels[k] = fm::eliminate(levels[k + 1], k);
    for (const LinIneq& r : levels[0]) {
        bool ok = r.strict ? (Rat(0) < r.b) : (Rat(0) <= r.b);
        if (!ok) return std::nullopt;
    }
    RatVec x(nvars, Rat(0));
    for (int k = 0; k < nvars; ++k) {
        bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
        Rat lo, hi;
        for (const LinIneq& r : levels[k + 1]) {
            if (r.a[k] == 0) continue;
            Rat rest = r.b;
            for (int j = 0; j < k; ++j) rest -= r.a[j] * x[j];
            Rat bound = rest / r.a[k];
            if (r.a[k] > 0) {
                if (!has_hi || bound < hi || (bound == hi && r.strict)) {
                    hi = bound;
                    hi_strict = r.strict;
                }
                has_hi = true;
            } else {
                if (!has_lo || bound > lo || (bound == lo && r.strict)) {
                    lo = bound;
                    lo_strict = r.strict;
                }
                has_lo = true;
            }
        }
        if (has_lo && has_hi)
            x[k] = (lo == hi) ? lo : (lo + hi) / 2;
        else if (has_hi)
            x[k] = hi_strict ? hi - 1 : hi;
        else if (has_lo)
            x[k] = lo_strict ? lo + 1 : lo;
        else
            x[k] = 0;
    }
    return x;
}

// --- polarization chambers ---------------------------------------------------

// One chamber of the arrangement q_Y = n, identified by its ceil signature
// over the biconnected-pair subcurves (in subcurves() order), together with
// an exact interior representative.
struct Chamber {
    std::vector<Int> ceil_signature;
    Polarization representative;
    std::optional<Multidegree> admits_abel;  // filled on request
};

inline std::vector<Int> ceil_signature(const CurveModel& X, const Polarization& q) {
    auto gen = is_general(X, q);
    if (!gen.general)
        throw Error(ErrorCode::NotGeneral, "ceil signatures need a general polarization");
    std::vector<Int> sig;
    for (const Subcurve& Y : subcurves(X, SubcurveFilter::BiconnectedPair))
        sig.push_back(ceil_rat(q.sum_over(Y.mask())));
    return sig;
}

// Componentwise reduction into [0,1)^gamma; the representative of the
// translation class.
inline Polarization unit_cube_reduce(const Polarization& q) {
    RatVec v = q.values();
    for (Rat& x : v) x = frac1(x);
    return Polarization(std::move(v));
}

enum class ChamberMode { UnitCube, LastComponent };

namespace detail {

struct ChamberSearch {
    const CurveModel& X;
    std::vector<Subcurve> Ys;
    int nvars;               // free coordinates: gamma - 1
    Rat fixed_total;         // the substituted coordinate is total - sum(x)
    std::vector<LinIneq> base;
    std::vector<Chamber> out;

    ChamberSearch(const CurveModel& X_, Rat total)
        : X(X_), Ys(subcurves(X_, SubcurveFilter::BiconnectedPair)),
          nvars(X_.component_count() - 1), fixed_total(std::move(total)) {}

    // q_Y as a row over the free coordinates plus a constant.
    std::pair<RatVec, Rat> subcurve_form(std::uint32_t mask) const {
        RatVec a(nvars, Rat(0));
        Rat c = 0;
        const int n = X.component_count();
        for (int i = 0; i < n - 1; ++i)
            if ((mask >> i) & 1u) a[i] += 1;
        if ((mask >> (n - 1)) & 1u) {
            c += fixed_total;
            for (int i = 0; i < n - 1; ++i) a[i] -= 1;
        }
        return {std::move(a), std::move(c)};
    }

    void push_bound(std::vector<LinIneq>& sys, const RatVec& a, const Rat& c,
                    const Rat& lo, bool lo_strict, const Rat& hi, bool hi_strict) {
        // lo (<|<=) a.x + c (<|<=) hi
        LinIneq up{a, hi - c, hi_strict};
        LinIneq down;
        down.a.resize(a.size());
        for (size_t i = 0; i < a.size(); ++i) down.a[i] = -a[i];
        down.b = c - lo;
        down.strict = lo_strict;
        sys.push_back(std::move(up));
        sys.push_back(std::move(down));
    }

    Polarization lift(const RatVec& x) const {
        RatVec q(X.component_count());
        Rat sum = 0;
        for (int i = 0; i + 1 < X.component_count(); ++i) {
            q[i] = x[i];
            sum += x[i];
        }
        q[X.component_count() - 1] = fixed_total - sum;
        return Polarization(std::move(q));
    }

    void run() {
        std::vector<Int> sig;
        dfs(0, base, sig);
    }

    void dfs(size_t yi, std::vector<LinIneq>& sys, std::vector<Int>& sig) {
        auto point = feasible_point(sys, nvars);
        if (!point) return;
        if (yi == Ys.size()) {
            out.push_back({sig, lift(*point), std::nullopt});
            return;
        }
        auto [a, c] = subcurve_form(Ys[yi].mask());
        // candidate ceilings: q_Y ranges inside what the cube allows
        Rat qy_at_point = c;
        for (int j = 0; j < nvars; ++j) qy_at_point += a[j] * (*point)[j];
        // scan integer windows (ce-1, ce) overlapping the cube range of q_Y
        Int clo, chi_;
        cube_window(Ys[yi], clo, chi_);
        for (Int ce = clo; ce <= chi_; ++ce) {
            auto next = sys;
            push_bound(next, a, c, Rat(ce) - 1, true, Rat(ce), true);
            sig.push_back(ce);
            dfs(yi + 1, next, sig);
            sig.pop_back();
        }
    }

    // With all coordinates in [0,1) except possibly the substituted last one,
    // q_Y lies in an explicit interval; its ceil in an integer window.
    void cube_window(const Subcurve& Y, Int& clo, Int& chi_) const {
        const int n = X.component_count();
        int size = Y.size();
        bool has_last = Y.contains(n - 1);
        if (!has_last) {
            clo = 1;
            chi_ = size;
        } else {
            // q_Y = total - sum of the (n - size) free coords outside Y
            int outside = n - size;
            Rat lo = fixed_total - Rat(outside);
            clo = floor_rat(lo) + 1;
            chi_ = ceil_rat(fixed_total);
        }
        if (chi_ < clo) chi_ = clo - 1;  // empty window
    }
};

} // namespace detail

// Enumerates the chambers of general polarizations, one translation class
// each. UnitCube: all coordinates in [0,1) with integral total. LastComponent:
// coordinates 1..gamma-1 in [0,1), last = total - sum.
inline std::vector<Chamber> polarization_chambers(const CurveModel& X, ChamberMode mode,
                                                  long long last_total = 0) {
    const int n = X.component_count();
    if (n > 6)
        throw Error(ErrorCode::TooManyComponents, "chamber enumeration capped at 6 components");

    std::vector<Chamber> all;
    auto run_total = [&](Rat total) {
        detail::ChamberSearch search(X, total);
        for (int i = 0; i < search.nvars; ++i) {
            LinIneq lo{RatVec(search.nvars, Rat(0)), Rat(0), false};  // -x_i <= 0
            lo.a[i] = -1;
            LinIneq hi{RatVec(search.nvars, Rat(0)), Rat(1), true};  // x_i < 1
            hi.a[i] = 1;
            search.base.push_back(std::move(lo));
            search.base.push_back(std::move(hi));
        }
        if (mode == ChamberMode::UnitCube && search.nvars > 0) {
            // the substituted coordinate total - sum(x) must also lie in [0,1)
            search.base.push_back({RatVec(search.nvars, Rat(1)), total, false});
            search.base.push_back({RatVec(search.nvars, Rat(-1)), Rat(1) - total, true});
        }
        if (search.nvars == 0 && mode == ChamberMode::UnitCube && total != 0) return;
        search.run();
        for (auto& ch : search.out) all.push_back(std::move(ch));
    };

    if (mode == ChamberMode::UnitCube) {
        for (int t = 0; t < std::max(n, 1); ++t) run_total(Rat(t));
    } else {
        run_total(Rat(last_total));
    }
    return all;
}

// Grid representatives k_i/n on the cycle curve: coordinates 1..n-1 from
// {1/n, ..., (n-1)/n}, last = -sum, filtered to the general ones. Exactly one
// lands in each chamber.
inline std::vector<Polarization> canonical_In_representatives(int n) {
    if (n < 2) throw Error(ErrorCode::BadParameter, "I_n needs n >= 2");
    CurveModel X = gallery("kodaira_In", n);
    std::vector<Polarization> out;
    std::vector<int> k(n - 1, 1);
    for (;;) {
        RatVec q(n);
        Rat sum = 0;
        for (int i = 0; i < n - 1; ++i) {
            q[i] = Rat(k[i], n);
            sum += q[i];
        }
        q[n - 1] = -sum;
        Polarization cand(std::move(q));
        if (is_general(X, cand).general) out.push_back(cand);
        int i = 0;
        while (i < n - 1 && k[i] == n - 1) k[i++] = 1;
        if (i == n - 1) break;
        ++k[i];
    }
    return out;
}

} // namespace jacobial
