#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacobial/curves.hpp"

namespace jacobial {

namespace detail {

inline DualGraph make_cycle(int n) {
    std::vector<Component> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) vs.push_back({"C" + std::to_string(i + 1), 0});
    if (n == 1) {
        es.emplace_back(0, 0);
    } else {
        for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    }
    return DualGraph(std::move(vs), std::move(es));
}

inline DualGraph make_theta() {
    return DualGraph({{"C1", 0}, {"C2", 0}}, {{0, 1}, {0, 1}, {0, 1}});
}

// X_n: two hub vertices joined by two paths of length n+1 and one direct
// edge. Vertex order L, R, T1..Tn, B1..Bn; edge order top path, bottom path,
// then the direct edge.
inline DualGraph make_blownup_dollar(int n) {
    std::vector<Component> vs{{"L", 0}, {"R", 0}};
    for (int i = 1; i <= n; ++i) vs.push_back({"T" + std::to_string(i), 0});
    for (int i = 1; i <= n; ++i) vs.push_back({"B" + std::to_string(i), 0});
    auto T = [&](int i) { return 1 + i; };      // T_i at index 2..n+1
    auto B = [&](int i) { return 1 + n + i; };  // B_i at index n+2..2n+1
    std::vector<std::pair<int, int>> es;
    es.emplace_back(0, T(1));
    for (int i = 1; i < n; ++i) es.emplace_back(T(i), T(i + 1));
    es.emplace_back(T(n), 1);
    es.emplace_back(0, B(1));
    for (int i = 1; i < n; ++i) es.emplace_back(B(i), B(i + 1));
    es.emplace_back(B(n), 1);
    es.emplace_back(0, 1);
    return DualGraph(std::move(vs), std::move(es));
}

} // namespace detail

// Named curves used throughout: the Kodaira gallery and the blown-up dollar
// signs X_n. Parameterized names take n.
inline CurveModel gallery(const std::string& name, std::optional<int> n = std::nullopt) {
    auto need_n = [&](int lo) {
        if (!n || *n < lo)
            throw Error(ErrorCode::BadParameter,
                        name + " needs a parameter n >= " + std::to_string(lo));
        return *n;
    };
    if (name == "kodaira_I")
        return CurveModel(DualGraph({{"C1", 0}}, {{0, 0}}));
    if (name == "kodaira_II")
        return CurveModel(IntersectionTable({{"C1", 1}}, {{0}}));
    if (name == "kodaira_III")
        return CurveModel(IntersectionTable({{"C1", 0}, {"C2", 0}},
                                            {{0, 2}, {2, 0}}, {0, 0},
                                            {OrdinaryPoint{0b11u}}));
    if (name == "kodaira_IV")
        return CurveModel(IntersectionTable({{"C1", 0}, {"C2", 0}, {"C3", 0}},
                                            {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}},
                                            {0, 0, 0}, {OrdinaryPoint{0b111u}}));
    if (name == "kodaira_In")
        return CurveModel(detail::make_cycle(need_n(2)));
    if (name == "cycle")
        return CurveModel(detail::make_cycle(need_n(1)));
    if (name == "theta" || name == "dollar")
        return CurveModel(detail::make_theta());
    if (name == "blownup_dollar")
        return CurveModel(detail::make_blownup_dollar(need_n(1)));
    throw Error(ErrorCode::UnknownName, "no gallery curve named '" + name + "'");
}

} // namespace jacobial
