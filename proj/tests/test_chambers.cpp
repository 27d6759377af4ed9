#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "jacobial/chambers.hpp"
#include "jacobial/gallery.hpp"

using namespace jacobial;

namespace {

Polarization pol(std::vector<std::string> v) {
    RatVec r;
    for (auto& s : v) r.push_back(parse_rat(s));
    return Polarization(std::move(r));
}

} // namespace

TEST_CASE("fourier-motzkin feasibility") {
    // x < 1, -x < -1 infeasible; x < 1, x > 0 feasible
    std::vector<LinIneq> sys;
    sys.push_back({{Rat(1)}, Rat(1), true});
    sys.push_back({{Rat(-1)}, Rat(-1), true});
    CHECK_FALSE(feasible_point(sys, 1).has_value());

    sys.clear();
    sys.push_back({{Rat(1)}, Rat(1), true});
    sys.push_back({{Rat(-1)}, Rat(0), true});
    auto p = feasible_point(sys, 1);
    REQUIRE(p.has_value());
    CHECK((*p)[0] > 0);
    CHECK((*p)[0] < 1);

    // boundary point allowed when non-strict
    sys.clear();
    sys.push_back({{Rat(1)}, Rat(1), false});
    sys.push_back({{Rat(-1)}, Rat(-1), false});
    auto q = feasible_point(sys, 1);
    REQUIRE(q.has_value());
    CHECK((*q)[0] == 1);

    // 2d strictness: x + y < 1, x > 0, y > 0
    sys.clear();
    sys.push_back({{Rat(1), Rat(1)}, Rat(1), true});
    sys.push_back({{Rat(-1), Rat(0)}, Rat(0), true});
    sys.push_back({{Rat(0), Rat(-1)}, Rat(0), true});
    auto r = feasible_point(sys, 2);
    REQUIRE(r.has_value());
    CHECK((*r)[0] + (*r)[1] < 1);
}

TEST_CASE("chamber counts for kodaira curves") {
    CHECK(polarization_chambers(gallery("kodaira_In", 2), ChamberMode::UnitCube).size() == 1);
    CHECK(polarization_chambers(gallery("kodaira_In", 3), ChamberMode::UnitCube).size() == 2);
    CHECK(polarization_chambers(gallery("kodaira_In", 4), ChamberMode::UnitCube).size() == 6);
    CHECK(polarization_chambers(gallery("kodaira_IV"), ChamberMode::UnitCube).size() == 2);
    CHECK(polarization_chambers(gallery("kodaira_III"), ChamberMode::UnitCube).size() == 1);
    CHECK(polarization_chambers(gallery("kodaira_I"), ChamberMode::UnitCube).size() == 1);
    CHECK(polarization_chambers(gallery("kodaira_II"), ChamberMode::UnitCube).size() == 1);
}

TEST_CASE("chamber representatives are general and consistent") {
    for (auto name : {"kodaira_In", "kodaira_IV"}) {
        CurveModel X = std::string(name) == "kodaira_In" ? gallery(name, 4) : gallery(name);
        auto chambers = polarization_chambers(X, ChamberMode::UnitCube);
        std::set<std::vector<Int>> sigs;
        for (auto& ch : chambers) {
            CHECK(is_general(X, ch.representative).general);
            CHECK(ceil_signature(X, ch.representative) == ch.ceil_signature);
            // representative lies in the half-open unit cube
            for (const Rat& v : ch.representative.values()) {
                CHECK(v >= 0);
                CHECK(v < 1);
            }
            sigs.insert(ch.ceil_signature);
        }
        CHECK(sigs.size() == chambers.size());
    }
}

TEST_CASE("both chamber modes are equinumerous on cycles") {
    for (int n = 2; n <= 4; ++n) {
        CurveModel X = gallery("kodaira_In", n);
        auto cube = polarization_chambers(X, ChamberMode::UnitCube);
        auto last = polarization_chambers(X, ChamberMode::LastComponent, 0);
        CHECK(cube.size() == last.size());
        for (auto& ch : last) {
            for (int i = 0; i + 1 < n; ++i) {
                CHECK(ch.representative[i] >= 0);
                CHECK(ch.representative[i] < 1);
            }
        }
    }
}

TEST_CASE("chamber_of") {
    CurveModel i3 = gallery("kodaira_In", 3);
    CHECK(ceil_signature(i3, pol({"1/3", "1/3", "-2/3"})) ==
          ceil_signature(i3, pol({"1/4", "1/4", "-1/2"})));
    CHECK(ceil_signature(i3, pol({"1/3", "1/3", "-2/3"})) !=
          ceil_signature(i3, pol({"2/3", "2/3", "-4/3"})));

    // translation invariance after unit-cube reduction
    Polarization q = pol({"1/3", "1/3", "-2/3"});
    Polarization shifted = q.shifted({1, -2, 3});
    CHECK(ceil_signature(i3, unit_cube_reduce(q)) ==
          ceil_signature(i3, unit_cube_reduce(shifted)));

    CHECK_THROWS_MATCHES(ceil_signature(i3, pol({"1", "0", "-1"})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::NotGeneral;
                         }));
}

TEST_CASE("same chamber same stable multidegrees") {
    CurveModel i3 = gallery("kodaira_In", 3);
    auto a = stable_multidegrees(i3, pol({"1/3", "1/3", "-2/3"}));
    auto b = stable_multidegrees(i3, pol({"1/4", "1/4", "-1/2"}));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("canonical I_n representatives") {
    auto r2 = canonical_In_representatives(2);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].values() == RatVec{Rat(1, 2), Rat(-1, 2)});

    CHECK(canonical_In_representatives(3).size() == 2);
    CHECK(canonical_In_representatives(4).size() == 6);

    // exactly one representative per chamber (n <= 4)
    for (int n = 2; n <= 4; ++n) {
        CurveModel X = gallery("kodaira_In", n);
        auto reps = canonical_In_representatives(n);
        auto chambers = polarization_chambers(X, ChamberMode::LastComponent, 0);
        REQUIRE(reps.size() == chambers.size());
        std::set<std::vector<Int>> chamber_sigs, rep_sigs;
        for (auto& ch : chambers) chamber_sigs.insert(ch.ceil_signature);
        for (auto& q : reps) rep_sigs.insert(ceil_signature(X, q));
        CHECK(chamber_sigs == rep_sigs);
    }

    CHECK_THROWS_AS(canonical_In_representatives(1), Error);
}

TEST_CASE("abel admission per chamber") {
    // I_n: exactly one chamber admits, and it is the chamber of
    // ((n-1)/n, ..., -(n-1)^2/n)
    for (int n = 2; n <= 4; ++n) {
        CurveModel X = gallery("kodaira_In", n);
        auto chambers = polarization_chambers(X, ChamberMode::UnitCube);
        int admitting = 0;
        std::vector<Int> admitted_sig;
        for (auto& ch : chambers) {
            if (admits_abel_map(X, ch.representative)) {
                ++admitting;
                admitted_sig = ch.ceil_signature;
            }
        }
        CHECK(admitting == 1);
        RatVec abel(n, Rat(n - 1, n));
        abel[n - 1] = -Rat((n - 1) * (n - 1), n);
        Polarization qa = unit_cube_reduce(Polarization(std::move(abel)));
        CHECK(ceil_signature(X, qa) == admitted_sig);
    }

    // kodaira IV: flags (true, false) for the chambers of (2/3,2/3,-4/3)
    // and (1/3,1/3,-2/3)
    CurveModel iv = gallery("kodaira_IV");
    auto chambers = polarization_chambers(iv, ChamberMode::UnitCube);
    REQUIRE(chambers.size() == 2);
    auto sig1 = ceil_signature(iv, unit_cube_reduce(pol({"2/3", "2/3", "-4/3"})));
    auto sig2 = ceil_signature(iv, unit_cube_reduce(pol({"1/3", "1/3", "-2/3"})));
    for (auto& ch : chambers) {
        bool admits = admits_abel_map(iv, ch.representative).has_value();
        if (ch.ceil_signature == sig1) CHECK(admits);
        if (ch.ceil_signature == sig2) CHECK_FALSE(admits);
    }

    // kodaira III: the single chamber admits
    CurveModel iii = gallery("kodaira_III");
    auto ch3 = polarization_chambers(iii, ChamberMode::UnitCube);
    REQUIRE(ch3.size() == 1);
    CHECK(admits_abel_map(iii, ch3[0].representative).has_value());
}
