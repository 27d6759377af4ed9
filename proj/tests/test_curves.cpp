#include <catch2/catch_amalgamated.hpp>

#include "jacobial/curves.hpp"
#include "jacobial/gallery.hpp"

using namespace jacobial;

namespace {

DualGraph theta() {
    return DualGraph({{"C1", 0}, {"C2", 0}}, {{0, 1}, {0, 1}, {0, 1}});
}

DualGraph path3() {
    return DualGraph({{"A", 0}, {"B", 0}, {"C", 0}}, {{0, 1}, {1, 2}});
}

// two triangles joined by one bridge
DualGraph two_triangles() {
    return DualGraph(
        {{"a1", 0}, {"a2", 0}, {"a3", 0}, {"b1", 0}, {"b2", 0}, {"b3", 0}},
        {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
}

} // namespace

TEST_CASE("dual graph construction") {
    DualGraph t = theta();
    CHECK(t.vertex_count() == 2);
    CHECK(t.edge_count() == 3);

    CurveModel x1 = gallery("blownup_dollar", 1);
    CHECK(x1.graph().vertex_count() == 4);
    CHECK(x1.graph().edge_count() == 5);

    CHECK_THROWS_MATCHES(
        DualGraph({{"A", 0}, {"B", 0}}, {}), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.code() == ErrorCode::DisconnectedGraph; }));
    CHECK_THROWS_MATCHES(
        DualGraph({{"A", 0}, {"A", 0}}, {{0, 1}}), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.code() == ErrorCode::DuplicateName; }));
}

TEST_CASE("arithmetic genus") {
    for (int n = 2; n <= 5; ++n)
        CHECK(arithmetic_genus(gallery("kodaira_In", n)) == 1);
    CHECK(arithmetic_genus(gallery("blownup_dollar", 1)) == 2);
    CHECK(arithmetic_genus(CurveModel(DualGraph({{"P", 0}}, {}))) == 0);
    for (const char* name : {"kodaira_I", "kodaira_II", "kodaira_III", "kodaira_IV"})
        CHECK(arithmetic_genus(gallery(name)) == 1);
}

TEST_CASE("delta") {
    CurveModel i3 = gallery("kodaira_In", 3);
    CHECK(delta(i3, Subcurve::of({0}, 3)) == 2);

    CurveModel iv = gallery("kodaira_IV");
    CHECK(delta(iv, Subcurve::of({0}, 3)) == 2);

    CurveModel x1 = gallery("blownup_dollar", 1);
    int t = x1.component_index("T1");
    CHECK(delta(x1, Subcurve(1u << t, 4)) == 2);
}

TEST_CASE("euler characteristic of subcurves") {
    CurveModel i3 = gallery("kodaira_In", 3);
    CHECK(euler_char_structure(i3, i3.full_mask()) == 0);

    CurveModel iv = gallery("kodaira_IV");
    CHECK(euler_char_structure(iv, iv.full_mask()) == 0);

    CurveModel th(theta());
    CHECK(euler_char_structure(th, Subcurve::of({0}, 2)) == 1);
}

TEST_CASE("structure sequence identity") {
    // chi(O_Y) + chi(O_Yc) = chi(O_X) + delta_Y for dual graphs
    for (auto X : {CurveModel(theta()), gallery("blownup_dollar", 2),
                   CurveModel(two_triangles())}) {
        long long chi_X = euler_char_structure(X, X.full_mask());
        for (const Subcurve& Y : subcurves(X, SubcurveFilter::All)) {
            long long lhs = euler_char_structure(X, Y.mask()) +
                            euler_char_structure(X, Y.complement().mask());
            CHECK(lhs == chi_X + delta(X, Y.mask()));
            CHECK(delta(X, Y.mask()) == delta(X, Y.complement().mask()));
        }
    }
}

TEST_CASE("subcurve enumeration") {
    CurveModel i3 = gallery("kodaira_In", 3);
    CHECK(subcurves(i3, SubcurveFilter::BiconnectedPair).size() == 6);
    CHECK(subcurves(i3, SubcurveFilter::All).size() == 6);

    CurveModel p3(path3());
    auto bc = subcurves(p3, SubcurveFilter::BiconnectedPair);
    REQUIRE(bc.size() == 4);
    std::vector<std::vector<int>> got;
    for (auto& y : bc) got.push_back(y.members());
    std::vector<std::vector<int>> want = {{0}, {0, 1}, {1, 2}, {2}};
    CHECK(got == want);

    CurveModel x1 = gallery("blownup_dollar", 1);
    CHECK(subcurves(x1, SubcurveFilter::All).size() == 14);

    // biconnected is a sub-list of all; on cycles they coincide
    for (int n = 2; n <= 5; ++n) {
        CurveModel c = gallery("kodaira_In", n);
        auto all = subcurves(c, SubcurveFilter::All);
        auto bi = subcurves(c, SubcurveFilter::BiconnectedPair);
        for (auto& y : bi) CHECK(std::find(all.begin(), all.end(), y) != all.end());
        if (n <= 3) CHECK(all.size() == bi.size());
    }
}

TEST_CASE("separating blocks") {
    SECTION("two triangles and a bridge") {
        auto sb = separating_blocks(two_triangles());
        REQUIRE(sb.bridges.size() == 1);
        CHECK(sb.bridges[0] == 6);
        REQUIRE(sb.blocks.size() == 2);
        for (auto& blk : sb.blocks) {
            CHECK(blk.vertex_count() == 3);
            CHECK(blk.edge_count() == 3);
            CHECK(blk.bridges().empty());  // idempotent
        }
        CHECK(sb.boundary_components[0] == std::vector<int>{0});
        CHECK(sb.boundary_components[1] == std::vector<int>{3});
    }
    SECTION("cycles have no bridges") {
        for (int n = 2; n <= 5; ++n) {
            auto sb = separating_blocks(gallery("kodaira_In", n).graph());
            CHECK(sb.bridges.empty());
            CHECK(sb.blocks.size() == 1);
        }
    }
    SECTION("trees shatter") {
        auto sb = separating_blocks(path3());
        CHECK(sb.bridges.size() == 2);
        CHECK(sb.blocks.size() == 3);
        for (auto& blk : sb.blocks) CHECK(blk.vertex_count() == 1);
    }
}

TEST_CASE("gallery") {
    CurveModel i3 = gallery("kodaira_In", 3);
    CHECK(i3.graph().vertex_count() == 3);
    CHECK(i3.graph().edge_count() == 3);
    CHECK(arithmetic_genus(i3) == 1);

    CurveModel x1 = gallery("blownup_dollar", 1);
    CHECK(arithmetic_genus(x1) == 2);
    CHECK(x1.graph().edge_count() == 5);

    CurveModel iv = gallery("kodaira_IV");
    for (int i = 0; i < 3; ++i) CHECK(delta(iv, 1u << i) == 2);

    CHECK(gallery("kodaira_I").graph().edge_count() == 1);
    CHECK(gallery("theta").graph().edge_count() == 3);
    CHECK(gallery("dollar").graph().edge_count() == 3);
    CHECK(gallery("cycle", 1).graph().is_loop(0));

    CHECK_THROWS_MATCHES(gallery("nope"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::UnknownName;
                         }));
    CHECK_THROWS_MATCHES(gallery("kodaira_In", 1), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::BadParameter;
                         }));
}
