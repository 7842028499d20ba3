#include "clexp/snake.hpp"

#include "clexp/angles.hpp"
#include "clexp/polygon.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace clexp;

namespace {

std::multiset<std::string> weight_set(const std::vector<Monomial>& ws) {
    std::multiset<std::string> out;
    for (const Monomial& m : ws) out.insert(LPoly::monomial(m).str());
    return out;
}

std::vector<Monomial> angle_weights(const TPolygon& tp) {
    AngleMatching amin = minimal_matching(tp);
    std::vector<Monomial> out;
    for (const AngleMatching& a : enumerate_matchings(tp)) out.push_back(weight_xy(tp, a, amin));
    return out;
}

AngleMatching angles_of_pm(const SnakeGraph& g, const PerfectMatching& p) {
    AngleMatching a;
    for (int e : p) a.push_back({g.edges[e].angle / 3, g.edges[e].angle % 3});
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace

TEST_CASE("snake graph of the four-crossing strip") {
    Triangulation t = fixtures::three_punctured_square();
    TPolygon tp = build_plain(t, fixtures::delta1());
    SnakeGraph g = build_snake(tp);
    CHECK(g.ntiles == 4);
    CHECK(g.tile_label == std::vector<int>{2, 1, 2, 3});
    CHECK(g.tile_pos == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}, {1, 2}});

    auto pms = enumerate_pm(g);
    REQUIRE(pms.size() == 5);
    PerfectMatching pmin = minimal_pm(g);
    CHECK(LPoly::monomial(pm_weight_xy(g, pmin)) == LPoly::parse("x1*x2^2*x6", 10));
    CHECK(height_tiles(g, pmin).empty());

    std::vector<Monomial> ws;
    for (const auto& p : pms) {
        ws.push_back(pm_weight_xy(g, p));
        CHECK(check_tile_boundary_decomposition(g, p));
    }
    CHECK(weight_set(ws) == weight_set(angle_weights(tp)));
}

TEST_CASE("edge-to-angle bijection preserves weights and supports") {
    Triangulation t = fixtures::three_punctured_square();
    TPolygon tp = build_plain(t, fixtures::delta1());
    SnakeGraph g = build_snake(tp);
    AngleMatching amin = minimal_matching(tp);
    std::set<std::vector<Angle>> seen;
    for (const PerfectMatching& p : enumerate_pm(g)) {
        AngleMatching a = angles_of_pm(g, p);
        CHECK(is_angle_matching(tp, a));
        CHECK(seen.insert(a).second);
        CHECK(weight_x(tp, a) == pm_weight_x(g, p));
        std::set<int> y_angles;
        for (int d : y_support(tp, a, amin)) y_angles.insert(d);
        std::set<int> y_tiles;
        for (int tile : height_tiles(g, p)) y_tiles.insert(tp.tau[tile]);
        CHECK(y_angles == y_tiles);
    }
}

TEST_CASE("one-tile snake graph") {
    Triangulation t = fixtures::polygon_fan(4);
    ArcSpec d = fixtures::disk_arc(fixtures::DiskTriangulation{t, 4, {}}, 2, 4);
    SnakeGraph g = build_snake(build_plain(t, d));
    CHECK(g.ntiles == 1);
    CHECK(enumerate_pm(g).size() == 2);
    CHECK(minimal_pm(g).size() == 2);
}

TEST_CASE("symmetric matchings of the loop snake graph") {
    Triangulation t = fixtures::three_punctured_square();
    TPolygon loop_poly = build_notched_loop_polygon(t, fixtures::delta2(), 1);
    SnakeGraph gl = build_snake(loop_poly);
    CHECK(gl.ntiles == 7);
    CHECK(gl.has_symmetry);
    CHECK(gl.sym_n == 2);
    CHECK(gl.sym_m == 3);

    ArcSpec gamma = fixtures::delta2();
    gamma.kind = ArcSpec::Kind::plain;
    gamma.tags = {Tag::plain, Tag::plain};
    SnakeGraph gg = build_snake(build_plain(t, gamma));
    CHECK(gg.ntiles == 2);

    auto sym = symmetric_pms(gl, gg);
    REQUIRE(sym.size() == 9);

    PerfectMatching pmin = minimal_pm(gl);
    bool found_min = false;
    for (const auto& s : sym)
        if (s.pm == pmin) {
            found_min = true;
            CHECK(s.res == minimal_pm(gg));
        }
    CHECK(found_min);

    TPolygon fan = build_notched(t, fixtures::delta2());
    std::vector<Monomial> ws;
    for (const auto& s : sym) ws.push_back(s.weight);
    CHECK(weight_set(ws) == weight_set(angle_weights(fan)));
}

TEST_CASE("compatible pairs of the 2-notched arc") {
    Triangulation t = fixtures::three_punctured_square();
    SnakeGraph gp = build_snake(build_notched_loop_polygon(t, fixtures::delta3(), 1));
    SnakeGraph gq = build_snake(build_notched_loop_polygon(t, fixtures::delta3(), 0));
    ArcSpec gamma = fixtures::delta3();
    gamma.kind = ArcSpec::Kind::plain;
    gamma.tags = {Tag::plain, Tag::plain};
    SnakeGraph bp = build_snake(build_plain(t, gamma));
    SnakeGraph bq = build_snake(build_plain(t, gamma.reversed()));

    auto pairs = compatible_pairs(gp, bp, gq, bq);
    REQUIRE(pairs.size() == 18);
    std::vector<Monomial> ws;
    for (const auto& pr : pairs) ws.push_back(pr.weight);
    TPolygon fan = build_notched(t, fixtures::delta3());
    CHECK(weight_set(ws) == weight_set(angle_weights(fan)));

    bool found = false;
    for (const auto& pr : pairs)
        found = found || (pr.pm_p == minimal_pm(gp) && pr.pm_q == minimal_pm(gq));
    CHECK(found);
}

TEST_CASE("band graph of the annulus core") {
    Triangulation t = fixtures::annulus_2_2();
    LoopSpec z = fixtures::annulus_core_loop();
    ArcSpec cut;
    cut.kind = ArcSpec::Kind::plain;
    cut.triangles = {z.triangles[3], z.triangles[0], z.triangles[1], z.triangles[2],
                     z.triangles[3]};
    cut.arcs = z.arcs;
    TPolygon cut_poly = build_plain(t, cut);
    BandGraph b = build_band(cut_poly);
    CHECK(b.snake.ntiles == 4);

    auto good = band_good_pms(b);
    CHECK(good.size() > 0);
    auto gm = band_minimal(b);
    bool found = false;
    for (const auto& g : good) found = found || g.completion == gm.completion;
    CHECK(found);

    TPolygon ann = build_annulus(t, z);
    CHECK(good.size() == good_enumerate(ann).size());
}
