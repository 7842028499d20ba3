#include "clexp/bipartite.hpp"

#include "clexp/angles.hpp"
#include "clexp/polygon.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace clexp;

TEST_CASE("bipartite graph shape") {
    Triangulation t = fixtures::three_punctured_square();
    TPolygon tp = build_plain(t, fixtures::delta1());
    BipartiteGraph b = build_bipartite(tp);
    CHECK(b.nblack == 5);
    CHECK(b.nwhite == 5);
    CHECK(b.edges.size() == 13);
    CHECK(b.squares.size() == 4);

    // The square polygon: 2 black, 2 white, 4 edges.
    Triangulation sq = fixtures::polygon_fan(4);
    ArcSpec d = fixtures::disk_arc(fixtures::DiskTriangulation{sq, 4, {}}, 2, 4);
    BipartiteGraph bs = build_bipartite(build_plain(sq, d));
    CHECK(bs.nblack == 2);
    CHECK(bs.nwhite == 2);
    CHECK(bs.edges.size() == 4);
}

TEST_CASE("varpi round-trips") {
    Triangulation t = fixtures::three_punctured_square();
    for (int which = 0; which < 3; ++which) {
        TPolygon tp = which == 0   ? build_plain(t, fixtures::delta1())
                      : which == 1 ? build_notched(t, fixtures::delta2())
                                   : build_notched(t, fixtures::delta3());
        BipartiteGraph b = build_bipartite(tp);
        for (const Angle& a : tp.angles_at_diagonals()) CHECK(varpi_inv(b, varpi(b, a)) == a);
        for (const auto& e : b.edges) CHECK(varpi(b, varpi_inv(b, e.id)) == e.id);
    }
}

TEST_CASE("bipartite matchings agree with angle matchings") {
    Triangulation t = fixtures::three_punctured_square();
    for (int which = 0; which < 3; ++which) {
        TPolygon tp = which == 0   ? build_plain(t, fixtures::delta1())
                      : which == 1 ? build_notched(t, fixtures::delta2())
                                   : build_notched(t, fixtures::delta3());
        BipartiteGraph b = build_bipartite(tp);
        AngleMatching amin = minimal_matching(tp);
        PerfectMatching emin = bipartite_minimal(b, amin);

        auto pms = enumerate_bipartite_pm(b);
        auto ams = enumerate_matchings(tp);
        REQUIRE(pms.size() == ams.size());
        CHECK(squares_of(b, emin, emin).empty());

        std::multiset<std::string> angle_ws, bip_ws;
        for (const AngleMatching& a : ams)
            angle_ws.insert(LPoly::monomial(weight_xy(tp, a, amin)).str());
        for (const PerfectMatching& e : pms) {
            CHECK(check_square_boundary_decomposition(b, e, emin));
            Monomial m(tp.nvars);
            for (int x : e)
                if (b.edges[x].label > 0) m.xexp[b.edges[x].label - 1] += 1;
            for (int sq : squares_of(b, e, emin)) {
                int label = tp.edge(sq).label;
                if (label > 0) m.yexp[label - 1] += 1;
            }
            bip_ws.insert(LPoly::monomial(m).str());

            // Per-matching coefficient supports agree through varpi.
            AngleMatching a;
            for (int x : e) a.push_back(varpi_inv(b, x));
            std::sort(a.begin(), a.end());
            REQUIRE(is_angle_matching(tp, a));
            std::vector<int> ys = y_support(tp, a, amin);
            std::vector<int> is = squares_of(b, e, emin);
            CHECK(ys == is);
        }
        CHECK(angle_ws == bip_ws);
    }
}
