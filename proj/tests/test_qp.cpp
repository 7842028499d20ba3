#include "clexp/qp.hpp"

#include "clexp/angles.hpp"
#include "clexp/polygon.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace clexp;

TEST_CASE("quiver with potential of the one-fan polygon") {
    Triangulation t = fixtures::three_punctured_square();
    TPolygon tp = build_notched(t, fixtures::delta2());
    QuiverPotential qp = build_qp(tp);
    CHECK(qp.triangle_cycles.size() == 5);
    CHECK(qp.exterior_cycles.size() == 5);
    CHECK(qp.n_delta() == 5);

    auto cuts = minimal_cuts(qp);
    REQUIRE(cuts.size() == 9);
    for (const Cut& c : cuts) {
        CHECK(static_cast<int>(c.size()) == qp.n_delta());
        CHECK(is_cut(qp, c));
        // Adding any arrow breaks the cut property.
        for (const auto& a : qp.arrows) {
            if (std::count(c.begin(), c.end(), a.id)) continue;
            Cut bigger = c;
            bigger.push_back(a.id);
            std::sort(bigger.begin(), bigger.end());
            CHECK_FALSE(is_cut(qp, bigger));
        }
    }
}

TEST_CASE("square polygon has two plus two cycles") {
    Triangulation sq = fixtures::polygon_fan(4);
    ArcSpec d = fixtures::disk_arc(fixtures::DiskTriangulation{sq, 4, {}}, 2, 4);
    QuiverPotential qp = build_qp(build_plain(sq, d));
    CHECK(qp.triangle_cycles.size() == 2);
    CHECK(qp.exterior_cycles.size() == 2);
    CHECK(minimal_cuts(qp).size() == 2);
}

TEST_CASE("minimal cuts realise the angle matchings") {
    Triangulation t = fixtures::three_punctured_square();
    for (int which = 0; which < 3; ++which) {
        TPolygon tp = which == 0   ? build_plain(t, fixtures::delta1())
                      : which == 1 ? build_notched(t, fixtures::delta2())
                                   : build_notched(t, fixtures::delta3());
        QuiverPotential qp = build_qp(tp);
        auto cuts = minimal_cuts(qp);
        auto ams = enumerate_matchings(tp);
        REQUIRE(cuts.size() == ams.size());

        // rho is injective on diagonal-incident angles and maps matchings
        // onto minimal cuts.
        std::set<int> arrows;
        for (const Angle& a : tp.angles_at_diagonals()) CHECK(arrows.insert(rho(qp, a)).second);
        std::set<Cut> cut_set(cuts.begin(), cuts.end());
        for (const AngleMatching& a : ams) {
            Cut c;
            for (const Angle& x : a) c.push_back(rho(qp, x));
            std::sort(c.begin(), c.end());
            CHECK(cut_set.count(c) == 1);
        }
        for (const Cut& c : cuts) CHECK(is_angle_matching(tp, rho_inv(qp, c)));
    }
}

TEST_CASE("exhaustive cuts confirm minimality") {
    Triangulation sq = fixtures::polygon_fan(5);
    ArcSpec d = fixtures::disk_arc(fixtures::DiskTriangulation{sq, 5, {}}, 2, 5);
    REQUIRE(d.arcs.size() == 2);
    QuiverPotential qp = build_qp(build_plain(sq, d));
    auto all = all_cuts(qp);
    auto mins = minimal_cuts(qp);
    int n = qp.n_delta();
    std::set<Cut> small;
    for (const Cut& c : all) {
        CHECK(static_cast<int>(c.size()) >= n);
        if (static_cast<int>(c.size()) == n) small.insert(c);
        // Every cut hits each potential cycle exactly once (revalidated).
        CHECK(is_cut(qp, c));
    }
    CHECK(small == std::set<Cut>(mins.begin(), mins.end()));
}
