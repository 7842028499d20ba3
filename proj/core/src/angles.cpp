#include "clexp/angles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace clexp {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SurfaceError(msg); }

}  // namespace

bool is_angle_matching(const TPolygon& tp, const AngleMatching& a) {
    if (static_cast<int>(a.size()) != tp.num_triangles()) return false;
    std::set<int> tris, verts;
    for (const Angle& x : a) {
        if (x.tri < 0 || x.tri >= tp.num_triangles() || x.corner < 0 || x.corner > 2) return false;
        if (!tris.insert(x.tri).second) return false;
        if (!verts.insert(tp.angle_vertex(x)).second) return false;
    }
    for (int v : tp.diagonal_incident_vertices())
        if (!verts.count(v)) return false;
    return true;
}

std::vector<AngleMatching> enumerate_matchings(const TPolygon& tp) {
    // Every marked angle must sit at a distinct diagonal-incident vertex, and
    // their number equals the number of triangles, so the assignment is a
    // bijection; backtrack over triangles in order.
    std::vector<AngleMatching> out;
    std::set<int> used;
    AngleMatching cur;
    std::vector<char> incident(3 * tp.num_triangles(), 0);
    for (int k = 0; k < tp.num_triangles(); ++k)
        for (int j = 0; j < 3; ++j)
            incident[3 * k + j] = tp.vertex_diagonal_incident(tp.mesh.tris[k].verts[j]);

    auto rec = [&](auto&& self, int tri) -> void {
        if (tri == tp.num_triangles()) {
            out.push_back(cur);
            return;
        }
        for (int j = 0; j < 3; ++j) {
            if (!incident[3 * tri + j]) continue;
            int v = tp.mesh.tris[tri].verts[j];
            if (used.count(v)) continue;
            used.insert(v);
            cur.push_back({tri, j});
            self(self, tri + 1);
            cur.pop_back();
            used.erase(v);
        }
    };
    rec(rec, 0);
    return out;
}

bool satisfies_min_condition(const TPolygon& tp, const AngleMatching& a, int vertex) {
    Angle want = tp.first_angle_ccw(vertex);
    for (const Angle& x : a)
        if (tp.angle_vertex(x) == vertex) return x == want;
    return false;
}

bool satisfies_max_condition(const TPolygon& tp, const AngleMatching& a, int vertex) {
    Angle want = tp.last_angle_ccw(vertex);
    for (const Angle& x : a)
        if (tp.angle_vertex(x) == vertex) return x == want;
    return false;
}

AngleMatching minimal_matching(const TPolygon& tp) {
    std::vector<int> forced_vertices;
    for (int v : tp.diagonal_incident_vertices())
        if (tp.mesh.vertex_on_boundary(v)) forced_vertices.push_back(v);
    std::vector<AngleMatching> hits;
    for (const AngleMatching& a : enumerate_matchings(tp)) {
        bool ok = true;
        for (int v : forced_vertices) ok = ok && satisfies_min_condition(tp, a, v);
        if (ok) hits.push_back(a);
    }
    if (hits.size() != 1)
        fail("minimal matching is not unique: " + std::to_string(hits.size()) + " candidates");
    return hits.front();
}

Monomial weight_x(const TPolygon& tp, const AngleMatching& a) {
    Monomial m(tp.nvars);
    for (const Angle& x : a) {
        int label = tp.edge(tp.opposite_edge(x)).label;
        if (label > 0) m.xexp[label - 1] += 1;
    }
    return m;
}

std::vector<int> y_support(const TPolygon& tp, const AngleMatching& a,
                           const AngleMatching& minimal) {
    std::set<Angle> diff;
    std::set<Angle> sa(a.begin(), a.end());
    std::set<Angle> sm(minimal.begin(), minimal.end());
    for (const Angle& x : sa)
        if (!sm.count(x)) diff.insert(x);
    for (const Angle& x : sm)
        if (!sa.count(x)) diff.insert(x);

    std::set<int> support;
    for (const Angle& x : diff) {
        if (!tp.is_exterior(x)) continue;
        auto [e1, e2] = tp.angle_sides(x);
        support.insert(tp.is_diagonal(e1) ? e1 : e2);
    }
    if (!tp.special_angles.empty()) {
        // One-crossing 2-notched arcs: tau_1 joins the support whenever the
        // matching contains one of the four distinguished angles.
        bool hit = false;
        for (const Angle& s : tp.special_angles) hit = hit || sa.count(s) > 0;
        if (hit) {
            if (support.count(tp.tau[0])) fail("four-angle rule would double a diagonal");
            support.insert(tp.tau[0]);
        }
    }
    return {support.begin(), support.end()};
}

Monomial weight_xy(const TPolygon& tp, const AngleMatching& a, const AngleMatching& minimal) {
    Monomial m = weight_x(tp, a);
    for (int d : y_support(tp, a, minimal)) {
        int label = tp.edge(d).label;
        if (label > 0) m.yexp[label - 1] += 1;
    }
    return m;
}

bool is_bad(const TPolygon& tp, const AngleMatching& a) {
    if (tp.shape != TPolygon::Shape::annulus) return false;
    auto comps = tp.boundary_components();
    if (comps.size() != 2) fail("bad-matching test needs two boundary components");
    auto all_min = [&](const std::vector<int>& comp) {
        for (int v : comp)
            if (tp.vertex_diagonal_incident(v) && !satisfies_min_condition(tp, a, v)) return false;
        return true;
    };
    auto all_max = [&](const std::vector<int>& comp) {
        for (int v : comp)
            if (tp.vertex_diagonal_incident(v) && !satisfies_max_condition(tp, a, v)) return false;
        return true;
    };
    return (all_min(comps[0]) && all_max(comps[1])) || (all_min(comps[1]) && all_max(comps[0]));
}

std::vector<AngleMatching> good_enumerate(const TPolygon& tp) {
    if (tp.shape != TPolygon::Shape::annulus)
        fail("good matchings are defined on triangulated annuli");
    std::vector<AngleMatching> out;
    for (const AngleMatching& a : enumerate_matchings(tp))
        if (!is_bad(tp, a)) out.push_back(a);
    return out;
}

}  // namespace clexp
