#include "clexp/polygon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace clexp {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SurfaceError(msg); }

// One triangle copy to glue: source triangle and the slots through which the
// curve enters and leaves it (-1 when absent). Slots refer to the source
// triangle's edge positions.
struct Visit {
    int tri = -1;
    int enter_slot = -1;
    int exit_slot = -1;
};

struct Glue {
    int copy_a, slot_a, copy_b, slot_b;
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

int first_slot_with(const Triangle& t, int arc, int exclude = -1) {
    for (int j = 0; j < 3; ++j)
        if (t.edges[j] == arc && j != exclude) return j;
    fail("triangle does not contain the required arc " + std::to_string(arc));
}

TPolygon assemble(const Triangulation& t, const std::vector<Visit>& visits,
                  const std::vector<Glue>& glues, TPolygon::Shape shape) {
    int nc = static_cast<int>(visits.size());
    UnionFind everts(3 * nc), eedges(3 * nc);
    for (const auto& g : glues) {
        int ea = t.mesh.tris[visits[g.copy_a].tri].edges[g.slot_a];
        int eb = t.mesh.tris[visits[g.copy_b].tri].edges[g.slot_b];
        if (ea != eb) fail("glued sides carry different arcs");
        eedges.unite(3 * g.copy_a + g.slot_a, 3 * g.copy_b + g.slot_b);
        // Oriented gluing: head of one use meets tail of the other.
        everts.unite(3 * g.copy_a + g.slot_a, 3 * g.copy_b + (g.slot_b + 1) % 3);
        everts.unite(3 * g.copy_a + (g.slot_a + 1) % 3, 3 * g.copy_b + g.slot_b);
    }

    std::map<int, int> edge_id, vert_id;
    auto edge_of = [&](int copy, int slot) {
        int r = eedges.find(3 * copy + slot);
        auto [it, fresh] = edge_id.emplace(r, static_cast<int>(edge_id.size()));
        (void)fresh;
        return it->second;
    };
    auto vert_of = [&](int copy, int slot) {
        int r = everts.find(3 * copy + slot);
        auto [it, fresh] = vert_id.emplace(r, static_cast<int>(vert_id.size()));
        (void)fresh;
        return it->second;
    };

    TPolygon tp;
    tp.shape = shape;
    tp.nvars = t.num_arcs();
    for (int i = 0; i < nc; ++i) {
        Triangle copy;
        for (int j = 0; j < 3; ++j) {
            copy.edges[j] = edge_of(i, j);
            copy.verts[j] = vert_of(i, j);
        }
        tp.mesh.tris.push_back(copy);
        tp.copies.push_back({visits[i].tri, i});
    }
    tp.mesh.index();

    tp.edges.resize(edge_id.size());
    for (auto& e : tp.edges) e.copy = -1;
    for (int i = 0; i < nc; ++i) {
        const Triangle& src = t.mesh.tris[visits[i].tri];
        for (int j = 0; j < 3; ++j) {
            int id = tp.mesh.tris[i].edges[j];
            int label = t.is_arc(src.edges[j]) ? src.edges[j] : 0;
            TPolygon::Edge& e = tp.edges[id];
            if (e.copy < 0) {
                e.id = id;
                e.label = label;
                e.copy = i;
                e.slot = j;
            } else if (e.label != label) {
                fail("glued edges carry different labels");
            }
        }
    }
    for (auto& e : tp.edges) e.diagonal = !tp.mesh.is_boundary_edge(e.id);
    return tp;
}

std::vector<Glue> chain_glues(size_t from, size_t to, const std::vector<Visit>& visits) {
    std::vector<Glue> glues;
    for (size_t i = from; i < to; ++i)
        glues.push_back({static_cast<int>(i), visits[i].exit_slot, static_cast<int>(i + 1),
                         visits[i + 1].enter_slot});
    return glues;
}

std::vector<Visit> strip_visits(const Triangulation& t, const ArcSpec& d) {
    std::vector<Visit> visits;
    for (int tri : d.triangles) visits.push_back({tri, -1, -1});
    for (size_t i = 0; i + 1 < visits.size(); ++i) {
        visits[i].exit_slot =
            first_slot_with(t.mesh.tris[visits[i].tri], d.arcs[i], visits[i].enter_slot);
        auto p = t.mesh.partner({visits[i].tri, visits[i].exit_slot});
        if (!p) fail("arc crosses a boundary segment");
        if (p->tri != visits[i + 1].tri) fail("crossing data inconsistent with the triangulation");
        visits[i + 1].enter_slot = p->slot;
    }
    return visits;
}

// Counterclockwise corner cycle around a puncture starting from the given
// corner; fails if the walk hits the boundary.
std::vector<std::pair<int, int>> fan_corners(const Triangulation& t, int tri, int corner) {
    std::vector<std::pair<int, int>> cs;
    std::pair<int, int> cur{tri, corner};
    while (true) {
        cs.push_back(cur);
        auto nxt = t.mesh.next_corner_ccw(cur.first, cur.second);
        if (!nxt) fail("fan walk reached the boundary; endpoint is not a puncture");
        if (*nxt == cs.front()) break;
        cur = *nxt;
        if (cs.size() > 3 * t.mesh.tris.size()) fail("fan walk does not close");
    }
    return cs;
}

}  // namespace

std::vector<int> TPolygon::diagonals() const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.diagonal) out.push_back(e.id);
    return out;
}

bool TPolygon::vertex_diagonal_incident(int v) const {
    for (const auto& t : mesh.tris)
        for (int j = 0; j < 3; ++j)
            if ((t.verts[j] == v || t.verts[(j + 1) % 3] == v) && is_diagonal(t.edges[j]))
                return true;
    return false;
}

std::vector<int> TPolygon::diagonal_incident_vertices() const {
    std::vector<int> out;
    for (int v : mesh.vertex_ids())
        if (vertex_diagonal_incident(v)) out.push_back(v);
    return out;
}

std::vector<Angle> TPolygon::all_angles() const {
    std::vector<Angle> out;
    for (int k = 0; k < num_triangles(); ++k)
        for (int j = 0; j < 3; ++j) out.push_back({k, j});
    return out;
}

std::vector<Angle> TPolygon::angles_at_diagonals() const {
    std::vector<Angle> out;
    for (const Angle& a : all_angles()) {
        auto [e1, e2] = angle_sides(a);
        if (is_diagonal(e1) || is_diagonal(e2)) out.push_back(a);
    }
    return out;
}

bool TPolygon::is_exterior(const Angle& a) const {
    auto [e1, e2] = angle_sides(a);
    return is_diagonal(e1) != is_diagonal(e2);
}

std::vector<Angle> TPolygon::exterior_angles() const {
    std::vector<Angle> out;
    for (const Angle& a : all_angles())
        if (is_exterior(a)) out.push_back(a);
    return out;
}

Angle TPolygon::first_angle_ccw(int v) const {
    auto corners = mesh.corners_at(v);
    if (corners.empty()) fail("no corner at vertex");
    auto [k, j] = corners.front();
    if (!mesh.is_boundary_edge(mesh.corner_out_edge(k, j)))
        fail("min-condition requested at an interior vertex");
    return {k, j};
}

Angle TPolygon::last_angle_ccw(int v) const {
    auto corners = mesh.corners_at(v);
    if (corners.empty()) fail("no corner at vertex");
    auto [k, j] = corners.back();
    if (!mesh.is_boundary_edge(mesh.corner_in_edge(k, j)))
        fail("max-condition requested at an interior vertex");
    return {k, j};
}

std::vector<std::vector<int>> TPolygon::boundary_components() const {
    std::map<int, std::pair<int, int>> depart;
    for (int k = 0; k < num_triangles(); ++k)
        for (int j = 0; j < 3; ++j)
            if (mesh.is_boundary_edge(mesh.tris[k].edges[j]))
                depart[mesh.tris[k].verts[j]] = {k, j};
    std::vector<std::vector<int>> comps;
    std::set<int> seen;
    for (const auto& [v, use] : depart) {
        (void)use;
        if (seen.count(v)) continue;
        std::vector<int> comp;
        int cur = v;
        while (!seen.count(cur)) {
            seen.insert(cur);
            comp.push_back(cur);
            auto [k, j] = depart.at(cur);
            cur = mesh.tris[k].verts[(j + 1) % 3];
        }
        comps.push_back(comp);
    }
    return comps;
}

void TPolygon::check_invariants() const {
    int di = static_cast<int>(diagonal_incident_vertices().size());
    if (di != num_triangles())
        fail("polygon invariant broken: " + std::to_string(num_triangles()) + " triangles vs " +
             std::to_string(di) + " diagonal-incident vertices");
    size_t comps = boundary_components().size();
    if (shape == Shape::polygon && comps != 1) fail("polygon must have one boundary component");
    if (shape == Shape::annulus && comps != 2) fail("annulus must have two boundary components");
    for (size_t i = 0; i + 1 < tau.size(); ++i) {
        bool share = false;
        for (const auto& t : mesh.tris) {
            bool a = std::count(t.edges.begin(), t.edges.end(), tau[i]) > 0;
            bool b = std::count(t.edges.begin(), t.edges.end(), tau[i + 1]) > 0;
            share |= (a && b && tau[i] != tau[i + 1]);
        }
        if (!share && tau[i] != tau[i + 1])
            fail("consecutive strip diagonals do not share a triangle");
    }
}

TPolygon build_plain(const Triangulation& t, const ArcSpec& d) {
    d.validate(t);
    if (d.underlying_in_triangulation()) fail("build_plain: arc already in the triangulation");
    Triangulation ideal = t.to_ideal();
    auto visits = strip_visits(ideal, d);
    TPolygon tp = assemble(ideal, visits, chain_glues(0, visits.size() - 1, visits),
                           TPolygon::Shape::polygon);
    for (size_t i = 0; i + 1 < visits.size(); ++i)
        tp.tau.push_back(tp.mesh.tris[i].edges[visits[i].exit_slot]);
    tp.check_invariants();
    return tp;
}

TPolygon build_notched(const Triangulation& t, const ArcSpec& d0) {
    ArcSpec d = d0;
    d.validate(t);
    if (d.underlying_in_triangulation())
        fail("build_notched: underlying arc lies in the triangulation; use the loop polygons");
    if (d.kind == ArcSpec::Kind::plain) fail("build_notched: plain arc");
    if (d.kind == ArcSpec::Kind::notched1 && d.tags[0] == Tag::notched) d = d.reversed();
    for (int s = 0; s < 2; ++s)
        if (d.tags[s] == Tag::notched)
            for (const auto& a : t.arcs)
                if (a.notched() && a.notched_end() == d.endpoints[s])
                    fail("1-notched arc of T at a notched endpoint; normalize tags first");

    Triangulation ideal = t.to_ideal();
    auto visits = strip_visits(ideal, d);
    int n = static_cast<int>(d.arcs.size());
    std::vector<Glue> glues = chain_glues(0, n, visits);

    // Fan attached at the last strip triangle, closed around the puncture.
    int jp = (visits[n].enter_slot + 2) % 3;
    auto cp = fan_corners(ideal, visits[n].tri, jp);
    int m = static_cast<int>(cp.size());
    if (m < 2) fail("notched endpoint sits inside a self-folded triangle; normalize tags first");
    visits[n].exit_slot = (jp + 2) % 3;
    int fan_p_first = static_cast<int>(visits.size());
    for (int j = 1; j < m; ++j) {
        auto [tri, c] = cp[j];
        glues.push_back({static_cast<int>(visits.size()) - 1,
                         visits.back().exit_slot >= 0 && j > 1 ? visits.back().exit_slot
                                                               : visits[n].exit_slot,
                         static_cast<int>(visits.size()), c});
        visits.push_back({tri, c, (c + 2) % 3});
    }
    glues.push_back({static_cast<int>(visits.size()) - 1, visits.back().exit_slot, n, jp});

    // Second fan for a 2-notched arc, attached at the first strip triangle.
    int jq = -1, fan_q_first = -1, ell = 0;
    if (d.kind == ArcSpec::Kind::notched2) {
        jq = (visits[0].exit_slot + 2) % 3;
        auto cq = fan_corners(ideal, visits[0].tri, jq);
        ell = static_cast<int>(cq.size());
        if (ell < 2) fail("notched endpoint sits inside a self-folded triangle; normalize first");
        fan_q_first = static_cast<int>(visits.size());
        for (int j = 1; j < ell; ++j) {
            auto [tri, c] = cq[j];
            int prev_copy = (j == 1) ? 0 : static_cast<int>(visits.size()) - 1;
            int prev_slot = (j == 1) ? (jq + 2) % 3 : visits.back().exit_slot;
            glues.push_back({prev_copy, prev_slot, static_cast<int>(visits.size()), c});
            visits.push_back({tri, c, (c + 2) % 3});
        }
        glues.push_back({static_cast<int>(visits.size()) - 1, visits.back().exit_slot, 0, jq});
    }

    TPolygon tp = assemble(ideal, visits, glues, TPolygon::Shape::polygon);
    for (int i = 0; i < n; ++i) tp.tau.push_back(tp.mesh.tris[i].edges[visits[i].exit_slot]);

    tp.fan_p.push_back(tp.mesh.tris[n].edges[visits[n].exit_slot]);
    for (int j = 0; j < m - 1; ++j)
        tp.fan_p.push_back(tp.mesh.tris[fan_p_first + j].edges[visits[fan_p_first + j].exit_slot]);
    // zeta_m is the closing edge, already collected as the last fan copy's exit.
    tp.puncture_p = tp.mesh.tris[n].verts[jp];

    if (d.kind == ArcSpec::Kind::notched2) {
        tp.fan_q.push_back(tp.mesh.tris[0].edges[(jq + 2) % 3]);
        for (int j = 0; j < ell - 1; ++j)
            tp.fan_q.push_back(
                tp.mesh.tris[fan_q_first + j].edges[visits[fan_q_first + j].exit_slot]);
        tp.puncture_q = tp.mesh.tris[0].verts[jq];
        if (n == 1) {
            // Four-angle rule data: the angles of zeta_m and xi_ell away from
            // their punctures.
            for (int e : {tp.fan_p.back(), tp.fan_q.back()}) {
                int pv = (e == tp.fan_p.back()) ? tp.puncture_p : tp.puncture_q;
                for (const auto& use : tp.mesh.edge_uses.at(e)) {
                    Angle out_corner{use.tri, use.slot};
                    Angle in_corner{use.tri, (use.slot + 1) % 3};
                    if (tp.angle_vertex(out_corner) != pv) tp.special_angles.push_back(out_corner);
                    if (tp.angle_vertex(in_corner) != pv) tp.special_angles.push_back(in_corner);
                }
            }
        }
    }
    tp.check_invariants();
    return tp;
}

TPolygon build_annulus(const Triangulation& t, const LoopSpec& z) {
    z.validate(t);
    Triangulation ideal = t.to_ideal();
    int n = static_cast<int>(z.arcs.size());
    std::vector<Visit> visits;
    for (int i = 0; i < n; ++i) visits.push_back({z.triangles[i], -1, -1});
    visits[0].exit_slot = first_slot_with(ideal.mesh.tris[visits[0].tri], z.arcs[1 % n]);
    for (int i = 1; i < n; ++i) {
        auto p = ideal.mesh.partner({visits[i - 1].tri, visits[i - 1].exit_slot});
        if (!p || p->tri != visits[i].tri) fail("cyclic crossing data inconsistent");
        visits[i].enter_slot = p->slot;
        visits[i].exit_slot =
            first_slot_with(ideal.mesh.tris[visits[i].tri], z.arcs[(i + 1) % n], p->slot);
    }
    auto close = ideal.mesh.partner({visits[n - 1].tri, visits[n - 1].exit_slot});
    if (!close || close->tri != visits[0].tri) fail("cyclic crossing data does not close");
    if (close->slot == visits[0].exit_slot) fail("loop exits and re-enters through one use");
    auto glues = chain_glues(0, n - 1, visits);
    glues.push_back({n - 1, visits[n - 1].exit_slot, 0, close->slot});
    TPolygon tp = assemble(ideal, visits, glues, TPolygon::Shape::annulus);
    // tau[i] carries the i-th cyclic crossing; the closing edge is arcs[0].
    tp.tau.push_back(tp.mesh.tris[n - 1].edges[visits[n - 1].exit_slot]);
    for (int i = 0; i + 1 < n; ++i) tp.tau.push_back(tp.mesh.tris[i].edges[visits[i].exit_slot]);
    tp.check_invariants();
    return tp;
}

std::pair<std::vector<int>, std::vector<int>> loop_crossings(const Triangulation& t, int base_arc,
                                                             int s) {
    if (!t.is_puncture(s)) fail("loop_crossings: s must be a puncture");
    Triangulation ideal = t.to_ideal();
    const Arc& base = ideal.arc(base_arc);
    if (base.ends[0] == base.ends[1])
        fail("loop_crossings: base arc is a loop; supply explicit crossing data");
    if (base.ends[0] != s && base.ends[1] != s) fail("loop_crossings: base arc not incident to s");

    std::pair<int, int> start{-1, -1};
    for (int k = 0; k < static_cast<int>(ideal.mesh.tris.size()) && start.first < 0; ++k)
        for (int j = 0; j < 3; ++j)
            if (ideal.mesh.tris[k].verts[j] == s && ideal.mesh.tris[k].edges[j] == base_arc) {
                start = {k, j};
                break;
            }
    if (start.first < 0) fail("loop_crossings: no corner at s along the base arc");

    auto corners = fan_corners(ideal, start.first, start.second);
    if (corners.size() < 2) fail("loop_crossings: degenerate fan around s");
    std::vector<int> tris, arcs;
    for (size_t i = 0; i < corners.size(); ++i) {
        tris.push_back(corners[i].first);
        if (i + 1 < corners.size())
            arcs.push_back(ideal.mesh.corner_in_edge(corners[i].first, corners[i].second));
    }
    return {tris, arcs};
}

TPolygon build_loop_polygon(const Triangulation& t, int base_arc, int s) {
    auto [tris, arcs] = loop_crossings(t, base_arc, s);
    ArcSpec loop;
    loop.kind = ArcSpec::Kind::plain;
    const Arc& base = t.arc(base_arc);
    int r = base.ends[0] == s ? base.ends[1] : base.ends[0];
    loop.endpoints = {r, r};
    loop.triangles = tris;
    loop.arcs = arcs;
    return build_plain(t, loop);
}

TPolygon build_notched_loop_polygon(const Triangulation& t, const ArcSpec& d0, int at_end) {
    ArcSpec d = d0;
    d.validate(t);
    if (at_end == 0) d = d.reversed();
    if (d.tags[1] != Tag::notched) fail("selected endpoint is not notched");
    Triangulation ideal = t.to_ideal();

    auto strip = strip_visits(ideal, d);
    int n = static_cast<int>(d.arcs.size());
    int jp = (strip[n].enter_slot + 2) % 3;
    auto cp = fan_corners(ideal, strip[n].tri, jp);
    int m = static_cast<int>(cp.size());
    if (m < 2) fail("notched endpoint sits inside a self-folded triangle; normalize tags first");

    std::vector<Visit> visits(strip.begin(), strip.end());
    visits[n].exit_slot = (jp + 2) % 3;
    for (int j = 1; j < m; ++j) {
        auto [tri, c] = cp[j];
        visits.push_back({tri, c, (c + 2) % 3});
    }
    // Second pass through the anchor triangle: enter through its remaining
    // puncture-side use, leave through the strip's last crossing again.
    visits.push_back({strip[n].tri, jp, strip[n].enter_slot});
    // Mirrored strip, resolved by the partner walk.
    for (int i = n - 1; i >= 0; --i) {
        Visit v{strip[i].tri, -1, -1};
        const Visit& prev = visits.back();
        auto p = ideal.mesh.partner({prev.tri, prev.exit_slot});
        if (!p || p->tri != v.tri) fail("mirrored strip walk inconsistent");
        v.enter_slot = p->slot;
        if (i > 0) {
            int arc = ideal.mesh.tris[strip[i].tri].edges[strip[i].enter_slot];
            v.exit_slot = first_slot_with(ideal.mesh.tris[v.tri], arc, v.enter_slot);
        }
        visits.push_back(v);
    }

    TPolygon tp = assemble(ideal, visits, chain_glues(0, visits.size() - 1, visits),
                           TPolygon::Shape::polygon);
    for (size_t i = 0; i + 1 < visits.size(); ++i)
        tp.tau.push_back(tp.mesh.tris[i].edges[visits[i].exit_slot]);
    for (int j = 0; j < m; ++j) tp.fan_p.push_back(tp.tau[n + j]);
    tp.puncture_p = tp.mesh.tris[n].verts[jp];
    tp.check_invariants();
    return tp;
}

}  // namespace clexp
