#include "clexp/qp.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace clexp {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SurfaceError(msg); }

}  // namespace

QuiverPotential build_qp(const TPolygon& tp) {
    QuiverPotential qp;
    qp.nvars = tp.nvars;

    // Triangle arrows: one per corner, rotating counterclockwise.
    for (int k = 0; k < tp.num_triangles(); ++k) {
        std::vector<int> cycle;
        for (int j = 0; j < 3; ++j) {
            QuiverPotential::Arrow a;
            a.id = static_cast<int>(qp.arrows.size());
            a.from = tp.mesh.tris[k].edges[j];
            a.to = tp.mesh.tris[k].edges[(j + 1) % 3];
            a.angle = {k, (j + 1) % 3};
            a.in_rho_image = tp.vertex_diagonal_incident(tp.angle_vertex(a.angle));
            qp.arrows.push_back(a);
            cycle.push_back(a.id);
        }
        qp.triangle_cycles.push_back(cycle);
    }

    // Boundary arrows between clockwise-consecutive boundary segments that do
    // not share a triangle, i.e. at diagonal-incident boundary vertices.
    std::map<int, int> boundary_arrow_at;
    for (int v : tp.diagonal_incident_vertices()) {
        if (!tp.mesh.vertex_on_boundary(v)) continue;
        auto corners = tp.mesh.corners_at(v);
        int start_edge = tp.mesh.corner_out_edge(corners.front().first, corners.front().second);
        int end_edge = tp.mesh.corner_in_edge(corners.back().first, corners.back().second);
        QuiverPotential::Arrow a;
        a.id = static_cast<int>(qp.arrows.size());
        a.from = start_edge;
        a.to = end_edge;
        a.boundary_arrow = true;
        qp.arrows.push_back(a);
        boundary_arrow_at[v] = a.id;
    }

    // Exterior cycles wind around the diagonal-incident vertices.
    for (int v : tp.diagonal_incident_vertices()) {
        std::vector<int> cycle;
        for (auto [k, j] : tp.mesh.corners_at(v)) cycle.push_back(3 * k + (j + 2) % 3);
        auto it = boundary_arrow_at.find(v);
        if (it != boundary_arrow_at.end()) cycle.push_back(it->second);
        qp.exterior_cycles.push_back(cycle);
    }
    if (qp.exterior_cycles.size() != qp.triangle_cycles.size())
        fail("triangle and exterior cycle counts differ");
    return qp;
}

bool is_cut(const QuiverPotential& qp, const Cut& c) {
    std::set<int> in(c.begin(), c.end());
    auto once = [&](const std::vector<int>& cycle) {
        int hits = 0;
        for (int a : cycle) hits += in.count(a) ? 1 : 0;
        return hits == 1;
    };
    for (const auto& cy : qp.triangle_cycles)
        if (!once(cy)) return false;
    for (const auto& cy : qp.exterior_cycles)
        if (!once(cy)) return false;
    return true;
}

std::vector<Cut> minimal_cuts(const QuiverPotential& qp) {
    std::vector<Cut> out;
    Cut cur;
    std::function<void(size_t)> rec = [&](size_t tri) {
        if (tri == qp.triangle_cycles.size()) {
            Cut c = cur;
            std::sort(c.begin(), c.end());
            if (is_cut(qp, c)) out.push_back(c);
            return;
        }
        for (int a : qp.triangle_cycles[tri]) {
            if (!qp.arrows[a].in_rho_image) continue;
            cur.push_back(a);
            rec(tri + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Cut> all_cuts(const QuiverPotential& qp) {
    std::vector<std::vector<int>> cycles = qp.triangle_cycles;
    cycles.insert(cycles.end(), qp.exterior_cycles.begin(), qp.exterior_cycles.end());
    std::vector<std::vector<int>> cycles_of_arrow(qp.arrows.size());
    for (size_t i = 0; i < cycles.size(); ++i)
        for (int a : cycles[i]) cycles_of_arrow[a].push_back(static_cast<int>(i));

    std::vector<Cut> out;
    std::vector<int> hits(cycles.size(), 0);
    Cut cur;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == cycles.size()) {
            Cut c = cur;
            std::sort(c.begin(), c.end());
            out.push_back(c);
            return;
        }
        if (hits[i] == 1) {
            rec(i + 1);
            return;
        }
        for (int a : cycles[i]) {
            bool clash = false;
            for (int cy : cycles_of_arrow[a]) clash = clash || hits[cy] >= 1;
            if (clash) continue;
            for (int cy : cycles_of_arrow[a]) ++hits[cy];
            cur.push_back(a);
            rec(i + 1);
            cur.pop_back();
            for (int cy : cycles_of_arrow[a]) --hits[cy];
        }
    };
    rec(0);
    return out;
}

int rho(const QuiverPotential& qp, const Angle& a) {
    int id = 3 * a.tri + (a.corner + 2) % 3;
    if (!(qp.arrows[id].angle == a)) fail("rho: arrow/angle indexing broken");
    return id;
}

AngleMatching rho_inv(const QuiverPotential& qp, const Cut& c) {
    AngleMatching out;
    for (int a : c) {
        if (qp.arrows[a].boundary_arrow) fail("rho_inv: boundary arrow in cut");
        out.push_back(qp.arrows[a].angle);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace clexp
