#include "clexp/bipartite.hpp"

#include <algorithm>
#include <set>

namespace clexp {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SurfaceError(msg); }

}  // namespace

std::vector<std::pair<int, int>> BipartiteGraph::matching_edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : edges) out.emplace_back(e.black, nblack + e.white);
    return out;
}

int BipartiteGraph::edge_of_angle(const Angle& a) const {
    for (const auto& e : edges)
        if (e.angle == a) return e.id;
    fail("angle has no bipartite edge");
}

BipartiteGraph build_bipartite(const TPolygon& tp) {
    BipartiteGraph b;
    b.nvars = tp.nvars;
    std::map<int, int> black_index;
    for (int v : tp.diagonal_incident_vertices()) {
        black_index[v] = b.nblack++;
        b.black_ids.push_back(v);
    }
    b.nwhite = tp.num_triangles();
    for (int d : tp.diagonals()) {
        b.square_index[d] = static_cast<int>(b.squares.size());
        b.squares.push_back(d);
    }
    for (const Angle& a : tp.angles_at_diagonals()) {
        BipartiteGraph::Edge e;
        e.id = static_cast<int>(b.edges.size());
        e.black = black_index.at(tp.angle_vertex(a));
        e.white = a.tri;
        e.label = tp.edge(tp.opposite_edge(a)).label;
        e.angle = a;
        // The squares on either side of this edge are the diagonals of the
        // angle's triangle that end at the angle's vertex.
        int fi = 0;
        auto [s1, s2] = tp.angle_sides(a);
        for (int s : {s1, s2})
            if (tp.is_diagonal(s)) e.faces[fi++] = b.square_index.at(s);
        b.edges.push_back(e);
    }
    return b;
}

int varpi(const BipartiteGraph& b, const Angle& a) { return b.edge_of_angle(a); }

Angle varpi_inv(const BipartiteGraph& b, int edge) { return b.edges.at(edge).angle; }

std::vector<PerfectMatching> enumerate_bipartite_pm(const BipartiteGraph& b) {
    return all_perfect_matchings(b.nblack + b.nwhite, b.matching_edges());
}

PerfectMatching bipartite_minimal(const BipartiteGraph& b, const AngleMatching& minimal) {
    PerfectMatching out;
    for (const Angle& a : minimal) out.push_back(b.edge_of_angle(a));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> squares_of(const BipartiteGraph& b, const PerfectMatching& e,
                            const PerfectMatching& minimal) {
    std::set<int> d(minimal.begin(), minimal.end());
    for (int x : e) {
        if (d.count(x))
            d.erase(x);
        else
            d.insert(x);
    }
    int nf = static_cast<int>(b.squares.size()) + 1;
    std::vector<int> color(nf, -1);
    color[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (const auto& ed : b.edges) {
            int a = ed.faces[0] + 1, c = ed.faces[1] + 1;
            if (a != f && c != f) continue;
            int o = a == f ? c : a;
            int want = color[f] ^ (d.count(ed.id) ? 1 : 0);
            if (color[o] < 0) {
                color[o] = want;
                stack.push_back(o);
            } else if (color[o] != want) {
                fail("square-boundary decomposition failed");
            }
        }
    }
    std::vector<int> out;
    for (size_t i = 0; i < b.squares.size(); ++i)
        if (color[1 + i] == 1) out.push_back(b.squares[i]);
    std::sort(out.begin(), out.end());
    return out;
}

bool check_square_boundary_decomposition(const BipartiteGraph& b, const PerfectMatching& e,
                                         const PerfectMatching& minimal) {
    std::set<int> d(minimal.begin(), minimal.end());
    for (int x : e) {
        if (d.count(x))
            d.erase(x);
        else
            d.insert(x);
    }
    std::vector<int> sq = squares_of(b, e, minimal);
    std::set<int> inside;
    for (int s : sq) inside.insert(b.square_index.at(s));
    std::set<int> boundary;
    for (const auto& ed : b.edges) {
        bool a = ed.faces[0] >= 0 && inside.count(ed.faces[0]);
        bool c = ed.faces[1] >= 0 && inside.count(ed.faces[1]);
        if (a != c) boundary.insert(ed.id);
    }
    return boundary == d;
}

}  // namespace clexp
