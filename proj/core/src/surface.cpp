#include "clexp/surface.hpp"

#include <algorithm>
#include <sstream>

namespace clexp {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SurfaceError(msg); }

}  // namespace

int Arc::notched_end() const {
    if (tags[0] == Tag::notched && tags[1] == Tag::plain) return ends[0];
    if (tags[1] == Tag::notched && tags[0] == Tag::plain) return ends[1];
    fail("arc is not 1-notched");
}

void TriMesh::index() {
    edge_uses.clear();
    for (int k = 0; k < static_cast<int>(tris.size()); ++k)
        for (int j = 0; j < 3; ++j) edge_uses[tris[k].edges[j]].push_back({k, j});
}

bool TriMesh::is_boundary_edge(int e) const {
    auto it = edge_uses.find(e);
    return it != edge_uses.end() && it->second.size() == 1;
}

std::optional<EdgeUse> TriMesh::partner(const EdgeUse& u) const {
    const auto& uses = edge_uses.at(tris[u.tri].edges[u.slot]);
    for (const auto& w : uses)
        if (!(w == u)) return w;
    return std::nullopt;
}

std::optional<std::pair<int, int>> TriMesh::next_corner_ccw(int tri, int j) const {
    auto p = partner(corner_in_use(tri, j));
    if (!p) return std::nullopt;
    // p is the use of the incoming edge in the neighbouring triangle, where it
    // is outgoing at the same vertex; the corner index equals the slot.
    return std::make_pair(p->tri, p->slot);
}

std::optional<std::pair<int, int>> TriMesh::prev_corner_ccw(int tri, int j) const {
    auto p = partner(corner_out_use(tri, j));
    if (!p) return std::nullopt;
    // In the neighbouring triangle the outgoing edge is incoming at the same
    // vertex; the corner sits two slots further.
    return std::make_pair(p->tri, (p->slot + 1) % 3);
}

std::vector<std::pair<int, int>> TriMesh::corners_at(int v) const {
    std::vector<std::pair<int, int>> all;
    for (int k = 0; k < static_cast<int>(tris.size()); ++k)
        for (int j = 0; j < 3; ++j)
            if (tris[k].verts[j] == v) all.emplace_back(k, j);
    if (all.empty()) return all;

    // Find a start corner: one without a counterclockwise predecessor, or the
    // smallest corner of the interior cycle.
    std::pair<int, int> start = *std::min_element(all.begin(), all.end());
    for (const auto& c : all) {
        if (!prev_corner_ccw(c.first, c.second)) {
            start = c;
            break;
        }
    }
    std::vector<std::pair<int, int>> chain;
    auto cur = start;
    for (size_t i = 0; i < all.size(); ++i) {
        chain.push_back(cur);
        auto nxt = next_corner_ccw(cur.first, cur.second);
        if (!nxt || *nxt == start) break;
        cur = *nxt;
    }
    if (chain.size() != all.size()) fail("vertex link is not a single chain");
    return chain;
}

std::vector<int> TriMesh::vertex_ids() const {
    std::set<int> vs;
    for (const auto& t : tris)
        for (int v : t.verts) vs.insert(v);
    return {vs.begin(), vs.end()};
}

bool TriMesh::vertex_on_boundary(int v) const {
    for (int k = 0; k < static_cast<int>(tris.size()); ++k)
        for (int j = 0; j < 3; ++j)
            if (tris[k].verts[j] == v && (is_boundary_edge(corner_in_edge(k, j)) ||
                                          is_boundary_edge(corner_out_edge(k, j))))
                return true;
    return false;
}

const Arc& Triangulation::arc(int id) const {
    if (!is_arc(id)) fail("unknown arc id " + std::to_string(id));
    return arcs[id - 1];
}

int Triangulation::loop_of_radius(int arc_id) const {
    for (const auto& t : mesh.tris) {
        if (!t.self_folded) continue;
        int loop = -1, radius = -1;
        for (int e : t.edges) {
            int cnt = static_cast<int>(std::count(t.edges.begin(), t.edges.end(), e));
            (cnt == 2 ? radius : loop) = e;
        }
        if (radius == arc_id) return loop;
    }
    return 0;
}

int Triangulation::radius_of_loop(int arc_id) const {
    for (const auto& t : mesh.tris) {
        if (!t.self_folded) continue;
        int loop = -1, radius = -1;
        for (int e : t.edges) {
            int cnt = static_cast<int>(std::count(t.edges.begin(), t.edges.end(), e));
            (cnt == 2 ? radius : loop) = e;
        }
        if (loop == arc_id) return radius;
    }
    return 0;
}

int Triangulation::enclosed_puncture(int loop_arc) const {
    int r = radius_of_loop(loop_arc);
    if (r == 0) return -1;
    const Arc& radius = arc(r);
    const Arc& loop = arc(loop_arc);
    // The radius runs from the loop's base point to the enclosed puncture.
    int base = loop.ends[0];
    return radius.ends[0] == base ? radius.ends[1] : radius.ends[0];
}

void Triangulation::check_self_folded() const {
    for (const auto& t : mesh.tris) {
        int rep = 0;
        for (int e : t.edges)
            rep = std::max(rep, static_cast<int>(std::count(t.edges.begin(), t.edges.end(), e)));
        if (t.self_folded && rep != 2) fail("self-folded triangle must repeat its radius");
        if (!t.self_folded && rep != 1) fail("non-self-folded triangle has a repeated edge");
    }
}

void Triangulation::validate() const {
    for (int i = 0; i < num_arcs(); ++i)
        if (arcs[i].id != i + 1) fail("arc ids must be 1..N in order");
    for (const auto& b : boundary)
        if (is_arc(b.id)) fail("boundary segment id collides with an arc id");
    check_self_folded();

    for (const auto& a : arcs) {
        auto it = mesh.edge_uses.find(a.id);
        if (it == mesh.edge_uses.end() || it->second.size() != 2)
            fail("arc " + std::to_string(a.id) + " must lie in exactly two triangle sides");
    }
    for (const auto& b : boundary) {
        auto it = mesh.edge_uses.find(b.id);
        if (it == mesh.edge_uses.end() || it->second.size() != 1)
            fail("boundary segment " + std::to_string(b.id) + " must lie in exactly one triangle");
    }
    for (const auto& [e, uses] : mesh.edge_uses) {
        if (!is_arc(e)) {
            bool known = false;
            for (const auto& b : boundary) known |= (b.id == e);
            if (!known) fail("triangle references unknown edge " + std::to_string(e));
        }
        if (uses.size() > 2) fail("edge " + std::to_string(e) + " used more than twice");
    }

    // Orientation consistency: the two uses of an arc traverse it in opposite
    // directions (loops are exempt, their direction is not endpoint-visible).
    for (const auto& [e, uses] : mesh.edge_uses) {
        if (uses.size() != 2) continue;
        auto dir = [&](const EdgeUse& u) {
            const Triangle& t = mesh.tris[u.tri];
            return std::make_pair(t.verts[u.slot], t.verts[(u.slot + 1) % 3]);
        };
        auto [a0, a1] = dir(uses[0]);
        auto [b0, b1] = dir(uses[1]);
        if (a0 == a1) continue;
        if (!(a0 == b1 && a1 == b0))
            fail("edge " + std::to_string(e) + " is not glued orientation-consistently");
    }

    // Tag sanity and the standing assumption: at most one 1-notched arc per
    // puncture, always realised as the loop of a self-folded triangle.
    std::map<int, int> notched_at;
    for (const auto& a : arcs) {
        for (int s = 0; s < 2; ++s) {
            if (a.tags[s] != Tag::notched) continue;
            if (!is_puncture(a.ends[s])) fail("notched tag at a boundary endpoint");
            if (++notched_at[a.ends[s]] > 1)
                fail("two 1-notched arcs at one puncture");
        }
        if (a.tags[0] == Tag::notched && a.tags[1] == Tag::notched)
            fail("2-notched arcs are not allowed in the initial triangulation");
        if (a.notched()) {
            if (radius_of_loop(a.id) == 0)
                fail("1-notched arc " + std::to_string(a.id) +
                     " has no self-folded triangle realising it");
        }
    }
    for (const auto& t : mesh.tris) {
        if (!t.self_folded) continue;
        int loop = -1;
        for (int e : t.edges)
            if (std::count(t.edges.begin(), t.edges.end(), e) == 1) loop = e;
        if (!is_arc(loop) || !arc(loop).notched())
            fail("self-folded loop must carry the 1-notched arc id");
    }
}

Triangulation Triangulation::to_ideal() const {
    validate();
    Triangulation ideal = *this;
    for (auto& a : ideal.arcs) {
        if (!a.notched()) continue;
        int r = radius_of_loop(a.id);
        const Arc& radius = arc(r);
        int p = a.notched_end();
        int base = radius.ends[0] == p ? radius.ends[1] : radius.ends[0];
        a.ends = {base, base};
        a.tags = {Tag::plain, Tag::plain};
    }
    return ideal;
}

std::vector<int> Triangulation::puncture_fan(int p) const {
    if (!is_puncture(p)) fail("puncture_fan: not a puncture");
    // Use the ideal endpoints: the loop of a self-folded triangle does not end
    // at the enclosed puncture.
    Triangulation ideal = to_ideal();
    auto corners = ideal.mesh.corners_at(p);
    if (corners.empty()) fail("puncture_fan: no incident triangle");
    std::vector<int> fan;
    for (auto [k, j] : corners) fan.push_back(ideal.mesh.corner_out_edge(k, j));
    return fan;
}

std::vector<std::vector<int>> Triangulation::exchange_matrix() const {
    int n = num_arcs();
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    // pi^{-1}: the loop of a self-folded triangle represents both the
    // 1-notched arc (itself) and its radius.
    std::map<int, std::vector<int>> preimage;
    for (const auto& a : arcs) {
        int loop = loop_of_radius(a.id);
        preimage[loop == 0 ? a.id : loop].push_back(a.id);
    }
    for (const auto& t : mesh.tris) {
        if (t.self_folded) continue;
        for (int j = 0; j < 3; ++j) {
            int u = t.edges[j], v = t.edges[(j + 1) % 3];
            if (!is_arc(u) || !is_arc(v)) continue;
            for (int i : preimage[u])
                for (int k : preimage[v]) {
                    // v follows u counterclockwise, so u follows v clockwise.
                    b[k - 1][i - 1] += 1;
                    b[i - 1][k - 1] -= 1;
                }
        }
    }
    return b;
}

int Triangulation::end_count(int arc_id, int s) const {
    const Arc& a = arc(arc_id);
    return (a.ends[0] == s ? 1 : 0) + (a.ends[1] == s ? 1 : 0);
}

void ArcSpec::validate(const Triangulation& t) const {
    if (underlying_in_triangulation()) {
        if (!triangles.empty() || !arcs.empty())
            fail("arc spec with base_arc must not carry crossing data");
        t.arc(base_arc);
        return;
    }
    if (triangles.size() != arcs.size() + 1) fail("crossing list sizes are inconsistent");
    if (arcs.empty()) fail("an arc not in T must cross at least one arc");
    for (size_t i = 0; i < arcs.size(); ++i) {
        if (!t.is_arc(arcs[i])) fail("crossed edge is not an arc");
        auto has_edge = [&](int tri, int e) {
            const auto& ed = t.mesh.tris[tri].edges;
            return std::count(ed.begin(), ed.end(), e) > 0;
        };
        if (triangles[i] < 0 || triangles[i] >= static_cast<int>(t.mesh.tris.size()) ||
            triangles[i + 1] < 0 || triangles[i + 1] >= static_cast<int>(t.mesh.tris.size()))
            fail("crossing references unknown triangle");
        if (!has_edge(triangles[i], arcs[i]) || !has_edge(triangles[i + 1], arcs[i]))
            fail("consecutive crossed triangles do not share the declared arc");
    }
    if (kind != Kind::plain) {
        int notched = (tags[0] == Tag::notched ? 1 : 0) + (tags[1] == Tag::notched ? 1 : 0);
        if (kind == Kind::notched1 && notched != 1) fail("notched1 arc needs exactly one notch");
        if (kind == Kind::notched2 && notched != 2) fail("notched2 arc needs two notches");
        for (int s = 0; s < 2; ++s)
            if (tags[s] == Tag::notched && !t.is_puncture(endpoints[s]))
                fail("notched end of the arc spec must be a puncture");
    }
}

ArcSpec ArcSpec::reversed() const {
    ArcSpec r = *this;
    std::reverse(r.triangles.begin(), r.triangles.end());
    std::reverse(r.arcs.begin(), r.arcs.end());
    std::swap(r.endpoints[0], r.endpoints[1]);
    std::swap(r.tags[0], r.tags[1]);
    return r;
}

void LoopSpec::validate(const Triangulation& t) const {
    if (arcs.size() != triangles.size() || arcs.size() < 2)
        fail("loop spec needs cyclic crossing data with at least two crossings");
    int n = static_cast<int>(arcs.size());
    for (int i = 0; i < n; ++i) {
        auto has_edge = [&](int tri, int e) {
            const auto& ed = t.mesh.tris[tri].edges;
            return std::count(ed.begin(), ed.end(), e) > 0;
        };
        if (!t.is_arc(arcs[i])) fail("loop crosses a non-arc edge");
        int before = triangles[(i + n - 1) % n];
        if (!has_edge(before, arcs[i]) || !has_edge(triangles[i], arcs[i]))
            fail("cyclic crossing data is inconsistent at position " + std::to_string(i));
    }
}

NormalizedInput normalize_tags(const Triangulation& t, const ArcSpec& d) {
    NormalizedInput out{t, d, {}};
    bool closed = t.boundary.empty();
    if (closed && t.punctures.size() == 1 &&
        (d.tags[0] == Tag::notched || d.tags[1] == Tag::notched))
        fail("notched arcs are excluded on a closed surface with one puncture");

    for (int s = 0; s < 2; ++s) {
        if (out.arc.tags[s] != Tag::notched) continue;
        int p = out.arc.endpoints[s];
        int loop = 0;
        for (const auto& a : out.triangulation.arcs)
            if (a.notched() && a.notched_end() == p) loop = a.id;
        if (loop == 0) continue;
        int radius = out.triangulation.radius_of_loop(loop);
        // Change all tags at p simultaneously: the loop and its radius swap
        // labels, delta's end at p becomes plain.
        for (auto& tri : out.triangulation.mesh.tris)
            for (auto& e : tri.edges) {
                if (e == loop)
                    e = radius;
                else if (e == radius)
                    e = loop;
            }
        std::swap(out.triangulation.arcs[loop - 1].ends,
                  out.triangulation.arcs[radius - 1].ends);
        std::swap(out.triangulation.arcs[loop - 1].tags,
                  out.triangulation.arcs[radius - 1].tags);
        for (auto& e : out.arc.arcs) {
            if (e == loop)
                e = radius;
            else if (e == radius)
                e = loop;
        }
        if (out.arc.base_arc == loop)
            out.arc.base_arc = radius;
        else if (out.arc.base_arc == radius)
            out.arc.base_arc = loop;
        out.arc.tags[s] = Tag::plain;
        out.relabeling.swaps.emplace_back(loop, radius);
        out.triangulation.mesh.index();
    }
    // Recompute the kind from the remaining tags.
    int notched = (out.arc.tags[0] == Tag::notched ? 1 : 0) +
                  (out.arc.tags[1] == Tag::notched ? 1 : 0);
    out.arc.kind = notched == 0   ? ArcSpec::Kind::plain
                   : notched == 1 ? ArcSpec::Kind::notched1
                                  : ArcSpec::Kind::notched2;
    out.triangulation.validate();
    return out;
}

}  // namespace clexp
