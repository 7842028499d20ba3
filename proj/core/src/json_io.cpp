#include "clexp/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace clexp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw SurfaceError("json: " + msg); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Tag tag_from(const std::string& s) {
    if (s == "plain") return Tag::plain;
    if (s == "notched") return Tag::notched;
    fail("unknown tag '" + s + "'");
}

// Derive the vertex cycle of a triangle from its edge endpoints when this is
// unambiguous; degenerate triangles must spell the cycle out.
std::array<int, 3> derive_verts(const std::array<int, 3>& edges,
                                const std::map<int, std::array<int, 2>>& ends, bool self_folded) {
    auto e = [&](int id) {
        auto it = ends.find(id);
        if (it == ends.end()) fail("triangle references unknown edge " + std::to_string(id));
        return it->second;
    };
    if (self_folded) {
        // Canonical cycle (loop o->o, radius o->p, radius p->o).
        int loop = -1, radius = -1;
        for (int x : edges) {
            int cnt = 0;
            for (int y : edges) cnt += (x == y);
            (cnt == 2 ? radius : loop) = x;
        }
        if (loop < 0 || radius < 0) fail("self-folded triangle must repeat its radius");
        auto le = e(loop), re = e(radius);
        if (le[0] != le[1]) fail("self-folded loop side must be a loop edge");
        int o = le[0];
        int p = re[0] == o ? re[1] : re[0];
        if (edges != std::array<int, 3>{loop, radius, radius})
            fail("self-folded triangle must list the loop first");
        return {o, o, p};
    }
    std::array<int, 3> v{};
    for (int j = 0; j < 3; ++j) {
        auto prev = e(edges[(j + 2) % 3]);
        auto cur = e(edges[j]);
        if (prev[0] == prev[1] || cur[0] == cur[1])
            fail("triangle with a loop side needs explicit verts");
        int shared = -1, count = 0;
        for (int a : prev)
            for (int b : cur)
                if (a == b && a != shared) {
                    shared = a;
                    ++count;
                }
        if (count != 1) fail("ambiguous triangle orientation; specify verts");
        v[j] = shared;
    }
    return v;
}

}  // namespace

Triangulation surface_from_json(const std::string& text) {
    json j = json::parse(text);
    Triangulation t;
    std::map<int, std::array<int, 2>> ends;
    for (const auto& a : j.at("arcs")) {
        Arc arc;
        arc.id = a.at("id").get<int>();
        arc.ends = {a.at("ends")[0].get<int>(), a.at("ends")[1].get<int>()};
        if (a.contains("tags"))
            arc.tags = {tag_from(a["tags"][0]), tag_from(a["tags"][1])};
        t.arcs.push_back(arc);
    }
    std::sort(t.arcs.begin(), t.arcs.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
    for (const auto& b : j.value("boundary", json::array())) {
        BoundarySegment seg;
        seg.id = b.at("id").get<int>();
        seg.ends = {b.at("ends")[0].get<int>(), b.at("ends")[1].get<int>()};
        t.boundary.push_back(seg);
    }
    for (int p : j.value("punctures", json::array())) t.punctures.insert(p);

    // Ideal endpoints: the loop of a 1-notched arc is based at its radius's
    // far end.
    for (const auto& a : t.arcs) ends[a.id] = a.ends;
    for (const auto& b : t.boundary) ends[b.id] = b.ends;
    for (const auto& tr : j.at("triangles")) {
        Triangle tri;
        tri.self_folded = tr.value("self_folded", false);
        for (int k = 0; k < 3; ++k) tri.edges[k] = tr.at("edges")[k].get<int>();
        if (tri.self_folded) {
            // Rewrite the notched arc's endpoints to the ideal loop.
            int loop = -1, radius = -1;
            for (int x : tri.edges) {
                int cnt = 0;
                for (int y : tri.edges) cnt += (x == y);
                (cnt == 2 ? radius : loop) = x;
            }
            auto re = ends.at(radius);
            auto le = ends.at(loop);
            int p = -1;
            for (int cand : le)
                if (cand == re[0] || cand == re[1]) p = cand == re[0] ? re[1] : re[0];
            int o = p == re[0] ? re[1] : re[0];
            ends[loop] = {o, o};
        }
        if (tr.contains("verts"))
            for (int k = 0; k < 3; ++k) tri.verts[k] = tr.at("verts")[k].get<int>();
        else
            tri.verts = derive_verts(tri.edges, ends, tri.self_folded);
        t.mesh.tris.push_back(tri);
    }
    t.mesh.index();
    t.validate();
    return t;
}

Triangulation surface_from_file(const std::string& path) {
    return surface_from_json(slurp(path));
}

ArcSpec arc_from_json(const std::string& text) {
    json j = json::parse(text);
    ArcSpec d;
    std::string kind = j.value("kind", "plain");
    if (kind == "plain")
        d.kind = ArcSpec::Kind::plain;
    else if (kind == "notched1")
        d.kind = ArcSpec::Kind::notched1;
    else if (kind == "notched2")
        d.kind = ArcSpec::Kind::notched2;
    else
        fail("unknown arc kind '" + kind + "'");
    if (j.contains("endpoints"))
        d.endpoints = {j["endpoints"][0].get<int>(), j["endpoints"][1].get<int>()};
    if (j.contains("tags"))
        d.tags = {tag_from(j["tags"][0]), tag_from(j["tags"][1])};
    else if (d.kind == ArcSpec::Kind::notched2)
        d.tags = {Tag::notched, Tag::notched};
    else if (d.kind == ArcSpec::Kind::notched1)
        fail("notched1 arcs must carry tags");
    if (j.contains("base_arc")) d.base_arc = j["base_arc"].get<int>();
    if (j.contains("triangles"))
        for (int x : j["triangles"]) d.triangles.push_back(x);
    if (j.contains("arcs"))
        for (int x : j["arcs"]) d.arcs.push_back(x);
    return d;
}

ArcSpec arc_from_file(const std::string& path) { return arc_from_json(slurp(path)); }

LoopSpec loop_from_json(const std::string& text) {
    json j = json::parse(text);
    LoopSpec z;
    for (int x : j.at("triangles")) z.triangles.push_back(x);
    for (int x : j.at("arcs")) z.arcs.push_back(x);
    return z;
}

LoopSpec loop_from_file(const std::string& path) { return loop_from_json(slurp(path)); }

std::string polygon_to_json(const TPolygon& tp) {
    json j;
    j["shape"] = tp.shape == TPolygon::Shape::polygon ? "polygon" : "annulus";
    j["triangles"] = json::array();
    for (int k = 0; k < tp.num_triangles(); ++k) {
        json tri;
        tri["edges"] = tp.mesh.tris[k].edges;
        tri["verts"] = tp.mesh.tris[k].verts;
        j["triangles"].push_back(tri);
    }
    j["edges"] = json::array();
    for (const auto& e : tp.edges) {
        json je;
        je["id"] = e.id;
        je["label"] = e.label;
        je["diagonal"] = e.diagonal;
        j["edges"].push_back(je);
    }
    j["tau"] = tp.tau;
    if (!tp.fan_p.empty()) j["fan_p"] = tp.fan_p;
    if (!tp.fan_q.empty()) j["fan_q"] = tp.fan_q;
    j["vertices"] = tp.mesh.vertex_ids();
    return j.dump(2);
}

std::string snake_to_dot(const SnakeGraph& g) {
    std::ostringstream out;
    out << "graph snake {\n  node [shape=point];\n";
    for (const auto& e : g.edges) {
        out << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.label << "\"";
        if (e.diag) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string quiver_to_dot(const QuiverPotential& qp, const TPolygon& tp) {
    std::ostringstream out;
    out << "digraph quiver {\n";
    for (const auto& e : tp.edges)
        out << "  e" << e.id << " [label=\"" << (e.label > 0 ? std::to_string(e.label) : "-")
            << "\"];\n";
    for (const auto& a : qp.arrows) {
        out << "  e" << a.from << " -> e" << a.to;
        if (a.boundary_arrow) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace clexp
