#pragma once

#include "clexp/surface.hpp"

#include <functional>
#include <random>
#include <vector>

namespace clexp::fixtures {

// Square with three punctures: ten arcs, one of them 1-notched, realised by a
// self-folded triangle. Triangle indices: 0 self-folded, 1..7 as listed.
inline Triangulation three_punctured_square() {
    Triangulation t;
    auto arc = [&](int id, int a, int b, Tag ta = Tag::plain, Tag tb = Tag::plain) {
        t.arcs.push_back({id, {a, b}, {ta, tb}});
    };
    arc(1, 1, 5);
    arc(2, 1, 5, Tag::plain, Tag::notched);
    arc(3, 1, 3);
    arc(4, 1, 6);
    arc(5, 2, 6);
    arc(6, 3, 6);
    arc(7, 2, 3);
    arc(8, 2, 7);
    arc(9, 4, 7);
    arc(10, 3, 7);
    t.boundary = {{101, {1, 2}}, {102, {2, 4}}, {103, {4, 3}}, {104, {1, 3}}};
    t.punctures = {5, 6, 7};
    auto tri = [&](std::array<int, 3> e, std::array<int, 3> v, bool sf = false) {
        t.mesh.tris.push_back({e, v, sf});
    };
    tri({2, 1, 1}, {1, 1, 5}, true);
    tri({104, 2, 3}, {3, 1, 1});
    tri({3, 4, 6}, {3, 1, 6});
    tri({101, 5, 4}, {1, 2, 6});
    tri({5, 7, 6}, {6, 2, 3});
    tri({8, 10, 7}, {2, 7, 3});
    tri({102, 9, 8}, {2, 4, 7});
    tri({103, 10, 9}, {4, 3, 7});
    t.mesh.index();
    t.validate();
    return t;
}

inline ArcSpec delta1() {
    ArcSpec d;
    d.kind = ArcSpec::Kind::plain;
    d.endpoints = {3, 6};
    d.triangles = {1, 0, 0, 1, 2};
    d.arcs = {2, 1, 2, 3};
    return d;
}

inline ArcSpec delta2() {
    ArcSpec d;
    d.kind = ArcSpec::Kind::notched1;
    d.endpoints = {5, 6};
    d.tags = {Tag::plain, Tag::notched};
    d.triangles = {0, 1, 2};
    d.arcs = {2, 3};
    return d;
}

inline ArcSpec delta3() {
    ArcSpec d;
    d.kind = ArcSpec::Kind::notched2;
    d.endpoints = {6, 7};
    d.tags = {Tag::notched, Tag::notched};
    d.triangles = {4, 5};
    d.arcs = {7};
    return d;
}

// Digon with one puncture: two arcs, two triangles.
inline Triangulation once_punctured_digon() {
    Triangulation t;
    t.arcs = {{1, {1, 3}, {Tag::plain, Tag::plain}}, {2, {2, 3}, {Tag::plain, Tag::plain}}};
    t.boundary = {{101, {2, 1}}, {102, {1, 2}}};
    t.punctures = {3};
    t.mesh.tris.push_back({{1, 2, 101}, {1, 3, 2}, false});
    t.mesh.tris.push_back({{102, 2, 1}, {1, 2, 3}, false});
    t.mesh.index();
    t.validate();
    return t;
}

// Monogon with two punctures: the smallest surface with an arc joining two
// punctures, used to settle the 2-notched branch against the oracle.
inline Triangulation twice_punctured_monogon() {
    Triangulation t;
    t.arcs = {{1, {1, 2}, {}}, {2, {2, 3}, {}}, {3, {1, 3}, {}}, {4, {1, 3}, {}}};
    t.boundary = {{101, {1, 1}}};
    t.punctures = {2, 3};
    t.mesh.tris.push_back({{3, 1, 2}, {3, 1, 2}, false});
    t.mesh.tris.push_back({{1, 4, 2}, {2, 1, 3}, false});
    t.mesh.tris.push_back({{4, 101, 3}, {3, 1, 1}, false});
    t.mesh.index();
    t.validate();
    return t;
}

// Digon with two punctures: second arbitration surface for the 2-notched
// branch of the exchange relation.
inline Triangulation twice_punctured_digon() {
    Triangulation t;
    t.arcs = {{1, {1, 3}, {}}, {2, {3, 4}, {}}, {3, {4, 2}, {}}, {4, {1, 4}, {}}, {5, {1, 4}, {}}};
    t.boundary = {{101, {2, 1}}, {102, {1, 2}}};
    t.punctures = {3, 4};
    t.mesh.tris.push_back({{1, 2, 4}, {1, 3, 4}, false});
    t.mesh.tris.push_back({{5, 2, 1}, {1, 4, 3}, false});
    t.mesh.tris.push_back({{4, 3, 101}, {1, 4, 2}, false});
    t.mesh.tris.push_back({{102, 3, 5}, {1, 2, 4}, false});
    t.mesh.index();
    t.validate();
    return t;
}

// Annulus with two marked points on each boundary component and its core
// loop, the running band-graph example.
inline Triangulation annulus_2_2() {
    Triangulation t;
    t.arcs = {{1, {2, 3}, {}}, {2, {1, 3}, {}}, {3, {2, 3}, {}}, {4, {2, 4}, {}}};
    t.boundary = {{101, {1, 2}}, {102, {2, 1}}, {103, {4, 3}}, {104, {3, 4}}};
    t.punctures = {};
    t.mesh.tris.push_back({{101, 1, 2}, {1, 2, 3}, false});
    t.mesh.tris.push_back({{102, 2, 3}, {2, 1, 3}, false});
    t.mesh.tris.push_back({{1, 4, 103}, {3, 2, 4}, false});
    t.mesh.tris.push_back({{3, 104, 4}, {2, 3, 4}, false});
    t.mesh.index();
    t.validate();
    return t;
}

inline LoopSpec annulus_core_loop() {
    LoopSpec z;
    z.arcs = {1, 4, 3, 2};
    z.triangles = {2, 3, 1, 0};
    return z;
}

// Torus with one puncture: every arc is a loop and both triangles carry the
// same cyclic side order.
inline Triangulation once_punctured_torus() {
    Triangulation t;
    t.arcs = {{1, {1, 1}, {}}, {2, {1, 1}, {}}, {3, {1, 1}, {}}};
    t.punctures = {1};
    t.mesh.tris.push_back({{1, 2, 3}, {1, 1, 1}, false});
    t.mesh.tris.push_back({{1, 2, 3}, {1, 1, 1}, false});
    t.mesh.index();
    t.validate();
    return t;
}

// Fan triangulation of a convex m-gon (type A_{m-3}): diagonals from corner 1.
inline Triangulation polygon_fan(int m) {
    Triangulation t;
    for (int k = 3; k < m; ++k) t.arcs.push_back({k - 2, {1, k}, {}});
    for (int i = 1; i <= m; ++i) t.boundary.push_back({100 + i, {i, i % m + 1}});
    auto side = [&](int a, int b) {
        // Edge id between corners a < b.
        if (b == a + 1) return 100 + a;
        if (a == 1 && b == m) return 100 + m;
        return a == 1 ? b - 2 : -1;
    };
    for (int k = 2; k < m; ++k)
        t.mesh.tris.push_back({{side(1, k), side(k, k + 1), side(1, k + 1)}, {1, k, k + 1}, false});
    t.mesh.index();
    t.validate();
    return t;
}

// Once-punctured m-gon triangulated by the m spokes.
inline Triangulation wheel(int m) {
    Triangulation t;
    int center = m + 1;
    for (int i = 1; i <= m; ++i) t.arcs.push_back({i, {i, center}, {}});
    for (int i = 1; i <= m; ++i) t.boundary.push_back({100 + i, {i, i % m + 1}});
    t.punctures = {center};
    for (int i = 1; i <= m; ++i) {
        int j = i % m + 1;
        t.mesh.tris.push_back({{100 + i, j, i}, {i, j, center}, false});
    }
    t.mesh.index();
    t.validate();
    return t;
}

// Plain spiral arc of the wheel from corner u crossing k spokes.
inline ArcSpec wheel_plain_arc(int m, int u, int k) {
    ArcSpec d;
    d.kind = ArcSpec::Kind::plain;
    auto corner = [&](int i) { return (i - 1 + 2 * m) % m + 1; };
    d.endpoints = {u, corner(u + k + 1)};
    for (int j = 0; j <= k; ++j) d.triangles.push_back(corner(u + j) - 1);
    for (int j = 1; j <= k; ++j) d.arcs.push_back(corner(u + j));
    return d;
}

// The spoke from corner u, notched at the puncture; its underlying arc lies
// in the triangulation.
inline ArcSpec wheel_spoke_notched(int m, int u) {
    (void)m;
    ArcSpec d;
    d.kind = ArcSpec::Kind::notched1;
    d.base_arc = u;
    d.tags = {Tag::plain, Tag::notched};
    return d;
}

// Once-punctured m-gon whose puncture is joined to corners 1..k only; the
// rest is fanned from corner 1. Gives notched arcs with fans of size k.
inline Triangulation crown(int m, int k) {
    Triangulation t;
    int P = m + 1;
    for (int i = 1; i <= k; ++i) t.arcs.push_back({i, {i, P}, {}});          // spokes
    for (int j = k; j < m; ++j) t.arcs.push_back({j + 1, {1, j}, {}});       // chords (1, j)
    // chord ids: (1,k) -> k+1, (1,k+1) -> k+2, ..., (1,m-1) -> m
    for (int i = 1; i <= m; ++i) t.boundary.push_back({100 + i, {i, i % m + 1}});
    t.punctures = {P};
    for (int i = 1; i < k; ++i)
        t.mesh.tris.push_back({{100 + i, i + 1, i}, {i, i + 1, P}, false});  // sectors
    t.mesh.tris.push_back({{1, k, k + 1}, {1, P, k}, false});               // closing sector
    for (int j = k; j < m; ++j) {
        int left = j + 1;                                   // chord (1, j)
        int right = (j + 1 == m) ? 100 + m : j + 2;         // chord (1, j+1) or boundary
        t.mesh.tris.push_back({{left, 100 + j, right}, {1, j, j + 1}, false});
    }
    t.mesh.index();
    t.validate();
    return t;
}

// Arc of the crown from corner u (k < u <= m) to the puncture, notched there.
inline ArcSpec crown_arc(int m, int k, int u) {
    ArcSpec d;
    d.kind = ArcSpec::Kind::notched1;
    d.endpoints = {u, m + 1};
    d.tags = {Tag::plain, Tag::notched};
    int sectors = k;  // triangle indices 0..k-1 are the puncture sectors
    // outer fan triangle (1, j, j+1) sits at index sectors + (j - k)
    for (int j = u - 1; j >= k; --j) {
        d.triangles.push_back(sectors + (j - k));
        d.arcs.push_back(j + 1);  // chord (1, j)
    }
    d.triangles.push_back(k - 1);  // closing sector (1, P, k)
    return d;
}

// Random triangulation of a convex m-gon by recursive splitting.
struct DiskTriangulation {
    Triangulation t;
    int m = 0;
    std::map<std::pair<int, int>, int> edge_of;  // corner pair (a<b) -> edge id
};

inline DiskTriangulation random_disk(std::mt19937& rng, int m) {
    DiskTriangulation out;
    out.m = m;
    for (int i = 1; i <= m; ++i) {
        out.t.boundary.push_back({100 + i, {i, i % m + 1}});
        out.edge_of[{i, i % m + 1}] = 100 + i;
    }
    out.edge_of[{1, m}] = 100 + m;
    int next_arc = 1;
    std::function<void(int, int)> split = [&](int i, int j) {
        if (j - i < 2) return;
        std::uniform_int_distribution<int> pick(i + 1, j - 1);
        int k = pick(rng);
        auto edge = [&](int a, int b) {
            auto it = out.edge_of.find({a, b});
            if (it != out.edge_of.end()) return it->second;
            out.t.arcs.push_back({next_arc, {a, b}, {}});
            out.edge_of[{a, b}] = next_arc;
            return next_arc++;
        };
        out.t.mesh.tris.push_back({{edge(i, k), edge(k, j), edge(i, j)}, {i, k, j}, false});
        split(i, k);
        split(k, j);
    };
    split(1, m);
    out.t.mesh.index();
    out.t.validate();
    return out;
}

// Crossing data of the arc between two non-adjacent corners of a disk
// triangulation, walked triangle by triangle.
inline ArcSpec disk_arc(const DiskTriangulation& dt, int u, int v) {
    ArcSpec d;
    d.kind = ArcSpec::Kind::plain;
    d.endpoints = {u, v};
    auto separates = [&](int tri, int slot, int a, int b) {
        // Side `slot` of the triangle separates a from b iff exactly one lies
        // strictly inside the corner interval it subtends.
        int p = dt.t.mesh.tris[tri].verts[slot];
        int q = dt.t.mesh.tris[tri].verts[(slot + 1) % 3];
        auto inside = [&](int x) {
            int lo = std::min(p, q), hi = std::max(p, q);
            return x > lo && x < hi;
        };
        return inside(a) != inside(b);
    };
    int cur = -1;
    for (int k = 0; k < static_cast<int>(dt.t.mesh.tris.size()); ++k) {
        const auto& tri = dt.t.mesh.tris[k];
        bool at_u = tri.verts[0] == u || tri.verts[1] == u || tri.verts[2] == u;
        bool at_v = tri.verts[0] == v || tri.verts[1] == v || tri.verts[2] == v;
        if (at_u && at_v) return d;  // side of a triangle: the arc lies in T or on the boundary
        if (!at_u) continue;
        for (int s = 0; s < 3; ++s) {
            int p = tri.verts[s], q = tri.verts[(s + 1) % 3];
            if (p == u || q == u) continue;
            if (separates(k, s, u, v)) cur = k;
        }
    }
    if (cur < 0) return d;
    d.triangles.push_back(cur);
    int entered_by = -1;
    while (true) {
        const auto& tri = dt.t.mesh.tris[d.triangles.back()];
        if (tri.verts[0] == v || tri.verts[1] == v || tri.verts[2] == v) break;
        for (int s = 0; s < 3; ++s) {
            int e = tri.edges[s];
            if (e == entered_by) continue;
            if (!dt.t.is_arc(e)) continue;
            if (!separates(d.triangles.back(), s, u, v)) continue;
            d.arcs.push_back(e);
            auto partner = dt.t.mesh.partner({d.triangles.back(), s});
            d.triangles.push_back(partner->tri);
            entered_by = e;
            break;
        }
        if (d.arcs.size() > dt.t.arcs.size() + 2) throw SurfaceError("disk arc walk stuck");
    }
    return d;
}

// Staircase triangulation of an annulus with p and q marked points and the
// cyclic word of outer/inner steps; all arcs cross the core.
struct AnnulusFixture {
    Triangulation t;
    LoopSpec core;
};

inline AnnulusFixture staircase_annulus(const std::vector<int>& word) {
    int n = static_cast<int>(word.size());
    int p = 0, q = 0;
    for (int w : word) (w ? q : p)++;
    if (p == 0 || q == 0) throw SurfaceError("staircase word needs both letters");
    AnnulusFixture out;
    Triangulation& t = out.t;
    // Outer marks 1..p, inner marks p+1..p+q.
    std::vector<int> oa(n), ib(n);  // endpoints of arc i
    int a = 0, b = 0;
    for (int i = 0; i < n; ++i) {
        oa[i] = a;
        ib[i] = b;
        (word[i] ? b : a)++;
    }
    auto outer = [&](int i) { return 1 + (i % p); };
    auto inner = [&](int i) { return p + 1 + (i % q); };
    for (int i = 0; i < n; ++i) t.arcs.push_back({i + 1, {outer(oa[i]), inner(ib[i])}, {}});
    for (int i = 0; i < p; ++i) t.boundary.push_back({101 + i, {outer(i), outer(i + 1)}});
    for (int i = 0; i < q; ++i) t.boundary.push_back({201 + i, {inner(i + 1), inner(i)}});
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        if (word[i] == 0) {
            // outer step: triangle (O_a, O_{a+1}, I_b)
            t.mesh.tris.push_back(
                {{101 + (oa[i] % p), j + 1, i + 1}, {outer(oa[i]), outer(oa[i] + 1), inner(ib[i])},
                 false});
        } else {
            // inner step: triangle (O_a, I_{b+1}, I_b)
            t.mesh.tris.push_back(
                {{j + 1, 201 + (ib[i] % q), i + 1}, {outer(oa[i]), inner(ib[i] + 1), inner(ib[i])},
                 false});
        }
        out.core.arcs.push_back(i + 1);
        out.core.triangles.push_back(i);
    }
    t.mesh.index();
    t.validate();
    return out;
}

}  // namespace clexp::fixtures
