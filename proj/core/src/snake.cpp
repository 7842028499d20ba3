#include "clexp/snake.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace clexp {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SurfaceError(msg); }

struct Slots {
    int enter = -1, exit = -1, w = -1;
};

// Recover per-copy enter/exit slots from the recorded strip diagonals.
std::vector<Slots> copy_slots(const TPolygon& tp) {
    int n = static_cast<int>(tp.tau.size());
    std::vector<Slots> out(n + 1);
    auto slot_of = [&](int copy, int edge) {
        for (int j = 0; j < 3; ++j)
            if (tp.mesh.tris[copy].edges[j] == edge) return j;
        fail("strip diagonal missing from its copy");
    };
    for (int i = 0; i < n; ++i) {
        out[i].exit = slot_of(i, tp.tau[i]);
        out[i + 1].enter = slot_of(i + 1, tp.tau[i]);
    }
    for (int i = 0; i <= n; ++i)
        if (out[i].enter >= 0 && out[i].exit >= 0) out[i].w = 3 - out[i].enter - out[i].exit;
    return out;
}

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::vector<PerfectMatching> all_perfect_matchings(
    int nverts, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> at(nverts);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (edges[e].first < 0) continue;
        at[edges[e].first].push_back(e);
        at[edges[e].second].push_back(e);
    }
    std::vector<PerfectMatching> out;
    std::vector<char> covered(nverts, 0);
    PerfectMatching cur;
    std::function<void(int)> rec = [&](int from) {
        int v = -1;
        for (int i = from; i < nverts; ++i)
            if (!covered[i]) {
                v = i;
                break;
            }
        if (v < 0) {
            PerfectMatching pm = cur;
            std::sort(pm.begin(), pm.end());
            out.push_back(pm);
            return;
        }
        for (int e : at[v]) {
            int o = edges[e].first == v ? edges[e].second : edges[e].first;
            if (covered[o]) continue;
            covered[v] = covered[o] = 1;
            cur.push_back(e);
            rec(v + 1);
            cur.pop_back();
            covered[v] = covered[o] = 0;
        }
    };
    rec(0);
    return out;
}

std::vector<std::pair<int, int>> SnakeGraph::matching_edges() const {
    std::vector<std::pair<int, int>> out(edges.size(), {-1, -1});
    for (const auto& e : edges)
        if (!e.diag) out[e.id] = {e.u, e.v};
    return out;
}

SnakeGraph build_snake(const TPolygon& tp) {
    if (tp.shape != TPolygon::Shape::polygon) fail("snake graphs need a polygon strip");
    int n = static_cast<int>(tp.tau.size());
    if (n == 0) fail("empty strip");
    if (n + 1 != tp.num_triangles())
        fail("snake graphs are built from strips and loop polygons, not fan polygons");

    auto slots = copy_slots(tp);

    // Unfolding reflects every other triangle copy, which fixes where the two
    // sides of copy c other than its entering one land on the grid: on odd
    // copies the side after the entering slot goes right, on even copies on
    // top. The glue direction follows from where the shared side sits.
    auto top_slot = [&](int c) { return (slots[c].enter + (c % 2 ? 2 : 1)) % 3; };
    auto right_slot = [&](int c) { return (slots[c].enter + (c % 2 ? 1 : 2)) % 3; };
    std::vector<int> d(std::max(n - 1, 0), 0);  // 0 = up, 1 = right
    for (int t = 0; t + 1 < n; ++t) d[t] = (top_slot(t + 1) == slots[t + 1].w) ? 0 : 1;

    SnakeGraph g;
    g.nvars = tp.nvars;
    g.ntiles = n;
    std::vector<std::pair<int, int>> pos(n, {0, 0});
    for (int t = 0; t + 1 < n; ++t)
        pos[t + 1] = {pos[t].first + (d[t] == 1 ? 1 : 0), pos[t].second + (d[t] == 0 ? 1 : 0)};
    g.tile_pos = pos;

    std::map<std::pair<int, int>, int> vid;
    auto vert = [&](std::pair<int, int> p) {
        auto [it, fresh] = vid.emplace(p, g.nverts);
        if (fresh) ++g.nverts;
        return it->second;
    };
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, int> eid;
    auto add_edge = [&](std::pair<int, int> a, std::pair<int, int> b, int copy, int slot,
                        bool diag, int tile) {
        if (b < a) std::swap(a, b);
        auto key = std::make_pair(a, b);
        auto it = eid.find(key);
        if (it != eid.end()) return it->second;
        SnakeGraph::Edge e;
        e.id = static_cast<int>(g.edges.size());
        e.u = vert(a);
        e.v = vert(b);
        e.copy = copy;
        e.slot = slot;
        e.label = tp.edge(tp.mesh.tris[copy].edges[slot]).label;
        e.diag = diag;
        e.tile = tile;
        if (!diag) e.angle = 3 * copy + (slot + 2) % 3;
        g.edges.push_back(e);
        eid.emplace(key, e.id);
        if (!diag) g.role_edge.emplace(std::make_pair(copy, slot), e.id);
        return e.id;
    };

    for (int t = 0; t < n; ++t) {
        auto [x, y] = pos[t];
        std::pair<int, int> sw{x, y}, se{x + 1, y}, ne{x + 1, y + 1}, nw{x, y + 1};
        add_edge(nw, se, t + 1, slots[t + 1].enter, true, t);
        g.tile_label.push_back(tp.edge(tp.tau[t]).label);

        if (t == 0) {
            g.e0 = add_edge(sw, se, 0, (slots[0].exit + 2) % 3, false, -1);
            add_edge(sw, nw, 0, (slots[0].exit + 1) % 3, false, -1);
        } else if (d[t - 1] == 0) {
            add_edge(sw, nw, t, slots[t].enter, false, -1);  // bottom is shared
        } else {
            add_edge(sw, se, t, slots[t].enter, false, -1);  // left is shared
        }
        add_edge(nw, ne, t + 1, top_slot(t + 1), false, -1);
        add_edge(se, ne, t + 1, right_slot(t + 1), false, -1);
    }

    std::map<std::pair<int, int>, int> tile_at_pos;
    for (int t = 0; t < n; ++t) tile_at_pos[pos[t]] = t;
    auto tile_at = [&](int x, int y) {
        auto it = tile_at_pos.find({x, y});
        return it == tile_at_pos.end() ? -1 : it->second;
    };
    std::map<int, std::pair<int, int>> coord;
    for (const auto& [pt, id] : vid) coord[id] = pt;
    for (auto& e : g.edges) {
        if (e.diag) continue;
        auto a = coord[e.u], b = coord[e.v];
        if (a > b) std::swap(a, b);
        if (a.second == b.second)
            e.faces = {tile_at(a.first, a.second), tile_at(a.first, a.second - 1)};
        else
            e.faces = {tile_at(a.first, a.second), tile_at(a.first - 1, a.second)};
    }

    if (!tp.fan_p.empty() && tp.fan_q.empty()) {
        int m = static_cast<int>(tp.fan_p.size());
        if ((n - m) % 2 == 0 && n > m) {
            g.has_symmetry = true;
            g.sym_n = (n - m) / 2;
            g.sym_m = m;
        }
    }
    return g;
}

std::vector<int> SnakeGraph::boundary_cycle_from_e0() const {
    std::map<int, std::vector<int>> at;
    for (const auto& e : edges)
        if (!e.diag && (e.faces[0] < 0 || e.faces[1] < 0)) {
            at[e.u].push_back(e.id);
            at[e.v].push_back(e.id);
        }
    std::vector<int> cycle;
    int cur = e0;
    int v = edges[e0].u;
    do {
        cycle.push_back(cur);
        const auto& cands = at.at(v);
        if (cands.size() != 2) fail("snake boundary is not a cycle");
        int nxt = cands[0] == cur ? cands[1] : cands[0];
        v = edges[nxt].u == v ? edges[nxt].v : edges[nxt].u;
        cur = nxt;
    } while (cur != e0);
    return cycle;
}

PerfectMatching minimal_pm(const SnakeGraph& g) {
    auto cycle = g.boundary_cycle_from_e0();
    PerfectMatching pm;
    for (size_t i = 0; i < cycle.size(); i += 2) pm.push_back(cycle[i]);
    std::sort(pm.begin(), pm.end());
    std::set<int> seen;
    for (int e : pm) {
        seen.insert(g.edges[e].u);
        seen.insert(g.edges[e].v);
    }
    if (static_cast<int>(seen.size()) != g.nverts || 2 * pm.size() != seen.size())
        fail("minimal matching does not cover the snake graph");
    return pm;
}

std::vector<PerfectMatching> enumerate_pm(const SnakeGraph& g) {
    return all_perfect_matchings(g.nverts, g.matching_edges());
}

std::vector<int> height_tiles(const SnakeGraph& g, const PerfectMatching& p) {
    PerfectMatching pmin = minimal_pm(g);
    std::set<int> d(pmin.begin(), pmin.end());
    for (int e : p) {
        if (d.count(e))
            d.erase(e);
        else
            d.insert(e);
    }
    // Two-colour the faces: crossing a symmetric-difference edge flips sides;
    // the enclosed tiles are those coloured opposite to the outer face.
    std::vector<int> color(g.ntiles + 1, -1);
    color[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (const auto& e : g.edges) {
            if (e.diag) continue;
            int a = e.faces[0] + 1, b = e.faces[1] + 1;
            if (a != f && b != f) continue;
            int o = a == f ? b : a;
            int want = color[f] ^ (d.count(e.id) ? 1 : 0);
            if (color[o] < 0) {
                color[o] = want;
                stack.push_back(o);
            } else if (color[o] != want) {
                fail("tile-boundary decomposition failed");
            }
        }
    }
    std::vector<int> tiles;
    for (int t = 0; t < g.ntiles; ++t)
        if (color[1 + t] == 1) tiles.push_back(t);
    return tiles;
}

bool check_tile_boundary_decomposition(const SnakeGraph& g, const PerfectMatching& p) {
    PerfectMatching pmin = minimal_pm(g);
    std::set<int> d(pmin.begin(), pmin.end());
    for (int e : p) {
        if (d.count(e))
            d.erase(e);
        else
            d.insert(e);
    }
    std::vector<int> j = height_tiles(g, p);
    std::set<int> inside(j.begin(), j.end());
    std::set<int> boundary;
    for (const auto& e : g.edges) {
        if (e.diag) continue;
        bool a = e.faces[0] >= 0 && inside.count(e.faces[0]);
        bool b = e.faces[1] >= 0 && inside.count(e.faces[1]);
        if (a != b) boundary.insert(e.id);
    }
    if (boundary != d) return false;

    // Each connected component of the difference must bound one contiguous
    // run of tiles.
    if (d.empty()) return true;
    std::map<int, int> idx;
    std::vector<int> ids(d.begin(), d.end());
    for (size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = static_cast<int>(i);
    UF uf(static_cast<int>(ids.size()));
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t l = i + 1; l < ids.size(); ++l) {
            const auto& a = g.edges[ids[i]];
            const auto& b = g.edges[ids[l]];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                uf.unite(static_cast<int>(i), static_cast<int>(l));
        }
    std::map<int, std::set<int>> comp_tiles;
    for (size_t i = 0; i < ids.size(); ++i) {
        const auto& e = g.edges[ids[i]];
        for (int f : e.faces)
            if (f >= 0 && inside.count(f)) comp_tiles[uf.find(static_cast<int>(i))].insert(f);
    }
    for (const auto& [c, tiles] : comp_tiles) {
        (void)c;
        int lo = *tiles.begin(), hi = *tiles.rbegin();
        for (int t = lo; t <= hi; ++t)
            if (!tiles.count(t)) return false;
    }
    return true;
}

Monomial pm_weight_x(const SnakeGraph& g, const PerfectMatching& p) {
    Monomial m(g.nvars);
    for (int e : p)
        if (g.edges[e].label > 0) m.xexp[g.edges[e].label - 1] += 1;
    return m;
}

Monomial pm_weight_xy(const SnakeGraph& g, const PerfectMatching& p) {
    Monomial m = pm_weight_x(g, p);
    for (int t : height_tiles(g, p))
        if (g.tile_label[t] > 0) m.yexp[g.tile_label[t] - 1] += 1;
    return m;
}

namespace {

// Complete a partial gamma-graph matching by at most one of the puncture-side
// edges of its last tile; the completion is unique for symmetric matchings.
PerfectMatching complete_res(const SnakeGraph& gamma, const PerfectMatching& partial) {
    std::vector<int> extras;
    for (const auto& [role, e] : gamma.role_edge)
        if (role.first == gamma.ntiles) extras.push_back(e);
    std::sort(extras.begin(), extras.end());
    std::vector<PerfectMatching> candidates;
    for (int take = -1; take < static_cast<int>(extras.size()); ++take) {
        PerfectMatching cand = partial;
        if (take >= 0) cand.push_back(extras[take]);
        std::sort(cand.begin(), cand.end());
        std::set<int> seen;
        bool ok = true;
        for (int e : cand) {
            ok = ok && seen.insert(gamma.edges[e].u).second;
            ok = ok && seen.insert(gamma.edges[e].v).second;
        }
        if (ok && static_cast<int>(seen.size()) == gamma.nverts) candidates.push_back(cand);
    }
    if (candidates.size() != 1) fail("restriction completion is not unique");
    return candidates.front();
}

}  // namespace



std::vector<SymmetricMatching> symmetric_pms(const SnakeGraph& loop_graph,
                                             const SnakeGraph& gamma_graph) {
    if (!loop_graph.has_symmetry) fail("symmetric matchings need a loop snake graph");
    int n = loop_graph.sym_n, m = loop_graph.sym_m;
    if (gamma_graph.ntiles != n) fail("gamma graph does not match the loop strip");

    // The mirrored strip revisits the same triangle sides through the same
    // slots, so the deck correspondence is slot-preserving.
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [role, e] : loop_graph.role_edge) {
        if (role.first >= n) continue;
        auto it = loop_graph.role_edge.find({2 * n + m - role.first, role.second});
        if (it == loop_graph.role_edge.end()) fail("mirror role missing");
        pairs.emplace_back(e, it->second);
    }

    std::vector<SymmetricMatching> out;
    for (const PerfectMatching& p : enumerate_pm(loop_graph)) {
        std::set<int> in(p.begin(), p.end());
        bool sym = true;
        for (auto [a, b] : pairs) sym = sym && (in.count(a) == in.count(b));
        if (!sym) continue;

        PerfectMatching partial;
        for (const auto& [role, e] : loop_graph.role_edge) {
            if (role.first >= n || !in.count(e)) continue;
            auto it = gamma_graph.role_edge.find(role);
            if (it == gamma_graph.role_edge.end()) fail("restriction role missing");
            partial.push_back(it->second);
        }
        PerfectMatching res = complete_res(gamma_graph, partial);
        Monomial w = pm_weight_xy(loop_graph, p);
        Monomial r = pm_weight_xy(gamma_graph, res);
        out.push_back({p, res, w * r.inverse()});
    }
    return out;
}

std::vector<CompatiblePair> compatible_pairs(const SnakeGraph& gp, const SnakeGraph& gamma_p,
                                             const SnakeGraph& gq, const SnakeGraph& gamma_q) {
    auto sp = symmetric_pms(gp, gamma_p);
    auto sq = symmetric_pms(gq, gamma_q);
    int n = gamma_p.ntiles;
    auto reversed = [&](const PerfectMatching& res_q) {
        PerfectMatching out;
        std::set<int> in(res_q.begin(), res_q.end());
        for (const auto& [role, e] : gamma_q.role_edge) {
            if (!in.count(e)) continue;
            auto it = gamma_p.role_edge.find({n - role.first, role.second});
            if (it == gamma_p.role_edge.end()) fail("reversed restriction role missing");
            out.push_back(it->second);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<CompatiblePair> out;
    for (const auto& a : sp) {
        Monomial res_w = pm_weight_xy(gamma_p, a.res);
        Monomial res_cubed_inv = (res_w * res_w * res_w).inverse();
        for (const auto& b : sq) {
            if (reversed(b.res) != a.res) continue;
            Monomial w = pm_weight_xy(gp, a.pm) * pm_weight_xy(gq, b.pm) * res_cubed_inv;
            out.push_back({a.pm, b.pm, w});
        }
    }
    return out;
}

BandGraph build_band(const TPolygon& cut_polygon) {
    BandGraph b;
    b.snake = build_snake(cut_polygon);
    const SnakeGraph& g = b.snake;
    int n = g.ntiles;
    if (n < 2) fail("band graphs need at least two tiles");

    auto slots = copy_slots(cut_polygon);
    int alpha_label = cut_polygon.edge(cut_polygon.tau.back()).label;
    int beta_label = cut_polygon.edge(cut_polygon.tau.front()).label;
    int tslot0 = -1, tslotn = -1;
    for (int j = 0; j < 3; ++j) {
        if (j != slots[0].exit &&
            cut_polygon.edge(cut_polygon.mesh.tris[0].edges[j]).label != alpha_label)
            tslot0 = j;
        if (j != slots[n].enter &&
            cut_polygon.edge(cut_polygon.mesh.tris[n].edges[j]).label != beta_label)
            tslotn = j;
    }
    if (tslot0 < 0 || tslotn < 0) fail("band identification sides not found");
    b.tau_first = g.role_edge.at({0, tslot0});
    b.tau_last = g.role_edge.at({n, tslotn});
    b.tau_label = g.edges[b.tau_first].label;
    if (b.tau_label != g.edges[b.tau_last].label) fail("band sides carry different labels");

    // v is the endpoint of the first side that also meets the other
    // south-west edge of the first square; v' correspondingly at the end.
    int other_sw = -1, other_ne = -1;
    for (const auto& [role, e] : g.role_edge) {
        if (role.first == 0 && e != b.tau_first) other_sw = e;
        if (role.first == n && e != b.tau_last) other_ne = e;
    }
    auto touches = [&](int e, int v) { return g.edges[e].u == v || g.edges[e].v == v; };
    int v0 = g.edges[b.tau_first].u, w0 = g.edges[b.tau_first].v;
    if (!touches(other_sw, v0)) std::swap(v0, w0);
    int v1 = g.edges[b.tau_last].u, w1 = g.edges[b.tau_last].v;
    if (!touches(other_ne, v1)) std::swap(v1, w1);

    UF uf(g.nverts);
    uf.unite(v0, v1);
    uf.unite(w0, w1);
    std::map<int, std::vector<int>> adj;
    for (const auto& e : g.edges) {
        if (e.diag || e.id == b.tau_first || e.id == b.tau_last) continue;
        if (e.faces[0] >= 0 && e.faces[1] >= 0) continue;
        int u = uf.find(e.u), v = uf.find(e.v);
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::set<int> seen;
    int comps = 0;
    for (const auto& [v, nb] : adj) {
        (void)nb;
        if (seen.count(v)) continue;
        ++comps;
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (!seen.insert(x).second) continue;
            for (int y : adj[x]) stack.push_back(y);
        }
    }
    b.moebius = (comps == 1);
    return b;
}

std::vector<BandGraph::GoodMatching> band_good_pms(const BandGraph& b) {
    std::vector<BandGraph::GoodMatching> out;
    for (const PerfectMatching& p : enumerate_pm(b.snake)) {
        bool f = std::count(p.begin(), p.end(), b.tau_first) > 0;
        bool l = std::count(p.begin(), p.end(), b.tau_last) > 0;
        if (!f && !l) continue;
        BandGraph::GoodMatching gm;
        gm.completion = p;
        gm.contains_tau = f && l;
        gm.weight = pm_weight_xy(b.snake, p);
        if (b.tau_label > 0) gm.weight.xexp[b.tau_label - 1] -= 1;
        out.push_back(gm);
    }
    return out;
}

BandGraph::GoodMatching band_minimal(const BandGraph& b) {
    PerfectMatching p = minimal_pm(b.snake);
    bool f = std::count(p.begin(), p.end(), b.tau_first) > 0;
    bool l = std::count(p.begin(), p.end(), b.tau_last) > 0;
    if (!f && !l) fail("minimal snake matching is not good on the band");
    BandGraph::GoodMatching gm;
    gm.completion = p;
    gm.contains_tau = f && l;
    gm.weight = pm_weight_xy(b.snake, p);
    if (b.tau_label > 0) gm.weight.xexp[b.tau_label - 1] -= 1;
    return gm;
}

}  // namespace clexp
