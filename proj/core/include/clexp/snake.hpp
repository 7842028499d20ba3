#pragma once

#include "clexp/angles.hpp"
#include "clexp/lpoly.hpp"
#include "clexp/polygon.hpp"

#include <map>
#include <vector>

namespace clexp {

// Edge set of a perfect matching, sorted by edge id.
using PerfectMatching = std::vector<int>;

// Generic backtracking enumerator: all perfect matchings covering vertices
// 0..nverts-1, in deterministic order.
std::vector<PerfectMatching> all_perfect_matchings(
    int nverts, const std::vector<std::pair<int, int>>& edges);

// Snake graph of a strip-shaped triangulated polygon: one square tile per
// diagonal, glued right or up along the strip.
struct SnakeGraph {
    struct Edge {
        int id = 0;
        int u = 0, v = 0;
        int label = 0;       // arc id of T, 0 for weight-one labels
        int copy = -1;       // role: triangle copy of the polygon ...
        int slot = -1;       // ... and source slot within it
        bool diag = false;   // tile diagonal (not part of the matching graph)
        int tile = -1;       // for diagonals: the tile index
        std::array<int, 2> faces{-1, -1};  // bounded faces are tiles, -1 = outer
        int angle = -1;      // polygon angle id opposite the same label
    };

    int nvars = 0;
    int ntiles = 0;
    int nverts = 0;
    std::vector<Edge> edges;
    std::vector<int> tile_label;       // diagonal label per tile
    std::vector<std::pair<int, int>> tile_pos;
    int e0 = -1;

    // Loop-polygon metadata for symmetric matchings.
    bool has_symmetry = false;
    int sym_n = 0, sym_m = 0;
    std::map<std::pair<int, int>, int> role_edge;  // (copy, slot) -> matching edge id

    std::vector<std::pair<int, int>> matching_edges() const;
    std::vector<int> boundary_cycle_from_e0() const;
};

SnakeGraph build_snake(const TPolygon& tp);

PerfectMatching minimal_pm(const SnakeGraph& g);
std::vector<PerfectMatching> enumerate_pm(const SnakeGraph& g);

// J(P): tiles enclosed by the symmetric difference with the minimal matching.
std::vector<int> height_tiles(const SnakeGraph& g, const PerfectMatching& p);

Monomial pm_weight_x(const SnakeGraph& g, const PerfectMatching& p);
Monomial pm_weight_xy(const SnakeGraph& g, const PerfectMatching& p);

// Checks the tile-boundary decomposition of P_- symmetric-difference P: every
// connected component bounds a contiguous run of tiles.
bool check_tile_boundary_decomposition(const SnakeGraph& g, const PerfectMatching& p);

// gamma-symmetric matchings of a loop snake graph, paired with their
// restrictions to the plain-arc snake graph.
struct SymmetricMatching {
    PerfectMatching pm;       // matching of the loop graph
    PerfectMatching res;      // induced matching of the gamma graph
    Monomial weight;          // xbar(P) * ybar(P)
};
std::vector<SymmetricMatching> symmetric_pms(const SnakeGraph& loop_graph,
                                             const SnakeGraph& gamma_graph);

// gamma-compatible pairs for a 2-notched arc. The q-side gamma graph runs the
// strip backwards; restrictions are compared through the role reversal.
struct CompatiblePair {
    PerfectMatching pm_p, pm_q;
    Monomial weight;  // xbarbar * ybarbar
};
std::vector<CompatiblePair> compatible_pairs(const SnakeGraph& gp, const SnakeGraph& gamma_p,
                                             const SnakeGraph& gq, const SnakeGraph& gamma_q);

// Band graph: the snake graph of the cut-open loop with the tau sides of the
// first and last square identified.
struct BandGraph {
    SnakeGraph snake;     // of the cut-open loop
    int tau_first = -1;   // snake edge ids of the identified sides
    int tau_last = -1;
    int tau_label = 0;
    bool moebius = false;

    struct GoodMatching {
        PerfectMatching completion;  // matching of the cut snake graph
        bool contains_tau = false;
        Monomial weight;  // x(P) * y(P)
    };
};

BandGraph build_band(const TPolygon& cut_polygon);
std::vector<BandGraph::GoodMatching> band_good_pms(const BandGraph& b);
BandGraph::GoodMatching band_minimal(const BandGraph& b);

}  // namespace clexp
