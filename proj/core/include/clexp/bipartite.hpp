#pragma once

#include "clexp/angles.hpp"
#include "clexp/polygon.hpp"
#include "clexp/snake.hpp"

namespace clexp {

// Bipartite graph of a triangulated polygon: black vertices are the
// diagonal-incident polygon vertices, white vertices its triangles, edges the
// incidences. Edges correspond to diagonal-incident angles.
struct BipartiteGraph {
    struct Edge {
        int id = 0;
        int black = 0;  // polygon vertex id
        int white = 0;  // triangle index
        int label = 0;  // label of the side opposite the matching angle
        Angle angle;    // varpi^{-1} of this edge
        std::array<int, 2> faces{-1, -1};  // squares (= diagonal edge ids), -1 = outer
    };

    int nvars = 0;
    int nblack = 0, nwhite = 0;
    std::vector<Edge> edges;
    std::vector<int> black_ids;          // polygon vertex per black index
    std::vector<int> squares;            // polygon diagonal edge ids
    std::map<int, int> square_index;     // diagonal edge id -> face index

    std::vector<std::pair<int, int>> matching_edges() const;  // black, nblack+white
    int edge_of_angle(const Angle& a) const;
};

BipartiteGraph build_bipartite(const TPolygon& tp);

int varpi(const BipartiteGraph& b, const Angle& a);
Angle varpi_inv(const BipartiteGraph& b, int edge);

std::vector<PerfectMatching> enumerate_bipartite_pm(const BipartiteGraph& b);
PerfectMatching bipartite_minimal(const BipartiteGraph& b, const AngleMatching& minimal);

// I(E): squares enclosed by the symmetric difference with the minimal
// matching, as polygon diagonal edge ids.
std::vector<int> squares_of(const BipartiteGraph& b, const PerfectMatching& e,
                            const PerfectMatching& minimal);

// Structural statement behind the coefficient formula: the symmetric
// difference is exactly the boundary of the enclosed squares.
bool check_square_boundary_decomposition(const BipartiteGraph& b, const PerfectMatching& e,
                                         const PerfectMatching& minimal);

}  // namespace clexp
