#pragma once

#include "clexp/angles.hpp"
#include "clexp/polygon.hpp"

namespace clexp {

// Quiver with potential on the edges of a triangulated polygon: one arrow per
// triangle corner plus clockwise-predecessor arrows between boundary
// segments; the potential is the triangle cycles minus the exterior cycles.
struct QuiverPotential {
    struct Arrow {
        int id = 0;
        int from = 0, to = 0;  // polygon edge ids
        bool in_rho_image = false;
        Angle angle;  // rho^{-1} for triangle arrows; undefined for boundary arrows
        bool boundary_arrow = false;
    };

    int nvars = 0;
    std::vector<Arrow> arrows;
    std::vector<std::vector<int>> triangle_cycles;
    std::vector<std::vector<int>> exterior_cycles;

    int n_delta() const { return static_cast<int>(triangle_cycles.size()); }
};

using Cut = std::vector<int>;  // sorted arrow ids

QuiverPotential build_qp(const TPolygon& tp);

bool is_cut(const QuiverPotential& qp, const Cut& c);

// All cuts of cardinality n(delta); their enumeration runs over choices of
// one angle arrow per triangle cycle.
std::vector<Cut> minimal_cuts(const QuiverPotential& qp);

// Exhaustive cut enumeration of any size, for falsification tests; exponential.
std::vector<Cut> all_cuts(const QuiverPotential& qp);

int rho(const QuiverPotential& qp, const Angle& a);
AngleMatching rho_inv(const QuiverPotential& qp, const Cut& c);

}  // namespace clexp
