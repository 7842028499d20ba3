#pragma once

#include "clexp/lpoly.hpp"
#include "clexp/polygon.hpp"

namespace clexp {

// A perfect matching of angles, kept sorted by angle id.
using AngleMatching = std::vector<Angle>;

// Both defining conditions, re-checked independently of the enumerator.
bool is_angle_matching(const TPolygon& tp, const AngleMatching& a);

// All perfect matchings of angles, in lexicographic order of the choice of
// marked corner per triangle.
std::vector<AngleMatching> enumerate_matchings(const TPolygon& tp);

// The unique matching satisfying the min-condition at every boundary vertex
// incident to a diagonal.
AngleMatching minimal_matching(const TPolygon& tp);

// x(A): product of the labels opposite to the marked angles.
Monomial weight_x(const TPolygon& tp, const AngleMatching& a);

// Y(A): polygon diagonal edges whose coefficient contributes, including the
// special rule for one-crossing 2-notched arcs.
std::vector<int> y_support(const TPolygon& tp, const AngleMatching& a,
                           const AngleMatching& minimal);

// x(A) * y(A) as a monomial in the ambient variables.
Monomial weight_xy(const TPolygon& tp, const AngleMatching& a, const AngleMatching& minimal);

bool satisfies_min_condition(const TPolygon& tp, const AngleMatching& a, int vertex);
bool satisfies_max_condition(const TPolygon& tp, const AngleMatching& a, int vertex);

// Annulus matchings that are not bad: a bad matching is min on all vertices of
// one boundary component and max on all vertices of the other.
bool is_bad(const TPolygon& tp, const AngleMatching& a);
std::vector<AngleMatching> good_enumerate(const TPolygon& tp);

}  // namespace clexp
