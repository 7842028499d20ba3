#pragma once

#include "clexp/angles.hpp"
#include "clexp/bipartite.hpp"
#include "clexp/lpoly.hpp"
#include "clexp/polygon.hpp"
#include "clexp/qp.hpp"
#include "clexp/snake.hpp"
#include "clexp/surface.hpp"

#include <optional>

namespace clexp {

enum class Backend { angles, snake, bipartite, qp };

// Forms of the 2-notched case with the underlying arc in T. The two printed
// transcriptions disagree with each other after specialising coefficients;
// the mutation oracle rejects both on the two-punctured fixtures and pins
// the product of the two singly-notched variables instead, which is the
// default here. The printed forms remain available behind the flag.
enum class TwoNotchedBranch {
    notched_product,             // (x_{d^(p)} x_{d^(q)} y_d + (1-prod)(1-prod)) / x_d
    printed_principal,           // (x_lp x_lq y_d + (1-prod)(1-prod)) / x_d
    printed_plus_one,            // (x_lp x_lq + 1) / x_d, coefficient-free only
};

struct ExpandOptions {
    Backend backend = Backend::angles;
    bool coefficient_free = false;
    TwoNotchedBranch branch = TwoNotchedBranch::notched_product;
    bool skip_output_checks = false;  // for oracle arbitration of wrong branches
};

struct Expansion {
    LPoly value;
    Backend backend = Backend::angles;
    int object_count = 0;       // matchings / cuts / pairs behind the sum
    Monomial denominator;       // cross(T, delta) before the substitution map
    Relabeling relabeling;
};

// cross(T, delta): product of the x-labels over all diagonals, with
// multiplicity.
Monomial cross_monomial(const TPolygon& tp);

// Substitution maps of the homomorphism correcting for 1-notched arcs.
std::pair<std::map<int, LPoly>, std::map<int, LPoly>> phi_maps(const Triangulation& t);
LPoly apply_phi(const Triangulation& t, const LPoly& p);

// Sum of x(.)y(.) over the backend's combinatorial objects for a tagged arc
// whose underlying plain arc is not in T.
LPoly backend_sum(const Triangulation& t, const ArcSpec& d, Backend b, int* count);

Expansion cluster_variable(const Triangulation& t, const ArcSpec& d, const ExpandOptions& opt);

// Loop elements of essential loops on surfaces without punctures.
Expansion loop_element(const Triangulation& t, const LoopSpec& z, bool band_backend,
                       bool coefficient_free = false);

// Transport of good matchings between the cut-open polygon and the annulus;
// exposed for the verification suite.
struct AnnulusContext {
    TPolygon annulus;
    TPolygon cut;  // the polygon of the loop cut open inside one triangle
    Angle b, c, c_last;
    AngleMatching minimal;  // minimal matching transported to the annulus
};
AnnulusContext annulus_context(const Triangulation& t, const LoopSpec& z);
AngleMatching transport_to_annulus(const AnnulusContext& ctx, const AngleMatching& cut_matching);

struct FVectorReport {
    std::vector<int> from_expansion;
    std::optional<std::vector<int>> from_fan_product;
    std::vector<int> combinatorial;
};
FVectorReport f_vector(const Triangulation& t, const ArcSpec& d);

int intersection_number(const Triangulation& t, const ArcSpec& d, int arc);

}  // namespace clexp
