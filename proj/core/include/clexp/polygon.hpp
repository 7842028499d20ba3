#pragma once

#include "clexp/surface.hpp"

#include <optional>
#include <vector>

namespace clexp {

// An angle of T_delta: corner j of triangle copy `tri`. Serialised id is
// 3*tri + j.
struct Angle {
    int tri = -1;
    int corner = -1;
    int id() const { return 3 * tri + corner; }
    bool operator==(const Angle& o) const { return tri == o.tri && corner == o.corner; }
    bool operator<(const Angle& o) const { return id() < o.id(); }
};

// Triangulated polygon or annulus glued from copies of the triangles crossed
// by a tagged arc (or essential loop), with edge labels into the ambient
// triangulation.
struct TPolygon {
    enum class Shape { polygon, annulus };

    struct Edge {
        int id = 0;
        int label = 0;  // arc id of T, or 0 for weight-one boundary labels
        bool diagonal = false;
        // Provenance inside the strip: triangle copy and slot it came from.
        int copy = -1;
        int slot = -1;
    };

    struct Copy {
        int source_tri = -1;  // triangle index in the ambient mesh
        int strip_pos = -1;   // position along the glued sequence
    };

    Shape shape = Shape::polygon;
    int nvars = 0;
    TriMesh mesh;              // triangle copies; edge ids index `edges`
    std::vector<Edge> edges;   // by id
    std::vector<Copy> copies;  // parallel to mesh.tris

    std::vector<int> tau;         // strip diagonal edge ids in crossing order
    std::vector<int> fan_p;       // fan diagonals at the last endpoint, if any
    std::vector<int> fan_q;       // fan diagonals at the first endpoint, if any
    int puncture_p = -1;          // polygon vertex of the fan_p puncture
    int puncture_q = -1;
    std::vector<Angle> special_angles;  // four-angle rule data (2-notched, n=1)

    int num_triangles() const { return static_cast<int>(mesh.tris.size()); }
    int num_vertices() const { return static_cast<int>(mesh.vertex_ids().size()); }
    const Edge& edge(int id) const { return edges.at(id); }

    bool is_diagonal(int e) const { return edges.at(e).diagonal; }
    std::vector<int> diagonals() const;

    int angle_vertex(const Angle& a) const { return mesh.corner_vertex(a.tri, a.corner); }
    int opposite_edge(const Angle& a) const { return mesh.tris[a.tri].edges[(a.corner + 1) % 3]; }
    // The two edges forming the angle.
    std::pair<int, int> angle_sides(const Angle& a) const {
        return {mesh.corner_in_edge(a.tri, a.corner), mesh.corner_out_edge(a.tri, a.corner)};
    }

    bool vertex_diagonal_incident(int v) const;
    std::vector<int> diagonal_incident_vertices() const;

    // All angles; those incident to a diagonal; exterior ones (between a
    // boundary segment and a diagonal).
    std::vector<Angle> all_angles() const;
    std::vector<Angle> angles_at_diagonals() const;
    std::vector<Angle> exterior_angles() const;
    bool is_exterior(const Angle& a) const;

    // First (min-condition) and last (max-condition) angle in counterclockwise
    // order at a boundary vertex.
    Angle first_angle_ccw(int v) const;
    Angle last_angle_ccw(int v) const;

    // Boundary components as lists of vertices (annuli have two).
    std::vector<std::vector<int>> boundary_components() const;

    void check_invariants() const;
};

TPolygon build_plain(const Triangulation& t, const ArcSpec& d);
TPolygon build_notched(const Triangulation& t, const ArcSpec& d);
TPolygon build_annulus(const Triangulation& t, const LoopSpec& z);

// Loop polygon T_{ell_s} for the loop based at the far endpoint of `base_arc`
// cutting out a once-punctured monogon around puncture s; base_arc must be an
// arc of T.
TPolygon build_loop_polygon(const Triangulation& t, int base_arc, int s);

// Loop polygon for a notched endpoint of an arc not in T: the strip of d's
// underlying plain arc, the fan around the endpoint, and the mirrored strip.
// `at_end` selects which endpoint (0 = first, 1 = second).
TPolygon build_notched_loop_polygon(const Triangulation& t, const ArcSpec& d, int at_end);

// Derived crossing data of the loop around puncture s based at the other
// endpoint of base_arc (used by build_loop_polygon; exposed for tests).
std::pair<std::vector<int>, std::vector<int>> loop_crossings(const Triangulation& t, int base_arc,
                                                             int s);

}  // namespace clexp
