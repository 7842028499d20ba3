#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace clexp {

struct SurfaceError : std::runtime_error {
    explicit SurfaceError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Tag { plain, notched };

// Oriented triangle: edges[k] is traversed from verts[k] to verts[(k+1)%3];
// the cycle is counterclockwise with respect to the surface orientation.
struct Triangle {
    std::array<int, 3> edges;
    std::array<int, 3> verts;
    bool self_folded = false;
};

// One use of an edge inside a triangle (triangle index, slot 0..2).
struct EdgeUse {
    int tri = -1;
    int slot = -1;
    bool operator==(const EdgeUse& o) const { return tri == o.tri && slot == o.slot; }
};

// Shared combinatorics of an oriented triangulated complex. Both the ambient
// triangulation and the glued polygons T_delta are instances.
struct TriMesh {
    std::vector<Triangle> tris;
    std::map<int, std::vector<EdgeUse>> edge_uses;  // edge id -> 1 or 2 uses

    void index();  // rebuild edge_uses

    bool is_boundary_edge(int e) const;
    // Corner j of triangle k sits at verts[j]; the incoming edge is
    // edges[(j+2)%3] and the outgoing edge is edges[j].
    int corner_vertex(int tri, int j) const { return tris[tri].verts[j]; }
    int corner_in_edge(int tri, int j) const { return tris[tri].edges[(j + 2) % 3]; }
    int corner_out_edge(int tri, int j) const { return tris[tri].edges[j]; }
    EdgeUse corner_in_use(int tri, int j) const { return {tri, (j + 2) % 3}; }
    EdgeUse corner_out_use(int tri, int j) const { return {tri, j}; }

    std::optional<EdgeUse> partner(const EdgeUse& u) const;

    // Counterclockwise successor of a corner around its vertex: the corner
    // whose outgoing use is the partner of this corner's incoming use.
    std::optional<std::pair<int, int>> next_corner_ccw(int tri, int j) const;
    std::optional<std::pair<int, int>> prev_corner_ccw(int tri, int j) const;

    // Corners at `v` in counterclockwise order. For a boundary vertex the walk
    // starts at the corner whose outgoing edge lies on the boundary; for an
    // interior vertex it starts at the smallest corner and wraps around.
    std::vector<std::pair<int, int>> corners_at(int v) const;

    std::vector<int> vertex_ids() const;
    bool vertex_on_boundary(int v) const;
};

struct Arc {
    int id = 0;
    std::array<int, 2> ends{};
    std::array<Tag, 2> tags{Tag::plain, Tag::plain};

    bool notched() const { return tags[0] == Tag::notched || tags[1] == Tag::notched; }
    int notched_end() const;  // endpoint carrying the notch (1-notched arcs)
};

struct BoundarySegment {
    int id = 0;
    std::array<int, 2> ends{};
};

// Tagged triangulation of a marked surface. The triangle list describes the
// underlying ideal triangulation: a 1-notched arc appears as the loop side of
// its self-folded triangle, its plain partner as the radius.
class Triangulation {
  public:
    std::vector<Arc> arcs;  // ids 1..N
    std::vector<BoundarySegment> boundary;
    TriMesh mesh;
    std::set<int> punctures;

    int num_arcs() const { return static_cast<int>(arcs.size()); }
    const Arc& arc(int id) const;
    bool is_arc(int e) const { return e >= 1 && e <= num_arcs(); }
    bool is_puncture(int v) const { return punctures.count(v) > 0; }

    void validate() const;

    // The ideal triangulation T^0: tags dropped, loop arcs get both endpoints
    // at the base of their self-folded triangle.
    Triangulation to_ideal() const;

    // Loop arc of the self-folded triangle whose radius is `arc_id`, or 0.
    int loop_of_radius(int arc_id) const;
    // Radius arc paired with the 1-notched arc `arc_id`, or 0.
    int radius_of_loop(int arc_id) const;
    // Puncture enclosed by the self-folded triangle of 1-notched arc, or -1.
    int enclosed_puncture(int loop_arc) const;

    // Arc ids incident to puncture p in counterclockwise cyclic order, one
    // entry per arc end (ends of T^0 curves).
    std::vector<int> puncture_fan(int p) const;

    // Exchange matrix B_T (N x N, skew-symmetric).
    std::vector<std::vector<int>> exchange_matrix() const;

    // Number of ends of the tagged arc incident to marked point s (0, 1 or 2).
    int end_count(int arc_id, int s) const;

  private:
    void check_self_folded() const;
};

// Combinatorial crossing data of a tagged arc: the triangles of T^0 crossed in
// order and the arcs shared by consecutive ones.
struct ArcSpec {
    enum class Kind { plain, notched1, notched2 };
    Kind kind = Kind::plain;
    std::array<int, 2> endpoints{};
    std::array<Tag, 2> tags{Tag::plain, Tag::plain};
    std::vector<int> triangles;  // indices into Triangulation::mesh.tris
    std::vector<int> arcs;       // crossed arc ids, size = triangles.size() - 1
    int base_arc = 0;            // for delta with underlying plain arc in T

    bool in_triangulation() const { return base_arc != 0 && kind == Kind::plain; }
    bool underlying_in_triangulation() const { return base_arc != 0; }
    int crossing_count() const { return static_cast<int>(arcs.size()); }
    void validate(const Triangulation& t) const;
    ArcSpec reversed() const;
};

// Cyclic crossing data of an essential loop: triangles[i] is entered after
// crossing arcs[i] and left through arcs[(i+1) % n].
struct LoopSpec {
    std::vector<int> triangles;
    std::vector<int> arcs;
    void validate(const Triangulation& t) const;
};

struct Relabeling {
    std::vector<std::pair<int, int>> swaps;  // arc id pairs x_t <-> x_s
    bool empty() const { return swaps.empty(); }
};

struct NormalizedInput {
    Triangulation triangulation;
    ArcSpec arc;
    Relabeling relabeling;
};

// Simultaneous tag changes making the input satisfy the standing assumption
// that no 1-notched arc of T is incident to a notched endpoint of delta.
NormalizedInput normalize_tags(const Triangulation& t, const ArcSpec& d);

}  // namespace clexp
