#pragma once

// Orbit classes of a gluing pattern and the cusp link surfaces.
//
// Slot vocabulary (all indices 0-based):
//   corner slot  (t, v)      vertex v of tetrahedron t
//   edge slot    (t, {i,j})  edge of t with endpoints i < j
//   end slot     (t, v, w)   the end at v of edge {v,w} of t
//   side slot    (t, v, f)   the side of the corner triangle at (t, v)
//                            lying on face f (v != f)
//
// The corner triangle at (t, v) is the horospherical cross-section of t at
// vertex v: its corners sit on the three edges {v, w}, w != v, and its side
// on face f joins the corners at the two edges {v, a}, {v, b} where
// {a, b} = {0,1,2,3} \ {v, f}. The corner of the triangle on edge {v, w}
// carries the dihedral angle of the edge pair of {v, w} (opposite edges of a
// tetrahedron carry equal dihedral angles).
//
// A gluing (A, f) -> (B, g) with vertex map s identifies, for all vertices
// x, y on face f:
//   corner (A, x)    ~ (B, s(x))
//   edge   (A,{x,y}) ~ (B, {s(x), s(y)})
//   end    (A, x, y) ~ (B, s(x), s(y))
//   side   (A, x, f) ~ (B, s(x), g)
// Orbits of these identifications are the classes below; class ids are
// assigned in increasing order of each class's minimal slot, so ids are
// reproducible for identical input.
//
// Wedge cycles: the two faces of t containing edge {i, j} are the
// complementary pair {a, b}. Traversal of the faces around an edge starts at
// the class's minimal edge slot, enters through the smaller complementary
// face and exits through the larger one, then repeatedly crosses the gluing
// at the exit face. For a closed edge this returns to the start and the
// wedge list is cyclic; when a free face is hit the walk is completed in the
// other direction and the list is a chain. A closed walk that returns with
// the two ends of the edge exchanged does not bound a manifold neighborhood
// of the edge; analyze() rejects such patterns.

#include "teichtet/pattern.hpp"

#include <array>
#include <optional>
#include <vector>

namespace teichtet {

struct CornerSlot {
    int tet = 0;
    int vertex = 0;
    auto operator<=>(const CornerSlot&) const = default;
};

struct EdgeSlot {
    int tet = 0;
    int lo = 0;
    int hi = 0;  // lo < hi
    auto operator<=>(const EdgeSlot&) const = default;
};

struct EndSlot {
    int tet = 0;
    int vertex = 0;  // the end is at this vertex
    int other = 0;   // other endpoint of the edge
    auto operator<=>(const EndSlot&) const = default;
};

struct SideSlot {
    int tet = 0;
    int vertex = 0;
    int face = 0;  // vertex != face
    auto operator<=>(const SideSlot&) const = default;
};

/// One tetrahedron wedge in the walk around an edge: the edge {end0, end1}
/// of `tet`, entered through face `enter` and left through face `exit`.
/// end0/end1 are ordered consistently along the whole walk (the gluings map
/// slot ends onto each other).
struct Wedge {
    int tet = 0;
    int end0 = 0;
    int end1 = 0;
    int enter = 0;
    int exit = 0;
};

/// Dihedral-angle pair index of an edge: {01,23} -> 0, {02,13} -> 1,
/// {03,12} -> 2 (the alpha/beta/gamma slots of TetShape).
int angle_pair(int i, int j);

struct EdgeClass {
    int id = 0;
    std::vector<EdgeSlot> slots;
    std::vector<Wedge> wedges;  // cyclic when closed, a chain otherwise
    bool closed = true;
    // Link-vertex classes of the two ends. The edge is oriented from
    // ends[0] (tail, the class holding the smallest end slot) to ends[1].
    std::array<int, 2> ends{-1, -1};
};

struct VertexClass {
    int id = 0;
    std::vector<CornerSlot> corners;
};

struct SideClass {
    int id = 0;
    std::vector<SideSlot> slots;  // size 2 (interior) or 1 (boundary)
    bool boundary = false;
    int cusp = 0;
};

/// A vertex of a link surface: one orbit of edge ends. Its corners, listed
/// as end slots (t, v, w), are exactly the corners of the corner triangles
/// (t, v) sitting on the edges {v, w} of the orbit.
struct LinkVertexClass {
    int id = 0;
    std::vector<EndSlot> corners;
    int edge_class = -1;
    int end_index = 0;  // 0 = tail of the edge, 1 = head
    bool boundary = false;
    int cusp = 0;
};

struct LinkSurface {
    int cusp = 0;                       // vertex class id
    std::vector<CornerSlot> triangles;  // corner slots at this cusp
    std::vector<int> sides;             // side class ids
    std::vector<int> link_vertices;     // link vertex class ids
    std::vector<int> boundary_sides;    // subset of `sides`
    int euler_char = 0;
    bool closed = true;
    bool orientable = true;
    std::optional<int> genus;  // only for closed orientable surfaces
};

/// Everything derived from the combinatorics in one pass.
struct Topology {
    GluingPattern pattern;
    std::vector<EdgeClass> edges;
    std::vector<VertexClass> vertices;
    std::vector<SideClass> sides;
    std::vector<LinkVertexClass> link_vertices;
    std::vector<LinkSurface> links;
    int face_classes = 0;  // glued pairs count once, free faces once

    const LinkSurface& link_of_cusp(int cusp_id) const;
    int side_class_of(const SideSlot& s) const;
    int vertex_class_of(const CornerSlot& c) const;
    int end_class_of(const EndSlot& e) const;
    int edge_class_of(const EdgeSlot& e) const;

    /// Endpoints of a side: the corners (as end slots) of the triangle
    /// (t, v) adjacent to the side, in increasing order of the third vertex.
    static std::array<EndSlot, 2> side_endpoints(const SideSlot& s);

    // Flat lookup tables, indexed by slot encodings.
    std::vector<int> side_class_idx;    // 12 per tet
    std::vector<int> vertex_class_idx;  // 4 per tet
    std::vector<int> end_class_idx;     // 12 per tet
    std::vector<int> edge_class_idx;    // 6 per tet
};

/// Throws TopologyError when an edge walk closes with its ends exchanged
/// (no manifold triangulation does this).
Topology analyze(const GluingPattern& p);

std::vector<EdgeClass> compute_edge_classes(const GluingPattern& p);
std::vector<VertexClass> compute_cusps(const GluingPattern& p);
std::vector<LinkSurface> build_link_surfaces(const GluingPattern& p);

// Slot encodings shared with the lookup tables.
int encode_corner(const CornerSlot& c);
int encode_edge(const EdgeSlot& e);
int encode_end(const EndSlot& e);
int encode_side(const SideSlot& s);

}  // namespace teichtet
