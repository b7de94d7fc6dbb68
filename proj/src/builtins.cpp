#include "teichtet/errors.hpp"
#include "teichtet/pattern.hpp"

#include <array>

namespace teichtet {

namespace {

// Canonical triangulation files for the built-in manifolds. Each table was
// validated against the combinatorial invariants asserted in the test suite
// (edge/cusp counts, link topology, deformation dimension, realized angle
// families).

// Two tetrahedra glued face to face so that all twelve edge slots fall into
// a single class of degree 12 around one cusp (genus-2 link, dimension 0).
constexpr const char* kExample1 =
    "tetrahedra 2\n"
    "glue 0:0 1:0 perm=0123\n"
    "glue 0:1 1:1 perm=2130\n"
    "glue 0:2 1:2 perm=1320\n"
    "glue 0:3 1:3 perm=1203\n";

// The two-tetrahedron triangulation of the figure-eight knot complement:
// two edge classes of degree 6, one cusp with a torus link, and first
// homology Z. Exactly two 2-tetrahedron patterns (up to relabeling) realize
// the one-parameter side-length family {1, r, r^2, 1/r} with class
// multiplicities (4, 4, 2, 2) on the interval bounded by the golden ratio;
// the other one (the knot complement's sister) carries 5-torsion in first
// homology and is excluded.
constexpr const char* kFigureEight =
    "tetrahedra 2\n"
    "glue 0:0 1:0 perm=0123\n"
    "glue 0:1 1:2 perm=1203\n"
    "glue 0:2 1:3 perm=1032\n"
    "glue 0:3 1:1 perm=3021\n";

// Four tetrahedra A_i B_i C_i D_i (vertices 0,1,2,3) with the eight face
// identifications B1C1D1=C2D2B2, A1C1D1=C2D2A2, D2B2A2=B3A3D3,
// C2B2A2=B3A3C3, B3C3D3=C4D4B4, A3C3D3=C4D4A4, D4B4A4=B1A1D1,
// C4B4A4=B1A1C1. Two edge classes, one cusp, genus-3 link.
constexpr const char* kExample3 =
    "tetrahedra 4\n"
    "glue 0:0 1:0 perm=0231\n"
    "glue 0:1 1:1 perm=2130\n"
    "glue 1:2 2:2 perm=3021\n"
    "glue 1:3 2:3 perm=2013\n"
    "glue 2:0 3:0 perm=0231\n"
    "glue 2:1 3:1 perm=2130\n"
    "glue 3:2 0:2 perm=3021\n"
    "glue 3:3 0:3 perm=2013\n";

// The Whitehead link complement as four tetrahedra around a common axis
// edge (the diagonal of the ideal octahedron): edge degrees {4, 6, 6, 8},
// two torus cusps meeting 12 and 4 corner triangles. The complete structure
// sits at the octahedral point where every tetrahedron has dihedral angles
// (pi/2, pi/4, pi/4); the side lengths form the two-parameter monomial
// family in (t, s) with exponents (0,0) (1,0) (2,0) (0,1) (1,-1) (2,-1)
// (3,-1) and class multiplicities (3, 6, 3, 4, 2, 4, 2).
constexpr const char* kWhitehead =
    "tetrahedra 4\n"
    "glue 0:0 1:0 perm=0231\n"
    "glue 0:1 3:0 perm=2031\n"
    "glue 0:2 1:3 perm=1032\n"
    "glue 0:3 3:2 perm=0132\n"
    "glue 1:1 2:0 perm=3012\n"
    "glue 1:2 2:3 perm=0132\n"
    "glue 2:1 3:1 perm=2130\n"
    "glue 2:2 3:3 perm=1032\n";

struct Entry {
    const char* name;
    const char* text;
    const char* description;
};

constexpr std::array<Entry, 4> kCatalog{{
    {"example1_thurston", kExample1,
     "two tetrahedra, one edge class, one cusp; rigid (dimension 0)"},
    {"figure_eight", kFigureEight,
     "figure-eight knot complement: two tetrahedra, two edges, one cusp (dimension 1)"},
    {"example3_genus3", kExample3,
     "four tetrahedra, one cusp with a genus-3 link (dimension 1)"},
    {"whitehead", kWhitehead,
     "Whitehead link complement: four tetrahedra, four edges, two cusps (dimension 2)"},
}};

}  // namespace

GluingPattern builtin(const std::string& name) {
    for (const Entry& e : kCatalog) {
        if (name == e.name) {
            if (e.text[0] == '\0') throw InternalError("builtin table not frozen yet");
            return parse_pattern(e.text);
        }
    }
    throw UsageError("unknown builtin '" + name + "' (see the 'examples' command)");
}

std::vector<BuiltinInfo> builtin_catalog() {
    std::vector<BuiltinInfo> out;
    for (const Entry& e : kCatalog) out.push_back({e.name, e.description});
    return out;
}

}  // namespace teichtet
