#pragma once

// Planar development of one cusp link surface: triangles are laid out by
// breadth-first traversal along side identifications from a seed triangle
// (the smallest corner slot), with the seed's first side on the horizontal
// axis. The result is a development, not an embedding; triangles may
// overlap across the cut locus.

#include "teichtet/metrics.hpp"

#include <array>
#include <string>
#include <vector>

namespace teichtet {

struct Vec2 {
    double x = 0;
    double y = 0;
};

struct PlacedTriangle {
    CornerSlot triangle;
    // Positions of the three corners, indexed by third_vertex in increasing
    // order (the corner on edge {v, w} comes before {v, w'} when w < w').
    std::array<Vec2, 3> pos;
    std::array<int, 3> corner_vertices;  // the w of each corner
};

struct ConeMarker {
    Vec2 pos;
    int link_vertex = 0;
    double theta = 0;
};

struct DevelopmentLayout {
    int cusp = 0;
    std::vector<PlacedTriangle> triangles;
    std::vector<ConeMarker> markers;  // where |theta - 2 pi| > tol
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    double max_side_mismatch = 0;  // placement drift vs side-class lengths
};

DevelopmentLayout develop_link(const RealizedStructure& rs, int cusp, double tol = kSingularTol);

/// SVG 1.1 document; byte-deterministic for identical input.
std::string development_svg(const DevelopmentLayout& layout);

}  // namespace teichtet
