#pragma once

// The exact linear-algebra core: the similarity system on log side lengths
// of the link surfaces, its kernel chart, the three dimension computations,
// and the linear relations among edge angles.
//
// Variables of the similarity system are side *classes* (so glued sides
// share a variable), valued as log Euclidean side lengths. For every
// tetrahedron the four corner triangles are similar, with the corner on
// edge {u, w} of the triangle at u corresponding to the corner at v on the
// edge carrying the same dihedral angle. On sides this correspondence reads
//
//   (u; v) <-> (v; u),   (u; w1) <-> (v; w2),   (u; w2) <-> (v; w1)
//
// for {w1, w2} = {0,1,2,3} \ {u, v}, where (u; f) is the side of the
// triangle at u lying on face f. Eliminating the similarity ratio leaves
// two ratio equations per corner pair; pairs (0,1), (0,2), (0,3) give six
// rows per tetrahedron. All entries are integers and all kernels are
// computed exactly.

#include "teichtet/exact.hpp"
#include "teichtet/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace teichtet {

struct SimilarityRowTag {
    int tet = 0;
    int corner_u = 0;
    int corner_v = 0;
    int ratio = 0;  // 0 or 1: which of the two ratio equations of the pair
};

struct SimilaritySystem {
    RatMatrix matrix;  // rows x side classes, entries in small integers
    std::vector<SimilarityRowTag> tags;
    std::size_t variables = 0;
};

SimilaritySystem build_similarity_system(const Topology& topo);

/// Kernel of the similarity system together with the cusp-scaling directions
/// and a normalized complement: the chart of the deformation space.
struct KernelChart {
    std::vector<RatVector> kernel_basis;
    std::vector<RatVector> cusp_scale_vectors;  // one indicator per cusp
    std::vector<RatVector> normalized_basis;    // vanish on every gauge side
    std::vector<int> gauge_sides;               // one side class per cusp, log length fixed to 0
    RatVector base_point;                       // all log lengths zero
    int dim = 0;                                // nullity - #cusps
};

/// Builds the chart; `gauge_sides` may pin the per-cusp unit side classes
/// (defaults to the smallest side class id of each cusp).
KernelChart kernel_chart(const Topology& topo, const SimilaritySystem& sys,
                         const std::optional<std::vector<int>>& gauge_sides = std::nullopt);

/// Edge classes minus vertex classes. Throws UsageError on free faces.
int dimension_formula(const Topology& topo);

/// Dimension via the 2-skeleton: d0 = 3 card(F) - card(E) gluings of the
/// ideal triangle complex, minus the first Betti number of each cusp link
/// graph. Must agree with dimension_formula on closed patterns.
struct SkeletonReport {
    int d0 = 0;
    std::vector<int> r;  // rank of pi_1 of each link 1-skeleton
    int dim = 0;
};

SkeletonReport dimension_skeleton(const Topology& topo);

/// One Gauss-Bonnet row per cusp: sum over edge defects, with multiplicity
/// the number of ends of the edge on that cusp. The right-hand side is
/// pi * chi of the doubled link surface, i.e. 2 pi chi(S) in every case;
/// rhs_pi stores it in units of pi.
struct AngleRelationSystem {
    RatMatrix matrix;  // cusps x edge classes
    RatVector rhs_pi;
    std::vector<int> cusp_ids;
};

AngleRelationSystem angle_relation_system(const Topology& topo);

/// theta_pivot = pi * const_pi + sum coeff * theta_basis.
struct AngleExpression {
    int edge = 0;
    Rational const_pi{0};
    std::vector<std::pair<int, Rational>> terms;  // (basis edge id, coefficient)
};

struct BasisEdges {
    std::vector<int> basis;  // non-pivot columns, size = dim
    std::vector<AngleExpression> expressions;  // one per edge, basis edges included as identities
};

/// Closed patterns only; verifies rank = #cusps and throws TopologyError
/// with a finding report otherwise.
BasisEdges basis_edges(const Topology& topo);

// Convenience overloads working straight from a pattern.
SimilaritySystem build_similarity_system(const GluingPattern& p);
KernelChart kernel_basis(const GluingPattern& p);
int dimension_formula(const GluingPattern& p);
SkeletonReport dimension_skeleton(const GluingPattern& p);
AngleRelationSystem angle_relation_system(const GluingPattern& p);
BasisEdges basis_edges(const GluingPattern& p);

}  // namespace teichtet
