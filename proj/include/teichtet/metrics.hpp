#pragma once

// Numerical realization of a deformation-space point: side lengths, corner
// angles, tetrahedron shapes, cone angles along edges, Gauss-Bonnet
// residuals, and shift coordinates.
//
// Edge orientation convention: every edge class is oriented from ends[0]
// (the link vertex holding its smallest end slot) towards ends[1]. The
// shift of one wedge, walking from its enter face to its exit face, is
//
//   log(length(side at the head vertex on the exit face) /
//       length(side at the head vertex on the enter face))
//
// measured on the horosphere at the head end; summing consecutive shifts
// telescopes, so closed wedge cycles sum to zero.

#include "teichtet/shape.hpp"
#include "teichtet/teich.hpp"
#include "teichtet/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace teichtet {

inline constexpr double kTriangleMargin = 1e-12;  // slack for strict triangle inequalities
inline constexpr double kSingularTol = 1e-9;      // default |theta - 2 pi| tolerance

enum class EdgeKind { regular, singular };

struct EdgeAngle {
    int edge = 0;
    double theta = 0;       // computed at the tail end
    double theta_head = 0;  // same quantity from the head end
};

struct CuspReport {
    int cusp = 0;
    int euler_char = 0;
    double gauss_bonnet_residual = 0;
};

/// Shift coordinates of a realized structure: one value per wedge of each
/// edge (the consecutive-face shifts, in wedge order).
struct ShiftCoordinates {
    std::vector<std::vector<double>> by_edge;

    /// Sum of the shifts of edge `edge` over wedge positions [from, to).
    double partial_sum(int edge, std::size_t from, std::size_t to) const;
    /// Sum around the full wedge cycle (zero for closed edges, up to float).
    double cycle_sum(int edge) const;
};

struct RealizedStructure {
    const Topology* topo = nullptr;
    std::vector<double> params;
    std::vector<double> log_lengths;  // per side class
    std::vector<double> lengths;
    std::vector<double> corner_angles;  // indexed by encode_end(t, v, w)
    std::vector<TetShape> tet_shapes;
    std::vector<EdgeAngle> edge_angles;
    std::vector<CuspReport> cusp_reports;
    ShiftCoordinates shifts;

    double max_end_disagreement = 0;   // max |theta(tail) - theta(head)|
    double max_shape_discrepancy = 0;  // max corner-angle deviation within a tetrahedron

    double theta(int edge) const { return edge_angles[static_cast<std::size_t>(edge)].theta; }
};

/// Evaluates the chart at `params` (length chart.dim). Throws DomainError,
/// naming the first corner triangle whose strict triangle inequality fails.
RealizedStructure realize(const Topology& topo, const KernelChart& chart,
                          const std::vector<double>& params);

/// Per-cusp |sum of cone defects - pi chi(double)|.
std::vector<CuspReport> gauss_bonnet_residuals(const RealizedStructure& rs);

struct EdgeReportRow {
    int edge = 0;
    double theta = 0;
    EdgeKind kind = EdgeKind::regular;
};

/// Classifies every edge; throws InternalError if the two ends of an edge
/// disagree about theta by more than tol.
std::vector<EdgeReportRow> edge_report(const RealizedStructure& rs, double tol = kSingularTol);

ShiftCoordinates shift_coordinates(const RealizedStructure& rs);

/// max_e |theta(e) - 2 pi|.
double mostow_residual(const RealizedStructure& rs);

}  // namespace teichtet
