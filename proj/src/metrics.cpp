#include "teichtet/metrics.hpp"

#include "teichtet/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace teichtet {

namespace {
constexpr double kPi = std::numbers::pi;
}

double ShiftCoordinates::partial_sum(int edge, std::size_t from, std::size_t to) const {
    const auto& v = by_edge[static_cast<std::size_t>(edge)];
    double s = 0;
    for (std::size_t i = from; i < to && i < v.size(); ++i) s += v[i];
    return s;
}

double ShiftCoordinates::cycle_sum(int edge) const {
    return partial_sum(edge, 0, by_edge[static_cast<std::size_t>(edge)].size());
}

RealizedStructure realize(const Topology& topo, const KernelChart& chart,
                          const std::vector<double>& params) {
    if (params.size() != static_cast<std::size_t>(chart.dim))
        throw UsageError("expected " + std::to_string(chart.dim) + " parameters, got " +
                         std::to_string(params.size()));
    for (double p : params)
        if (!std::isfinite(p)) throw DomainError("non-finite parameter");

    RealizedStructure rs;
    rs.topo = &topo;
    rs.params = params;

    const std::size_t nsides = topo.sides.size();
    rs.log_lengths.assign(nsides, 0.0);
    for (std::size_t k = 0; k < params.size(); ++k) {
        const RatVector& b = chart.normalized_basis[k];
        for (std::size_t c = 0; c < nsides; ++c)
            if (b[c] != 0) rs.log_lengths[c] += params[k] * static_cast<double>(b[c]);
    }
    rs.lengths.resize(nsides);
    for (std::size_t c = 0; c < nsides; ++c) rs.lengths[c] = std::exp(rs.log_lengths[c]);

    // Corner angles, one triangle at a time so each angle triple closes to pi.
    const int n = topo.pattern.tet_count();
    rs.corner_angles.assign(static_cast<std::size_t>(n) * 12, 0.0);
    for (int t = 0; t < n; ++t) {
        for (int v = 0; v < 4; ++v) {
            std::array<int, 3> faces{};
            std::array<double, 3> len{};
            int k = 0;
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                faces[static_cast<std::size_t>(k)] = f;
                len[static_cast<std::size_t>(k)] =
                    rs.lengths[static_cast<std::size_t>(topo.side_class_of({t, v, f}))];
                ++k;
            }
            const double perimeter = len[0] + len[1] + len[2];
            for (int i = 0; i < 3; ++i) {
                const double a = len[static_cast<std::size_t>(i)];
                if (!(perimeter - 2 * a > kTriangleMargin * perimeter))
                    throw DomainError("triangle inequality fails for the corner triangle at vertex " +
                                      std::to_string(v) + " of tetrahedron " + std::to_string(t) +
                                      ": side on face " + std::to_string(faces[static_cast<std::size_t>(i)]) +
                                      " has length " + std::to_string(a) +
                                      " against opposite sides summing to " + std::to_string(perimeter - a));
            }
            const auto angles = triangle_angles(len[0], len[1], len[2]);
            // Angle opposite the side on face f belongs to the corner on edge {v, f}.
            for (int i = 0; i < 3; ++i)
                rs.corner_angles[static_cast<std::size_t>(
                    encode_end({t, v, faces[static_cast<std::size_t>(i)]}))] = angles[static_cast<std::size_t>(i)];
        }
    }

    // Tetrahedron shapes from corner 0; the corner on edge {0, w} carries the
    // dihedral angle of the pair of {0, w}.
    for (int t = 0; t < n; ++t)
        rs.tet_shapes.emplace_back(rs.corner_angles[static_cast<std::size_t>(encode_end({t, 0, 1}))],
                                   rs.corner_angles[static_cast<std::size_t>(encode_end({t, 0, 2}))],
                                   rs.corner_angles[static_cast<std::size_t>(encode_end({t, 0, 3}))]);

    // Similarity diagnostic: all four corner triangles of a tetrahedron must
    // report the same angle at the same dihedral pair.
    for (int t = 0; t < n; ++t) {
        const auto& shape = rs.tet_shapes[static_cast<std::size_t>(t)];
        for (int v = 0; v < 4; ++v) {
            for (int w = 0; w < 4; ++w) {
                if (w == v) continue;
                const double got = rs.corner_angles[static_cast<std::size_t>(encode_end({t, v, w}))];
                const double want = shape.angles()[static_cast<std::size_t>(angle_pair(v, w))];
                rs.max_shape_discrepancy = std::max(rs.max_shape_discrepancy, std::abs(got - want));
            }
        }
    }

    // Cone angle around every edge, evaluated at both ends.
    for (const EdgeClass& ec : topo.edges) {
        EdgeAngle ea;
        ea.edge = ec.id;
        double sums[2] = {0, 0};
        for (int side = 0; side < 2; ++side) {
            const LinkVertexClass& lv =
                topo.link_vertices[static_cast<std::size_t>(ec.ends[static_cast<std::size_t>(side)])];
            for (const EndSlot& e : lv.corners)
                sums[side] += rs.corner_angles[static_cast<std::size_t>(encode_end(e))];
        }
        ea.theta = sums[0];
        ea.theta_head = sums[1];
        rs.max_end_disagreement = std::max(rs.max_end_disagreement, std::abs(sums[0] - sums[1]));
        rs.edge_angles.push_back(ea);
    }

    // Gauss-Bonnet per cusp: interior vertices contribute 2 pi - theta,
    // boundary vertices pi - theta; the total is pi chi(double) = 2 pi chi.
    for (const LinkSurface& ls : topo.links) {
        CuspReport cr;
        cr.cusp = ls.cusp;
        cr.euler_char = ls.euler_char;
        double defect = 0;
        for (int lvid : ls.link_vertices) {
            const LinkVertexClass& lv = topo.link_vertices[static_cast<std::size_t>(lvid)];
            double theta = 0;
            for (const EndSlot& e : lv.corners)
                theta += rs.corner_angles[static_cast<std::size_t>(encode_end(e))];
            defect += (lv.boundary ? kPi : 2 * kPi) - theta;
        }
        cr.gauss_bonnet_residual = std::abs(defect - 2 * kPi * ls.euler_char);
        rs.cusp_reports.push_back(cr);
    }

    // Shift coordinates: per wedge, the log ratio of the head-vertex sides on
    // the exit and enter faces.
    for (const EdgeClass& ec : topo.edges) {
        std::vector<double> shifts;
        for (const Wedge& w : ec.wedges) {
            const int head_class = topo.end_class_of({w.tet, w.end0, w.end1});
            const int head_vertex = (head_class == ec.ends[1]) ? w.end0 : w.end1;
            const double exit_len = rs.log_lengths[static_cast<std::size_t>(
                topo.side_class_of({w.tet, head_vertex, w.exit}))];
            const double enter_len = rs.log_lengths[static_cast<std::size_t>(
                topo.side_class_of({w.tet, head_vertex, w.enter}))];
            shifts.push_back(exit_len - enter_len);
        }
        rs.shifts.by_edge.push_back(std::move(shifts));
    }

    return rs;
}

std::vector<CuspReport> gauss_bonnet_residuals(const RealizedStructure& rs) { return rs.cusp_reports; }

std::vector<EdgeReportRow> edge_report(const RealizedStructure& rs, double tol) {
    std::vector<EdgeReportRow> out;
    for (const EdgeAngle& ea : rs.edge_angles) {
        if (std::abs(ea.theta - ea.theta_head) > tol)
            throw InternalError("cone angle of edge " + std::to_string(ea.edge) +
                                " disagrees between its two ends by " +
                                std::to_string(std::abs(ea.theta - ea.theta_head)));
        EdgeReportRow row;
        row.edge = ea.edge;
        row.theta = ea.theta;
        row.kind = (std::abs(ea.theta - 2 * kPi) <= tol) ? EdgeKind::regular : EdgeKind::singular;
        out.push_back(row);
    }
    return out;
}

ShiftCoordinates shift_coordinates(const RealizedStructure& rs) { return rs.shifts; }

double mostow_residual(const RealizedStructure& rs) {
    double m = 0;
    for (const EdgeAngle& ea : rs.edge_angles) m = std::max(m, std::abs(ea.theta - 2 * kPi));
    return m;
}

}  // namespace teichtet
