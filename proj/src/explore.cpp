#include "teichtet/explore.hpp"

#include "teichtet/errors.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace teichtet {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::vector<double>> grid_points(const SweepSpec& spec) {
    for (const GridAxis& a : spec.grid) {
        if (a.steps < 2) throw UsageError("grid axes need at least 2 steps");
        if (!(a.min <= a.max)) throw UsageError("grid axis has min > max");
    }
    std::vector<std::vector<double>> pts;
    std::vector<double> cur(spec.grid.size(), 0.0);
    const std::function<void(std::size_t)> rec = [&](std::size_t axis) {
        if (axis == spec.grid.size()) {
            pts.push_back(cur);
            return;
        }
        const GridAxis& a = spec.grid[axis];
        for (int i = 0; i < a.steps; ++i) {
            cur[axis] = a.min + (a.max - a.min) * static_cast<double>(i) / static_cast<double>(a.steps - 1);
            rec(axis + 1);
        }
    };
    rec(0);
    return pts;
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::vector<SweepRow> sweep(const Topology& topo, const KernelChart& chart, const SweepSpec& spec) {
    if (spec.grid.size() != static_cast<std::size_t>(chart.dim)) {
        if (chart.dim == 0 && !spec.grid.empty())
            throw UsageError("this chart is zero-dimensional; a nonempty grid cannot be swept");
        throw UsageError("grid has " + std::to_string(spec.grid.size()) + " axes but the chart has " +
                         std::to_string(chart.dim) + " parameters");
    }
    std::vector<SweepRow> rows;
    for (const auto& p : grid_points(spec)) {
        SweepRow row;
        row.params = p;
        try {
            const RealizedStructure rs = realize(topo, chart, p);
            for (const EdgeAngle& ea : rs.edge_angles) row.thetas.push_back(ea.theta);
            if (spec.with_residuals) {
                row.extras.push_back(mostow_residual(rs));
                double worst_gb = 0;
                for (const CuspReport& cr : rs.cusp_reports)
                    worst_gb = std::max(worst_gb, cr.gauss_bonnet_residual);
                row.extras.push_back(worst_gb);
            }
            if (spec.with_shifts) {
                for (const auto& per_edge : rs.shifts.by_edge)
                    for (double s : per_edge) row.extras.push_back(s);
            }
            row.in_domain = true;
        } catch (const DomainError&) {
            row.in_domain = false;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string sweep_csv(const Topology& topo, const KernelChart& chart, const SweepSpec& spec) {
    std::ostringstream out;
    std::size_t extra_cols = 0;
    for (int k = 0; k < chart.dim; ++k) out << "param_" << (k + 1) << ",";
    for (std::size_t e = 0; e < topo.edges.size(); ++e) out << "theta_e" << e << ",";
    if (spec.with_residuals) {
        out << "mostow_residual,gauss_bonnet_residual,";
        extra_cols += 2;
    }
    if (spec.with_shifts) {
        for (const EdgeClass& e : topo.edges) {
            for (std::size_t w = 0; w < e.wedges.size(); ++w) {
                out << "shift_e" << e.id << "_w" << w << ",";
                ++extra_cols;
            }
        }
    }
    out << "flag\n";
    for (const SweepRow& row : sweep(topo, chart, spec)) {
        for (double p : row.params) out << fmt17(p) << ",";
        if (row.in_domain) {
            for (double t : row.thetas) out << fmt17(t) << ",";
            for (double x : row.extras) out << fmt17(x) << ",";
            out << "ok\n";
        } else {
            for (std::size_t e = 0; e < topo.edges.size() + extra_cols; ++e) out << ",";
            out << "domain\n";
        }
    }
    return out.str();
}

double fig8_r_min() { return (std::sqrt(5.0) - 1.0) / 2.0; }
double fig8_r_max() { return (std::sqrt(5.0) + 1.0) / 2.0; }

double fig8_phi(double r) {
    if (!(r > fig8_r_min() && r < fig8_r_max()))
        throw DomainError("r = " + std::to_string(r) + " outside the legal interval (" +
                          std::to_string(fig8_r_min()) + ", " + std::to_string(fig8_r_max()) + ")");
    const double z = std::acos(0.5 * (r + 1.0 / r - r * r * r));
    const double y = std::acos(0.5 * (1.0 / r + r - 1.0 / (r * r * r)));
    return z - y;
}

double whitehead_phi(double t, double x) {
    if (!(t > 0)) throw DomainError("whitehead_phi requires t > 0");
    if (!(x > 0 && x < 2 * kPi)) throw DomainError("whitehead_phi requires 0 < x < 2 pi");
    const double rad = t * t * t * t + 1.0 - 2.0 * t * t * std::cos(x);
    if (!(rad > 0)) throw DomainError("whitehead_phi radicand is not positive");
    return 0.5 * (t * t * t - 1.0 / t) / std::sqrt(rad);
}

double whitehead_sin_half_y(double t, double x) {
    return t >= 1.0 ? whitehead_phi(t, x) : -whitehead_phi(1.0 / t, x);
}

AngleMapReport injectivity_grid(const Topology& topo, const KernelChart& chart, const SweepSpec& spec,
                                double resolution) {
    AngleMapReport rep;
    const BasisEdges be = basis_edges(topo);
    rep.basis = be.basis;
    for (const SweepRow& row : sweep(topo, chart, spec)) {
        if (!row.in_domain) continue;
        std::vector<double> v;
        for (int e : be.basis) v.push_back(row.thetas[static_cast<std::size_t>(e)]);
        rep.params.push_back(row.params);
        rep.angles.push_back(std::move(v));
    }
    if (rep.angles.size() < 2) {
        rep.min_distance = 0;
        rep.verdict = "vacuous: fewer than two in-domain samples";
        return rep;
    }
    double best = -1;
    for (std::size_t i = 0; i < rep.angles.size(); ++i) {
        for (std::size_t j = i + 1; j < rep.angles.size(); ++j) {
            double d2 = 0;
            for (std::size_t k = 0; k < rep.angles[i].size(); ++k) {
                const double d = rep.angles[i][k] - rep.angles[j][k];
                d2 += d * d;
            }
            const double d = std::sqrt(d2);
            if (best < 0 || d < best) {
                best = d;
                rep.witness_a = i;
                rep.witness_b = j;
            }
        }
    }
    rep.min_distance = best;
    rep.verdict = best > resolution
                      ? "no collision at resolution " + std::to_string(resolution)
                      : "COLLISION CANDIDATE: distinct parameters with angle distance " + std::to_string(best);
    return rep;
}

namespace {

/// theta(basis edge) - 2 pi at x; throws DomainError outside the chart domain.
std::vector<double> residual_vector(const Topology& topo, const KernelChart& chart,
                                    const std::vector<int>& basis, const std::vector<double>& x) {
    const RealizedStructure rs = realize(topo, chart, x);
    std::vector<double> f;
    for (int e : basis) f.push_back(rs.theta(e) - 2 * kPi);
    return f;
}

double max_abs(const std::vector<double>& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

/// Central-difference Jacobian column for coordinate k with step h; falls
/// back to one-sided differences at domain boundaries.
std::vector<double> jacobian_column(const Topology& topo, const KernelChart& chart,
                                    const std::vector<int>& basis, const std::vector<double>& x,
                                    std::size_t k, double h) {
    std::vector<double> xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    try {
        const auto fp = residual_vector(topo, chart, basis, xp);
        const auto fm = residual_vector(topo, chart, basis, xm);
        std::vector<double> col(fp.size());
        for (std::size_t i = 0; i < fp.size(); ++i) col[i] = (fp[i] - fm[i]) / (2 * h);
        return col;
    } catch (const DomainError&) {
        const auto f0 = residual_vector(topo, chart, basis, x);
        for (int side = 0; side < 2; ++side) {
            std::vector<double> x1 = x;
            x1[k] += (side == 0 ? h : -h);
            try {
                const auto f1 = residual_vector(topo, chart, basis, x1);
                std::vector<double> col(f1.size());
                for (std::size_t i = 0; i < f1.size(); ++i)
                    col[i] = (f1[i] - f0[i]) / (side == 0 ? h : -h);
                return col;
            } catch (const DomainError&) {
            }
        }
        throw;
    }
}

/// Solve J d = -f by Gaussian elimination with partial pivoting.
std::vector<double> newton_step(std::vector<std::vector<double>> J, std::vector<double> f) {
    const std::size_t n = f.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(J[r][c]) > std::abs(J[pivot][c])) pivot = r;
        if (std::abs(J[pivot][c]) < 1e-14) throw DomainError("singular Jacobian in Newton step");
        std::swap(J[pivot], J[c]);
        std::swap(f[pivot], f[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const double m = J[r][c] / J[c][c];
            for (std::size_t k = c; k < n; ++k) J[r][k] -= m * J[c][k];
            f[r] -= m * f[c];
        }
    }
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = -f[i] / J[i][i];
    return d;
}

}  // namespace

CompleteResult find_complete(const Topology& topo, const KernelChart& chart,
                             const std::vector<double>& start) {
    CompleteResult res;
    const std::size_t dim = static_cast<std::size_t>(chart.dim);

    if (dim == 0) {
        const RealizedStructure rs = realize(topo, chart, {});
        res.residual = mostow_residual(rs);
        res.converged = res.residual < kSingularTol;
        res.message = res.converged ? "zero-dimensional chart; the unique structure is complete"
                                    : "zero-dimensional chart; the unique structure has residual " +
                                          std::to_string(res.residual);
        return res;
    }

    const BasisEdges be = basis_edges(topo);
    if (be.basis.size() != dim) throw InternalError("basis edge count does not match the chart dimension");

    std::vector<double> x = start.empty() ? std::vector<double>(dim, 0.0) : start;
    if (x.size() != dim) throw UsageError("start point has the wrong dimension");

    constexpr int kMaxIter = 100;
    constexpr double kTol = 1e-10;
    constexpr double kStep = 1e-6;
    double best_residual = -1;

    for (int iter = 0; iter < kMaxIter; ++iter) {
        res.iterations = iter;
        std::vector<double> f;
        try {
            f = residual_vector(topo, chart, be.basis, x);
        } catch (const DomainError& e) {
            res.message = std::string("left the domain: ") + e.what();
            return res;
        }
        best_residual = max_abs(f);
        if (best_residual < kTol) {
            res.converged = true;
            break;
        }

        // Jacobian by central differences, with a halved-step agreement check.
        std::vector<std::vector<double>> J(dim, std::vector<double>(dim, 0.0));
        try {
            for (std::size_t k = 0; k < dim; ++k) {
                const auto col = jacobian_column(topo, chart, be.basis, x, k, kStep);
                const auto col2 = jacobian_column(topo, chart, be.basis, x, k, kStep / 2);
                for (std::size_t i = 0; i < dim; ++i) {
                    J[i][k] = col2[i];
                    const double scale = std::max(1.0, std::abs(col2[i]));
                    if (std::abs(col[i] - col2[i]) > 1e-5 * scale) res.jacobian_check_ok = false;
                }
            }
        } catch (const DomainError& e) {
            res.message = std::string("cannot difference the Jacobian: ") + e.what();
            return res;
        }

        std::vector<double> d;
        try {
            d = newton_step(J, f);
        } catch (const DomainError& e) {
            res.message = e.what();
            return res;
        }

        // Step halving against domain exits.
        double scale = 1.0;
        bool moved = false;
        while (scale >= 1e-12) {
            std::vector<double> xn = x;
            for (std::size_t k = 0; k < dim; ++k) xn[k] += scale * d[k];
            try {
                residual_vector(topo, chart, be.basis, xn);
                x = std::move(xn);
                moved = true;
                break;
            } catch (const DomainError&) {
                scale /= 2;
            }
        }
        if (!moved) {
            res.message = "line search hit the domain boundary (step below 1e-12)";
            res.residual = best_residual;
            res.params = x;
            return res;
        }
    }

    res.params = x;
    const RealizedStructure rs = realize(topo, chart, x);
    res.residual = mostow_residual(rs);
    if (res.converged && res.residual >= kSingularTol) {
        // The basis angles reached 2 pi but a dependent edge did not: the
        // Gauss-Bonnet constants are incompatible with an all-regular
        // structure (every link surface would need chi = 0).
        res.converged = false;
        res.message = "basis edges reached 2 pi but a dependent edge is singular; no complete "
                      "structure exists for this triangulation";
    } else if (res.converged) {
        res.message = "converged";
    } else if (res.message.empty()) {
        res.message = "no convergence after 100 iterations; best basis residual " +
                      std::to_string(best_residual);
    }
    return res;
}

}  // namespace teichtet
