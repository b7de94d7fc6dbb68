#pragma once

// Numerical studies over chart parameters: grid sweeps, the closed-form
// angle functions of the two-tetrahedron and Whitehead families, sampled
// injectivity reports, and a Newton search for the complete structure.

#include "teichtet/metrics.hpp"
#include "teichtet/teich.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace teichtet {

struct GridAxis {
    double min = 0;
    double max = 0;
    int steps = 2;  // >= 2 sample points per axis
};

struct SweepSpec {
    std::vector<GridAxis> grid;  // one axis per chart parameter; empty for dim 0
    bool with_residuals = false; // append mostow and worst gauss-bonnet columns
    bool with_shifts = false;    // append one column per wedge shift
};

struct SweepRow {
    std::vector<double> params;
    std::vector<double> thetas;  // empty when out of domain
    std::vector<double> extras;  // optional residual / shift columns, in header order
    bool in_domain = true;
};

/// Rows in lexicographic grid order (the last axis varies fastest).
std::vector<SweepRow> sweep(const Topology& topo, const KernelChart& chart, const SweepSpec& spec);

/// CSV with header param_1,...,param_d,theta_e0,...,flag; 17 significant
/// digits, LF line endings; out-of-domain rows leave the theta cells empty.
std::string sweep_csv(const Topology& topo, const KernelChart& chart, const SweepSpec& spec);

/// z - y for the triangle with sides (1, r, 1/r): z opposite r, y opposite
/// 1/r. Positive for r > 1, strictly increasing on the legal interval
/// ((sqrt 5 - 1)/2, (sqrt 5 + 1)/2).
double fig8_phi(double r);

/// The legal interval of fig8_phi.
double fig8_r_min();
double fig8_r_max();

/// (1/2)(t^3 - 1/t)(t^4 + 1 - 2 t^2 cos x)^{-1/2}; requires t > 0,
/// 0 < x < 2 pi, and a positive radicand.
double whitehead_phi(double t, double x);

/// sin(y/2) of the Whitehead angle map: whitehead_phi(t, x) for t >= 1 and
/// -whitehead_phi(1/t, x) for t <= 1.
double whitehead_sin_half_y(double t, double x);

struct AngleMapReport {
    std::vector<std::vector<double>> params;  // in-domain grid points
    std::vector<std::vector<double>> angles;  // basis-edge angle vectors
    std::vector<int> basis;                   // edge ids of the coordinates
    double min_distance = 0;                  // over distinct in-domain samples
    std::size_t witness_a = 0, witness_b = 0; // indices attaining it
    std::string verdict;
};

/// Samples params -> (theta at each basis edge) over the grid and reports
/// the minimal pairwise distance. Only certifies at the grid resolution.
AngleMapReport injectivity_grid(const Topology& topo, const KernelChart& chart, const SweepSpec& spec,
                                double resolution = 1e-6);

struct CompleteResult {
    bool converged = false;
    std::vector<double> params;
    double residual = 0;  // max |theta - 2 pi| over all edges at `params`
    int iterations = 0;
    bool jacobian_check_ok = true;
    std::string message;
};

/// Newton iteration on theta(basis edge) - 2 pi with a central-difference
/// Jacobian (step 1e-6, halved-step agreement check at 1e-5) and step
/// halving against domain exits. Zero-dimensional charts reduce to a direct
/// residual check.
CompleteResult find_complete(const Topology& topo, const KernelChart& chart,
                             const std::vector<double>& start = {});

}  // namespace teichtet
