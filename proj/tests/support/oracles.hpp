#pragma once

// Test-support: independent oracles and common fixtures.

#include "teichtet/errors.hpp"
#include "teichtet/explore.hpp"
#include "teichtet/metrics.hpp"
#include "teichtet/pattern.hpp"
#include "teichtet/teich.hpp"
#include "teichtet/topology.hpp"

#include "calibrate.hpp"

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace teichtet::testsupport {

/// Angles of the Euclidean triangle with sides (1, r, 1/r): x opposite the
/// side of length 1, y opposite 1/r, z opposite r. Independent law-of-cosines
/// route used as the oracle for the two-tetrahedron and genus-3 families.
struct GoldenAngles {
    double x, y, z;
};

inline GoldenAngles golden_triangle_angles(double r) {
    const double a = 1.0, b = r, c = 1.0 / r;
    const double x = std::acos((b * b + c * c - a * a) / (2 * b * c));
    const double y = std::acos((a * a + b * b - c * c) / (2 * a * b));
    const double z = std::acos((a * a + c * c - b * b) / (2 * a * c));
    return {x, y, z};
}

struct ChartFixture {
    Topology topo;
    SimilaritySystem sys;
    KernelChart chart;
};

inline ChartFixture make_fixture(const GluingPattern& p,
                                 const std::optional<std::vector<int>>& gauge = std::nullopt) {
    Topology topo = analyze(p);
    SimilaritySystem sys = build_similarity_system(topo);
    KernelChart chart = kernel_chart(topo, sys, gauge);
    return {std::move(topo), std::move(sys), std::move(chart)};
}

/// Exponent multiset of the figure-eight length family {1, r, r^2, 1/r}.
inline std::map<int, std::multiset<int>> fig8_exponent_table(int cusp) {
    return {{cusp, {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, -1, -1}}};
}

/// Exponent multiset of the genus-3 family {1, 1/r, 1/r^2, r}.
inline std::map<int, std::multiset<int>> example3_exponent_table(int cusp) {
    return {{cusp, {0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1, -1, -1, -1,
                    -2, -2, -2, -2, 1, 1, 1, 1}}};
}

/// Per-cusp exponent-pair multisets of the Whitehead family in (t, s),
/// keyed by the link's triangle count (12 and 4).
inline std::map<int, std::multiset<std::array<int, 2>>> whitehead_exponent_table(const Topology& topo) {
    int big = -1, small = -1;
    for (const LinkSurface& ls : topo.links) {
        if (ls.triangles.size() == 12) big = ls.cusp;
        if (ls.triangles.size() == 4) small = ls.cusp;
    }
    if (big < 0 || small < 0) throw std::runtime_error("unexpected whitehead link split");
    std::map<int, std::multiset<std::array<int, 2>>> target;
    target[big] = {{0, 0}, {0, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {2, 0}, {2, 0}, {0, 1},
                   {0, 1}, {1, -1}, {1, -1}, {2, -1}, {2, -1}, {2, -1}, {2, -1}, {3, -1}, {3, -1}};
    target[small] = {{0, 0}, {1, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 1}};
    return target;
}

/// Calibrated one-parameter fixture: chart re-gauged so side lengths equal
/// r^{a_c} exactly, plus the map log r = rho * u.
struct Family1D {
    ChartFixture fx;
    Calibration1D cal;
};

inline Family1D make_family_1d(const std::string& builtin_name) {
    GluingPattern p = builtin(builtin_name);
    ChartFixture fx0 = make_fixture(p);
    const auto table = builtin_name == "figure_eight"
                           ? fig8_exponent_table(fx0.topo.links.front().cusp)
                           : example3_exponent_table(fx0.topo.links.front().cusp);
    auto cal0 = calibrate_1d(fx0.topo, fx0.chart, table);
    if (!cal0) throw std::runtime_error("family calibration failed for " + builtin_name);
    // Re-gauge on a class with exponent 0 so lengths match the table exactly.
    int gauge = -1;
    for (std::size_t c = 0; c < cal0->exponents.size(); ++c)
        if (cal0->exponents[c] == 0) {
            gauge = static_cast<int>(c);
            break;
        }
    ChartFixture fx = make_fixture(p, std::vector<int>{gauge});
    auto cal = calibrate_1d(fx.topo, fx.chart, table);
    if (!cal) throw std::runtime_error("re-gauged calibration failed for " + builtin_name);
    return {std::move(fx), *cal};
}

/// Largest u >= 0 with realize(topo, chart, dir * u) in the domain,
/// by bisection.
inline double domain_extent(const ChartFixture& fx, const std::vector<double>& dir) {
    double lo = 0, hi = 1e-3;
    const auto ok = [&](double u) {
        std::vector<double> params;
        for (double d : dir) params.push_back(d * u);
        try {
            realize(fx.topo, fx.chart, params);
            return true;
        } catch (const DomainError&) {
            return false;
        }
    };
    if (!ok(0)) throw std::runtime_error("base point out of domain");
    while (ok(hi) && hi < 1e6) {
        lo = hi;
        hi *= 2;
    }
    for (int i = 0; i < 80; ++i) {
        const double mid = (lo + hi) / 2;
        (ok(mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace teichtet::testsupport
