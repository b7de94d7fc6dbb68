#include "teichtet/errors.hpp"
#include "teichtet/explore.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace teichtet;
namespace ts = teichtet::testsupport;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("fig8_phi: values, domain, monotonicity") {
    CHECK(std::abs(fig8_phi(1.0)) < 1e-15);

    // Independent oracle: z - y by the general law-of-cosines solver.
    for (double r : {0.75, 0.9, 1.2, 1.5}) {
        const ts::GoldenAngles g = ts::golden_triangle_angles(r);
        CHECK(fig8_phi(r) == doctest::Approx(g.z - g.y).epsilon(1e-12));
    }
    CHECK(fig8_phi(1.2) > 0);
    CHECK(fig8_phi(0.8) < 0);

    CHECK_THROWS_AS(fig8_phi(fig8_r_max() + 1e-9), DomainError);
    CHECK_THROWS_AS(fig8_phi(fig8_r_min() - 1e-9), DomainError);
    CHECK(fig8_r_min() == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-15));

    // Strict increase across 200 grid points, no tolerance.
    const double lo = fig8_r_min() + 0.01, hi = fig8_r_max() - 0.01;
    double prev = fig8_phi(lo);
    for (int i = 1; i < 200; ++i) {
        const double r = lo + (hi - lo) * i / 199.0;
        const double cur = fig8_phi(r);
        CHECK(cur > prev);
        prev = cur;
    }

    // The two factors appearing in the derivative are positive on the grid.
    for (int i = 0; i < 200; ++i) {
        const double r = lo + (hi - lo) * i / 199.0;
        CHECK(3 * std::pow(r, 4) - r * r + 1 > 0);
        CHECK(std::pow(r, 4) - r * r + 3 > 0);
    }
}

TEST_CASE("pipeline theta agrees with the closed form 2 pi - 2 phi(r)") {
    const ts::Family1D fam = ts::make_family_1d("figure_eight");
    // Identify the edge whose angle decreases with r (the closed form's
    // edge), then hold the identification across the whole grid.
    const double u0 = std::log(1.2) / fam.cal.log_r_per_u;
    const RealizedStructure probe = realize(fam.fx.topo, fam.fx.chart, {u0});
    const int c_edge = probe.theta(0) < 2 * kPi ? 0 : 1;
    for (int i = 0; i < 101; ++i) {
        const double r = fig8_r_min() + 0.01 + (fig8_r_max() - fig8_r_min() - 0.02) * i / 100.0;
        const double u = std::log(r) / fam.cal.log_r_per_u;
        const RealizedStructure rs = realize(fam.fx.topo, fam.fx.chart, {u});
        CHECK(rs.theta(c_edge) == doctest::Approx(2 * kPi - 2 * fig8_phi(r)).epsilon(1e-9));
        CHECK(rs.theta(1 - c_edge) == doctest::Approx(2 * kPi + 2 * fig8_phi(r)).epsilon(1e-9));
    }
}

TEST_CASE("whitehead_phi: values, derivative bound, branch") {
    CHECK(std::abs(whitehead_phi(1.0, 1.0)) < 1e-15);

    // Direct evaluation at t = 1.1, x = pi/2.
    const double t = 1.1, x = kPi / 2;
    const double want = 0.5 * (t * t * t - 1 / t) / std::sqrt(t * t * t * t + 1);
    CHECK(whitehead_phi(t, x) == doctest::Approx(want).epsilon(1e-15));

    CHECK(whitehead_sin_half_y(2.0, 1.0) == doctest::Approx(-whitehead_sin_half_y(0.5, 1.0)).epsilon(1e-14));

    CHECK_THROWS_AS(whitehead_phi(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(whitehead_phi(1.0, 7.0), DomainError);

    // d/dt sin(y/2) >= 0: finite differences on a grid plus the polynomial
    // lower bound (t^2 - 1)^4 for the numerator factor.
    for (double tt = 0.6; tt <= 1.8; tt += 0.05) {
        for (double xx = 0.3; xx <= 5.9; xx += 0.35) {
            const double c = std::cos(xx);
            const double factor = std::pow(tt, 8) - 4 * std::pow(tt, 6) * c + 6 * std::pow(tt, 4) -
                                  4 * tt * tt * c + 1;
            CHECK(factor >= std::pow(tt * tt - 1, 4) - 1e-12);
            const double h = 1e-6;
            CHECK(whitehead_sin_half_y(tt + h, xx) - whitehead_sin_half_y(tt - h, xx) >= -1e-9);
        }
    }
}

TEST_CASE("sweep rows over the figure-eight family") {
    const auto fx = ts::make_fixture(builtin("figure_eight"));
    SweepSpec spec;
    spec.grid.push_back({-0.05, 0.05, 5});
    const auto rows = sweep(fx.topo, fx.chart, spec);
    REQUIRE(rows.size() == 5);
    for (const SweepRow& row : rows) {
        REQUIRE(row.in_domain);
        REQUIRE(row.thetas.size() == 2);
        CHECK(row.thetas[0] + row.thetas[1] == doctest::Approx(4 * kPi).epsilon(1e-9));
    }
    CHECK(rows[2].params[0] == doctest::Approx(0.0));
}

TEST_CASE("sweep flags out-of-domain rows instead of failing") {
    const auto fx = ts::make_fixture(builtin("figure_eight"));
    SweepSpec spec;
    spec.grid.push_back({0.0, 50.0, 3});
    const auto rows = sweep(fx.topo, fx.chart, spec);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].in_domain);
    CHECK_FALSE(rows[2].in_domain);
    CHECK(rows[2].thetas.empty());
}

TEST_CASE("sweep with extra column groups") {
    const auto fx = ts::make_fixture(builtin("figure_eight"));
    SweepSpec spec;
    spec.grid.push_back({-0.1, 0.1, 3});
    spec.with_residuals = true;
    spec.with_shifts = true;
    const auto rows = sweep(fx.topo, fx.chart, spec);
    REQUIRE(rows.size() == 3);
    // 2 residual columns + one shift per wedge (6 + 6).
    for (const SweepRow& row : rows) REQUIRE(row.extras.size() == 2 + 12);
    CHECK(rows[1].extras[0] == doctest::Approx(0.0).epsilon(1e-12));  // mostow at the center
    const std::string csv = sweep_csv(fx.topo, fx.chart, spec);
    CHECK(csv.find("mostow_residual,gauss_bonnet_residual,shift_e0_w0") != std::string::npos);
}

TEST_CASE("sweep of a zero-dimensional chart") {
    const auto fx = ts::make_fixture(builtin("example1_thurston"));
    const auto rows = sweep(fx.topo, fx.chart, SweepSpec{});
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].thetas.size() == 1);
    // The rigid structure is built from regular tetrahedra: twelve wedges of
    // pi/3 around the single axis.
    CHECK(rows[0].thetas[0] == doctest::Approx(4 * kPi).epsilon(1e-12));

    SweepSpec bad;
    bad.grid.push_back({0, 1, 3});
    CHECK_THROWS_AS(sweep(fx.topo, fx.chart, bad), UsageError);
}

TEST_CASE("sweep validates axes") {
    const auto fx = ts::make_fixture(builtin("figure_eight"));
    SweepSpec spec;
    spec.grid.push_back({0, 1, 1});
    CHECK_THROWS_AS(sweep(fx.topo, fx.chart, spec), UsageError);
}

TEST_CASE("whitehead sweep centered on the complete structure") {
    const auto fx = ts::make_fixture(builtin("whitehead"));
    const CompleteResult res = find_complete(fx.topo, fx.chart, {});
    REQUIRE(res.converged);
    SweepSpec spec;
    spec.grid.push_back({res.params[0] - 0.1, res.params[0] + 0.1, 3});
    spec.grid.push_back({res.params[1] - 0.1, res.params[1] + 0.1, 3});
    const auto rows = sweep(fx.topo, fx.chart, spec);
    REQUIRE(rows.size() == 9);
    // Center row: every angle 2 pi.
    for (double theta : rows[4].thetas) CHECK(theta == doctest::Approx(2 * kPi).epsilon(1e-9));
}

TEST_CASE("injectivity reports") {
    SUBCASE("figure eight: no collision, strictly monotone angle") {
        const auto fx = ts::make_fixture(builtin("figure_eight"));
        const double extent = ts::domain_extent(fx, {1.0});
        SweepSpec spec;
        spec.grid.push_back({-0.9 * extent, 0.9 * extent, 101});
        const AngleMapReport rep = injectivity_grid(fx.topo, fx.chart, spec);
        CHECK(rep.min_distance > 1e-6);
        CHECK(rep.verdict.find("no collision") == 0);
        REQUIRE(rep.angles.size() == 101);
        for (std::size_t i = 1; i < rep.angles.size(); ++i) {
            const double d = rep.angles[i][0] - rep.angles[i - 1][0];
            CHECK(std::abs(d) > 0);
            if (i >= 2)
                CHECK((rep.angles[i][0] - rep.angles[i - 1][0]) *
                          (rep.angles[i - 1][0] - rep.angles[i - 2][0]) >
                      0);
        }
    }
    SUBCASE("zero-dimensional chart gives a vacuous verdict") {
        const auto fx = ts::make_fixture(builtin("example1_thurston"));
        const AngleMapReport rep = injectivity_grid(fx.topo, fx.chart, SweepSpec{});
        CHECK(rep.verdict.find("vacuous") == 0);
    }
}

TEST_CASE("find_complete on the figure eight from five starts") {
    const auto fx = ts::make_fixture(builtin("figure_eight"));
    const double extent = ts::domain_extent(fx, {1.0});
    for (double frac : {-0.7, -0.3, 0.2, 0.55, 0.8}) {
        const CompleteResult res = find_complete(fx.topo, fx.chart, {frac * extent});
        REQUIRE(res.converged);
        CHECK(res.residual < 1e-9);
        CHECK(std::abs(res.params[0]) < 1e-9);
        const RealizedStructure rs = realize(fx.topo, fx.chart, res.params);
        for (const TetShape& s : rs.tet_shapes) {
            CHECK(s.alpha() == doctest::Approx(kPi / 3).epsilon(1e-9));
            CHECK(s.beta() == doctest::Approx(kPi / 3).epsilon(1e-9));
            CHECK(s.gamma() == doctest::Approx(kPi / 3).epsilon(1e-9));
        }
    }
}

TEST_CASE("find_complete on the whitehead link reaches the octahedral point") {
    const auto fx = ts::make_fixture(builtin("whitehead"));
    std::vector<std::vector<double>> results;
    for (const auto& start : {std::vector<double>{0, 0}, {0.25, -0.2}, {-0.3, 0.1}, {0.2, 0.2}, {-0.15, -0.35}}) {
        const CompleteResult res = find_complete(fx.topo, fx.chart, start);
        REQUIRE(res.converged);
        CHECK(res.residual < 1e-9);
        results.push_back(res.params);
        const RealizedStructure rs = realize(fx.topo, fx.chart, res.params);
        for (const TetShape& s : rs.tet_shapes) {
            std::array<double, 3> a = s.angles();
            std::sort(a.begin(), a.end());
            CHECK(a[0] == doctest::Approx(kPi / 4).epsilon(1e-9));
            CHECK(a[1] == doctest::Approx(kPi / 4).epsilon(1e-9));
            CHECK(a[2] == doctest::Approx(kPi / 2).epsilon(1e-9));
        }
    }
    for (std::size_t i = 1; i < results.size(); ++i) {
        CHECK(results[i][0] == doctest::Approx(results[0][0]).epsilon(1e-9));
        CHECK(results[i][1] == doctest::Approx(results[0][1]).epsilon(1e-9));
    }
}

TEST_CASE("find_complete reports honest failures") {
    SUBCASE("the rigid two-tetrahedron pattern has an axis, never a complete point") {
        const auto fx = ts::make_fixture(builtin("example1_thurston"));
        const CompleteResult res = find_complete(fx.topo, fx.chart, {});
        CHECK_FALSE(res.converged);
        CHECK(res.residual == doctest::Approx(2 * kPi).epsilon(1e-12));
    }
    SUBCASE("a genus-3 link forces singular edges") {
        const auto fx = ts::make_fixture(builtin("example3_genus3"));
        const CompleteResult res = find_complete(fx.topo, fx.chart, {});
        CHECK_FALSE(res.converged);
        CHECK(res.message.find("no complete structure") != std::string::npos);
    }
}

TEST_CASE("whitehead pipeline angles match the closed form") {
    const auto fx = ts::make_fixture(builtin("whitehead"));
    const auto cals = ts::calibrate_2d_all(fx.topo, fx.chart, ts::whitehead_exponent_table(fx.topo));
    REQUIRE_FALSE(cals.empty());
    const CompleteResult complete = find_complete(fx.topo, fx.chart, {});
    REQUIRE(complete.converged);

    int d_edge = -1;
    std::vector<int> deg6;
    for (const EdgeClass& e : fx.topo.edges) {
        if (e.wedges.size() == 4) d_edge = e.id;
        if (e.wedges.size() == 6) deg6.push_back(e.id);
    }
    REQUIRE(d_edge >= 0);
    REQUIRE(deg6.size() == 2);

    bool some_pass = false;
    for (const auto& cal : cals) {
        for (int c_edge : deg6) {
            double worst = 0;
            bool domain_ok = true;
            for (int i = -3; i <= 3 && domain_ok; ++i) {
                for (int j = -3; j <= 3 && domain_ok; ++j) {
                    const std::vector<double> u = {complete.params[0] + 0.05 * i,
                                                   complete.params[1] + 0.05 * j};
                    RealizedStructure rs;
                    try {
                        rs = realize(fx.topo, fx.chart, u);
                    } catch (const DomainError&) {
                        domain_ok = false;
                        break;
                    }
                    const double t = std::exp(cal.log_t_per_u[0] * u[0] + cal.log_t_per_u[1] * u[1]);
                    const double x = rs.theta(d_edge) / 2;
                    const double y = rs.theta(c_edge) / 2 - kPi;
                    try {
                        worst = std::max(worst, std::abs(std::sin(y / 2) - whitehead_sin_half_y(t, x)));
                    } catch (const DomainError&) {
                        domain_ok = false;
                    }
                }
            }
            if (domain_ok && worst < 1e-8) some_pass = true;
        }
    }
    CHECK(some_pass);
}
