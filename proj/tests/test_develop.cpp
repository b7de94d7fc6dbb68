#include "teichtet/errors.hpp"
#include "teichtet/develop.hpp"
#include "teichtet/explore.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace teichtet;
namespace ts = teichtet::testsupport;

namespace {

double dist(const Vec2& a, const Vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

TEST_CASE("figure-eight development at the symmetric point: 8 unit equilateral triangles") {
    const auto fx = ts::make_fixture(builtin("figure_eight"));
    const RealizedStructure rs = realize(fx.topo, fx.chart, {0.0});
    const DevelopmentLayout layout = develop_link(rs, 0);
    REQUIRE(layout.triangles.size() == 8);
    for (const PlacedTriangle& t : layout.triangles) {
        CHECK(dist(t.pos[0], t.pos[1]) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(dist(t.pos[1], t.pos[2]) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(dist(t.pos[0], t.pos[2]) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(layout.markers.empty());
    CHECK(layout.max_side_mismatch < 1e-9);
    // Seed's first side lies on the horizontal axis.
    CHECK(layout.triangles[0].pos[0].x == 0.0);
    CHECK(layout.triangles[0].pos[0].y == 0.0);
    CHECK(layout.triangles[0].pos[1].y == 0.0);
}

TEST_CASE("placed side lengths match their class lengths off the symmetric point") {
    const auto fx = ts::make_fixture(builtin("figure_eight"));
    const RealizedStructure rs = realize(fx.topo, fx.chart, {0.11});
    const DevelopmentLayout layout = develop_link(rs, 0);
    CHECK(layout.max_side_mismatch < 1e-9);
    for (const PlacedTriangle& t : layout.triangles) {
        // Corner i carries vertex w_i; the side joining corners i, j lies on
        // the face given by the remaining corner vertex.
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3, k = (i + 2) % 3;
            const int face = t.corner_vertices[static_cast<std::size_t>(k)];
            const double want = rs.lengths[static_cast<std::size_t>(
                fx.topo.side_class_of({t.triangle.tet, t.triangle.vertex, face}))];
            CHECK(dist(t.pos[static_cast<std::size_t>(i)], t.pos[static_cast<std::size_t>(j)]) ==
                  doctest::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("whitehead developments at the equal-length point") {
    const auto fx = ts::make_fixture(builtin("whitehead"));
    const RealizedStructure rs = realize(fx.topo, fx.chart, {0.0, 0.0});

    int small_cusp = -1, big_cusp = -1;
    for (const LinkSurface& ls : fx.topo.links)
        (ls.triangles.size() == 4 ? small_cusp : big_cusp) = ls.cusp;

    // The small torus only meets the two degree-6 edges: regular here.
    const DevelopmentLayout small = develop_link(rs, small_cusp);
    CHECK(small.triangles.size() == 4);
    CHECK(small.markers.empty());

    // The big torus meets the degree-4 axis and the degree-8 edge: cone
    // points appear.
    const DevelopmentLayout big = develop_link(rs, big_cusp);
    CHECK(big.triangles.size() == 12);
    CHECK_FALSE(big.markers.empty());

    const std::string svg = development_svg(big);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("theta/pi=") != std::string::npos);
}

TEST_CASE("genus-3 development marks singular vertices along the family") {
    const auto fx = ts::make_fixture(builtin("example3_genus3"));
    const RealizedStructure rs = realize(fx.topo, fx.chart, {0.2});
    const DevelopmentLayout layout = develop_link(rs, 0);
    CHECK(layout.triangles.size() == 16);
    CHECK_FALSE(layout.markers.empty());
    CHECK(layout.max_side_mismatch < 1e-9);
}

TEST_CASE("cusp index is validated") {
    const auto fx = ts::make_fixture(builtin("figure_eight"));
    const RealizedStructure rs = realize(fx.topo, fx.chart, {0.0});
    CHECK_THROWS_AS(develop_link(rs, 7), UsageError);
}
