#include "teichtet/errors.hpp"
#include "teichtet/shape.hpp"

#include "support/random_patterns.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace teichtet;
namespace ts = teichtet::testsupport;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("shift parameters of the equilateral shape vanish") {
    const ShiftTriple k = shifts_from_angles(TetShape(kPi / 3, kPi / 3, kPi / 3));
    CHECK(std::abs(k.kappa1) < 1e-15);
    CHECK(std::abs(k.kappa2) < 1e-15);
    CHECK(std::abs(k.kappa3) < 1e-15);
}

TEST_CASE("shift parameters of the right-isoceles shape") {
    // (pi/2, pi/4, pi/4): sin values (1, 1/sqrt 2, 1/sqrt 2), so
    // kappa = (0, -log 2 / 2, +log 2 / 2).
    const ShiftTriple k = shifts_from_angles(TetShape(kPi / 2, kPi / 4, kPi / 4));
    CHECK(std::abs(k.kappa1) < 1e-14);
    CHECK(k.kappa2 == doctest::Approx(-0.5 * std::log(2.0)).epsilon(1e-14));
    CHECK(k.kappa3 == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("angles from shifts inverts the examples") {
    const TetShape eq = angles_from_shifts(0, 0);
    CHECK(eq.alpha() == doctest::Approx(kPi / 3).epsilon(1e-14));
    CHECK(eq.beta() == doctest::Approx(kPi / 3).epsilon(1e-14));

    const TetShape ri = angles_from_shifts(-0.5 * std::log(2.0), 0.5 * std::log(2.0));
    CHECK(ri.alpha() == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(ri.beta() == doctest::Approx(kPi / 4).epsilon(1e-14));
    CHECK(ri.gamma() == doctest::Approx(kPi / 4).epsilon(1e-14));
}

TEST_CASE("shift pairs outside the image are rejected") {
    CHECK_THROWS_AS(angles_from_shifts(10, 10), DomainError);
    CHECK_THROWS_AS(angles_from_shifts(-30, 1), DomainError);
}

TEST_CASE("invalid shapes are rejected") {
    CHECK_THROWS_AS(TetShape(1.0, 1.0, 1.0), DomainError);              // sum != pi
    CHECK_THROWS_AS(TetShape(kPi - 2e-10, 1e-10, 1e-10), DomainError);  // degenerate
    CHECK_THROWS_AS(TetShape(-0.1, kPi / 2, kPi / 2 + 0.1), DomainError);
}

TEST_CASE("horospherical triangle follows the law of sines") {
    const HoroTriangle eq = horo_triangle(TetShape(kPi / 3, kPi / 3, kPi / 3), 1.0);
    CHECK(eq.a == doctest::Approx(eq.b).epsilon(1e-15));
    CHECK(eq.b == doctest::Approx(eq.c).epsilon(1e-15));

    const HoroTriangle ri = horo_triangle(TetShape(kPi / 2, kPi / 4, kPi / 4), 1.0, true);
    CHECK(ri.a == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ri.b == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(ri.c == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    CHECK_THROWS_AS(horo_triangle(TetShape(kPi / 3, kPi / 3, kPi / 3), 0.0), DomainError);
}

TEST_CASE("law of cosines recovers the angles of any shape") {
    for (const auto& [a, b, c] : ts::random_shapes(11, 200)) {
        const TetShape s(a, b, c);
        const HoroTriangle h = horo_triangle(s, 1.7);
        const auto angles = triangle_angles(h.a, h.b, h.c);
        CHECK(angles[0] == doctest::Approx(s.alpha()).epsilon(1e-10));
        CHECK(angles[1] == doctest::Approx(s.beta()).epsilon(1e-10));
        CHECK(angles[2] == doctest::Approx(s.gamma()).epsilon(1e-10));
    }
}

TEST_CASE("1000 random shapes: shift identities and round trips") {
    for (const auto& [a, b, c] : ts::random_shapes(7, 1000)) {
        const TetShape s(a, b, c);
        const ShiftTriple k = shifts_from_angles(s);

        // The three logs telescope.
        CHECK(std::abs(k.kappa1 + k.kappa2 + k.kappa3) < 1e-12);

        // e^{k2} = cos beta + cos alpha e^{-k3}.
        const double res =
            std::exp(k.kappa2) - std::cos(s.beta()) - std::cos(s.alpha()) * std::exp(-k.kappa3);
        CHECK(std::abs(res) < 1e-12);

        const TetShape back = angles_from_shifts(k.kappa2, k.kappa3);
        CHECK(back.alpha() == doctest::Approx(s.alpha()).epsilon(1e-12));
        CHECK(back.beta() == doctest::Approx(s.beta()).epsilon(1e-12));
        CHECK(back.gamma() == doctest::Approx(s.gamma()).epsilon(1e-12));
    }
}
