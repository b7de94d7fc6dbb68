#pragma once

// Geometry of a single ideal hyperbolic tetrahedron.
//
// An ideal tetrahedron is determined up to isometry by its three dihedral
// angles (alpha, beta, gamma), one per pair of opposite edges, with
// 0 < alpha, beta, gamma < pi and alpha + beta + gamma = pi. The pairs
// {01,23}, {02,13}, {03,12} (edges named by their endpoint vertices) carry
// alpha, beta, gamma in that order.
//
// Looking down from a vertex, the horospherical cross-section is a Euclidean
// triangle with angles (alpha, beta, gamma); scaling the unit side opposite
// alpha gives side lengths proportional to (sin alpha, sin beta, sin gamma).
// The shift parameters of the three edges at that vertex are
//
//     kappa_1 = log(sin beta / sin gamma)
//     kappa_2 = log(sin gamma / sin alpha)
//     kappa_3 = log(sin alpha / sin beta)
//
// and the inverse map recovers alpha via
//
//     alpha = arccos((e^{k2+k3} + e^{-k2-k3} - e^{k3-k2}) / 2),
//
// then beta from e^{k2} = cos beta + cos alpha * e^{-k3} and gamma from the
// angle sum. The cyclic convention above is fixed once and for all; callers
// that orient edges differently must permute accordingly.

#include <array>

namespace teichtet {

/// Smallest admissible dihedral angle; shapes closer to degenerate are
/// rejected (the parameter space is the open triangle).
inline constexpr double kMinAngle = 1e-9;

/// Tolerance on alpha + beta + gamma = pi at construction.
inline constexpr double kAngleSumTol = 1e-12;

class TetShape {
public:
    /// Throws DomainError unless the angles are a valid shape. Inputs whose
    /// sum deviates from pi by at most kAngleSumTol are normalized by
    /// recomputing gamma = pi - alpha - beta.
    TetShape(double alpha, double beta, double gamma);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double gamma() const noexcept { return gamma_; }

    std::array<double, 3> angles() const noexcept { return {alpha_, beta_, gamma_}; }

private:
    double alpha_, beta_, gamma_;
};

/// Shift parameters of the three edges at a vertex; always sums to zero.
struct ShiftTriple {
    double kappa1;
    double kappa2;
    double kappa3;
};

/// Horospherical cross-section triangle. Sides a, b, c are opposite the
/// angles alpha, beta, gamma.
struct HoroTriangle {
    double a;
    double b;
    double c;
    double scale;
};

ShiftTriple shifts_from_angles(const TetShape& s);

/// Inverse of shifts_from_angles given (kappa2, kappa3). Throws DomainError
/// when the pair corresponds to no ideal tetrahedron.
TetShape angles_from_shifts(double kappa2, double kappa3);

/// Sides (scale*sin alpha, scale*sin beta, scale*sin gamma); with
/// normalize_by_a the side opposite alpha is rescaled to exactly `scale`.
HoroTriangle horo_triangle(const TetShape& s, double scale, bool normalize_by_a = false);

/// Angles of a Euclidean triangle from its side lengths by the law of
/// cosines, returned opposite (a, b, c). Throws DomainError if a strict
/// triangle inequality fails.
std::array<double, 3> triangle_angles(double a, double b, double c);

}  // namespace teichtet
