#include "teichtet/shape.hpp"

#include "teichtet/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace teichtet {

namespace {
constexpr double kPi = std::numbers::pi;
}

TetShape::TetShape(double alpha, double beta, double gamma) : alpha_(alpha), beta_(beta), gamma_(gamma) {
    if (!(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma)))
        throw DomainError("tetrahedron shape: non-finite angle");
    const double sum = alpha + beta + gamma;
    if (std::abs(sum - kPi) > kAngleSumTol)
        throw DomainError("tetrahedron shape: angle sum differs from pi by " + std::to_string(sum - kPi));
    gamma_ = kPi - alpha_ - beta_;  // close the sum exactly in floating point
    if (alpha_ <= kMinAngle || beta_ <= kMinAngle || gamma_ <= kMinAngle || alpha_ >= kPi - kMinAngle ||
        beta_ >= kPi - kMinAngle || gamma_ >= kPi - kMinAngle)
        throw DomainError("tetrahedron shape: degenerate or out-of-range angle");
}

ShiftTriple shifts_from_angles(const TetShape& s) {
    const double la = std::log(std::sin(s.alpha()));
    const double lb = std::log(std::sin(s.beta()));
    const double lc = std::log(std::sin(s.gamma()));
    return {lb - lc, lc - la, la - lb};
}

TetShape angles_from_shifts(double kappa2, double kappa3) {
    if (!(std::isfinite(kappa2) && std::isfinite(kappa3)))
        throw DomainError("shift pair: non-finite value");
    const double arg = (std::exp(kappa2 + kappa3) + std::exp(-kappa2 - kappa3) - std::exp(kappa3 - kappa2)) / 2.0;
    if (!(arg > -1.0 && arg < 1.0))
        throw DomainError("shift pair corresponds to no ideal tetrahedron (arccos argument " +
                          std::to_string(arg) + ")");
    const double alpha = std::acos(arg);
    const double cos_beta = std::exp(kappa2) - std::cos(alpha) * std::exp(-kappa3);
    if (!(cos_beta > -1.0 && cos_beta < 1.0))
        throw DomainError("shift pair corresponds to no ideal tetrahedron (cos beta " +
                          std::to_string(cos_beta) + ")");
    const double beta = std::acos(cos_beta);
    const double gamma = kPi - alpha - beta;
    if (!(gamma > kMinAngle))
        throw DomainError("shift pair corresponds to no ideal tetrahedron (gamma " + std::to_string(gamma) +
                          ")");
    return TetShape(alpha, beta, gamma);
}

HoroTriangle horo_triangle(const TetShape& s, double scale, bool normalize_by_a) {
    if (!(scale > 0.0)) throw DomainError("horospherical triangle: scale must be positive");
    const double sa = std::sin(s.alpha());
    const double sb = std::sin(s.beta());
    const double sc = std::sin(s.gamma());
    const double f = normalize_by_a ? scale / sa : scale;
    return {f * sa, f * sb, f * sc, scale};
}

std::array<double, 3> triangle_angles(double a, double b, double c) {
    if (!(a > 0 && b > 0 && c > 0)) throw DomainError("triangle sides must be positive");
    if (!(a < b + c && b < a + c && c < a + b))
        throw DomainError("triangle inequality fails for sides (" + std::to_string(a) + ", " +
                          std::to_string(b) + ", " + std::to_string(c) + ")");
    const double ca = (b * b + c * c - a * a) / (2 * b * c);
    const double cb = (a * a + c * c - b * b) / (2 * a * c);
    const double alpha = std::acos(std::fmax(-1.0, std::fmin(1.0, ca)));
    const double beta = std::acos(std::fmax(-1.0, std::fmin(1.0, cb)));
    return {alpha, beta, kPi - alpha - beta};
}

}  // namespace teichtet
