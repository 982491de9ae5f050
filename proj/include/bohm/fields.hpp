#pragma once

// Bohmian velocity fields generated by the superposition
//
//   psi = psi_n(x) psi_n(y) e^{-i E1 t} + [a0 psi_k(x) psi_n(y) + i a1 psi_n(x) psi_k(y)] e^{-i E2 t}
//
// which all reduce to
//
//   vx = -a0 phi'(x) [sin(eps t) + a1 phi(y)] / M
//   vy =  a1 phi'(y) [cos(eps t) + a0 phi(x)] / M
//   M  = (cos(eps t) + a0 phi(x))^2 + (sin(eps t) + a1 phi(y))^2
//
// with phi = psi_k / psi_n. Normalization constants of phi (sqrt(2) for the
// oscillator and its isospectral partner, 2 for the square well) are absorbed
// into a0 and a1, so parameter values compare directly with published maps:
//
//   harmonic          phi(z) = z,                   eps = 1
//   isospectral       phi = phi_hat_lambda / _mu,    eps = 1
//   square_well       phi(z) = cos z on (0, pi),     eps = 3/2
//
// The *_limit variants are the a0, a1 -> infinity forms at fixed ratios
// r0 = a0/A, r1 = a1/A. Dividing numerator and denominator by A^2 leaves an
// autonomous field: vx = -r0 r1 phi'(x) phi(y) / D, vy = r0 r1 phi'(y) phi(x) / D
// with D = r0^2 phi(x)^2 + r1^2 phi(y)^2.

#include <variant>

#include "bohm/susy.hpp"

namespace bohm::fields {

using susy::DeformationParam;

/// Denominator floor below which a point counts as sitting on the node.
inline constexpr double kMinDenominator = 1e-10;
/// Square-well points must stay inside [delta, pi - delta].
inline constexpr double kWallMargin = 1e-12;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Velocity {
    double vx = 0.0;
    double vy = 0.0;
};

struct HarmonicParams {
    double a0 = 1.0;
    double a1 = 1.0;
};

struct IsospectralParams {
    double a0 = 1.0;
    double a1 = 1.0;
    DeformationParam lambda{20.0};
    DeformationParam mu{20.0};
};

struct SquareWellParams {
    double a0 = 1.0;
    double a1 = 1.0;
};

struct LimitFieldParams {
    double r0 = 1.0;
    double r1 = 1.0;
};

enum class FieldKind { harmonic, isospectral, square_well, harmonic_limit, square_well_limit };

const char* to_string(FieldKind kind) noexcept;

/// phi and its first two derivatives at one coordinate.
struct AxisJet {
    double phi = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

enum class Axis { x, y };

/// Immutable, validated velocity-field model.
class FieldModel {
public:
    static FieldModel harmonic(HarmonicParams p);
    static FieldModel isospectral(IsospectralParams p);
    static FieldModel square_well(SquareWellParams p);
    static FieldModel harmonic_limit(LimitFieldParams p);
    static FieldModel square_well_limit(LimitFieldParams p);

    FieldKind kind() const noexcept { return kind_; }
    /// Driving frequency E2 - E1.
    double epsilon() const noexcept { return epsilon_; }
    /// Strobe period 2 pi / epsilon.
    double strobe_period() const noexcept;
    bool is_limit() const noexcept;
    bool is_well() const noexcept;

    /// Effective amplitudes entering the common formula (r0, r1 for limit forms).
    double a0() const noexcept { return a0_; }
    double a1() const noexcept { return a1_; }
    /// Only meaningful for the isospectral variant.
    const IsospectralParams& isospectral_params() const noexcept { return iso_; }

    AxisJet jet(Axis axis, double z) const noexcept;

    /// True when p is inside the model's configuration domain.
    bool in_domain(Point2 p) const noexcept;

private:
    FieldModel(FieldKind kind, double a0, double a1, double epsilon);

    FieldKind kind_;
    double a0_;
    double a1_;
    double epsilon_;
    IsospectralParams iso_{};
};

/// v(p, t). Throws SingularityEncountered when the denominator drops below
/// kMinDenominator and DomainEscape when a square-well point leaves the box.
Velocity velocity(const FieldModel& model, Point2 p, double t);

/// Analytic divergence d(vx)/dx + d(vy)/dy.
double divergence(const FieldModel& model, Point2 p, double t);

/// M = (cos t + a x)^2 + (sin t + a y)^2 of the harmonic a0 = a1 = a model.
double harmonic_denominator(double a, Point2 p, double t) noexcept;

/// Integral of motion C = M - a^2 ln M - 2a (x cos t + y sin t).
double integral_of_motion_C(double a, Point2 p, double t);

/// Stream function H = ln(M) / 2, with vx = -dH/dy and vy = dH/dx.
double stream_function_H(double a, Point2 p, double t);

struct Gradient2 {
    double dx = 0.0;
    double dy = 0.0;
};

/// Analytic (dH/dx, dH/dy).
Gradient2 stream_function_H_gradient(double a, Point2 p, double t);

/// Delta = sin x sin y, conserved by the square_well_limit field with r0 = r1.
double well_invariant_delta(Point2 p) noexcept;

}  // namespace bohm::fields
