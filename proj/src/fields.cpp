#include "bohm/fields.hpp"

#include <cmath>
#include <string>

#include "bohm/errors.hpp"

namespace bohm::fields {

namespace {

using susy::kPi;

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw ConfigError(std::string(name) + " must be finite");
}

void require_amplitudes(double a0, double a1) {
    require_finite(a0, "a0");
    require_finite(a1, "a1");
    if (a0 == 0.0 && a1 == 0.0) throw ConfigError("a0 and a1 must not both vanish");
}

void require_ratios(LimitFieldParams p) {
    require_finite(p.r0, "r0");
    require_finite(p.r1, "r1");
    if (p.r0 * p.r1 == 0.0) throw ConfigError("limit field needs r0 * r1 != 0");
}

struct Drive {
    double c;
    double s;
};

Drive drive(const FieldModel& m, double t) noexcept {
    if (m.is_limit()) return {0.0, 0.0};
    const double w = m.epsilon() * t;
    return {std::cos(w), std::sin(w)};
}

struct Terms {
    AxisJet jx;
    AxisJet jy;
    double p;  // cos + a0 phi(x)
    double q;  // sin + a1 phi(y)
    double m;
};

Terms evaluate(const FieldModel& model, Point2 pt, double t) {
    if (model.is_well() && !model.in_domain(pt)) {
        throw DomainEscape("point (" + std::to_string(pt.x) + ", " + std::to_string(pt.y) +
                           ") left the square well at t = " + std::to_string(t));
    }
    const Drive d = drive(model, t);
    Terms r{model.jet(Axis::x, pt.x), model.jet(Axis::y, pt.y), 0.0, 0.0, 0.0};
    r.p = d.c + model.a0() * r.jx.phi;
    r.q = d.s + model.a1() * r.jy.phi;
    r.m = r.p * r.p + r.q * r.q;
    if (!(r.m >= kMinDenominator)) {
        throw SingularityEncountered("velocity denominator " + std::to_string(r.m) + " below node threshold at (" +
                                     std::to_string(pt.x) + ", " + std::to_string(pt.y) +
                                     "), t = " + std::to_string(t));
    }
    return r;
}

double checked_log_denominator(double m) {
    if (!(m > 1e-300)) throw SingularityEncountered("M vanishes; ln M undefined");
    return std::log(m);
}

}  // namespace

const char* to_string(FieldKind kind) noexcept {
    switch (kind) {
        case FieldKind::harmonic: return "harmonic";
        case FieldKind::isospectral: return "isospectral";
        case FieldKind::square_well: return "square_well";
        case FieldKind::harmonic_limit: return "harmonic_limit";
        case FieldKind::square_well_limit: return "square_well_limit";
    }
    return "unknown";
}

FieldModel::FieldModel(FieldKind kind, double a0, double a1, double epsilon)
    : kind_(kind), a0_(a0), a1_(a1), epsilon_(epsilon) {}

FieldModel FieldModel::harmonic(HarmonicParams p) {
    require_amplitudes(p.a0, p.a1);
    return FieldModel(FieldKind::harmonic, p.a0, p.a1, 1.0);
}

FieldModel FieldModel::isospectral(IsospectralParams p) {
    require_amplitudes(p.a0, p.a1);
    FieldModel m(FieldKind::isospectral, p.a0, p.a1, 1.0);
    m.iso_ = p;
    return m;
}

FieldModel FieldModel::square_well(SquareWellParams p) {
    require_amplitudes(p.a0, p.a1);
    return FieldModel(FieldKind::square_well, p.a0, p.a1, 1.5);
}

FieldModel FieldModel::harmonic_limit(LimitFieldParams p) {
    require_ratios(p);
    return FieldModel(FieldKind::harmonic_limit, p.r0, p.r1, 1.0);
}

FieldModel FieldModel::square_well_limit(LimitFieldParams p) {
    require_ratios(p);
    return FieldModel(FieldKind::square_well_limit, p.r0, p.r1, 1.5);
}

double FieldModel::strobe_period() const noexcept { return 2.0 * kPi / epsilon_; }

bool FieldModel::is_limit() const noexcept {
    return kind_ == FieldKind::harmonic_limit || kind_ == FieldKind::square_well_limit;
}

bool FieldModel::is_well() const noexcept {
    return kind_ == FieldKind::square_well || kind_ == FieldKind::square_well_limit;
}

AxisJet FieldModel::jet(Axis axis, double z) const noexcept {
    switch (kind_) {
        case FieldKind::harmonic:
        case FieldKind::harmonic_limit:
            return {z, 1.0, 0.0};
        case FieldKind::square_well:
        case FieldKind::square_well_limit: {
            const double c = std::cos(z);
            return {c, -std::sin(z), -c};
        }
        case FieldKind::isospectral: {
            const DeformationParam l = axis == Axis::x ? iso_.lambda : iso_.mu;
            return {susy::phi_hat(z, l), susy::phi_hat_prime(z, l), susy::phi_hat_second(z, l)};
        }
    }
    return {};
}

bool FieldModel::in_domain(Point2 p) const noexcept {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
    if (!is_well()) return true;
    const double lo = kWallMargin;
    const double hi = kPi - kWallMargin;
    return p.x >= lo && p.x <= hi && p.y >= lo && p.y <= hi;
}

Velocity velocity(const FieldModel& model, Point2 p, double t) {
    const Terms r = evaluate(model, p, t);
    return {-model.a0() * r.jx.d1 * r.q / r.m, model.a1() * r.jy.d1 * r.p / r.m};
}

double divergence(const FieldModel& model, Point2 p, double t) {
    const Terms r = evaluate(model, p, t);
    const double a0 = model.a0();
    const double a1 = model.a1();
    const double curvature = (a1 * r.p * r.jy.d2 - a0 * r.q * r.jx.d2) / r.m;
    const double gx = a0 * r.jx.d1;
    const double gy = a1 * r.jy.d1;
    return curvature + 2.0 * r.p * r.q * (gx * gx - gy * gy) / (r.m * r.m);
}

double harmonic_denominator(double a, Point2 p, double t) noexcept {
    const double u = std::cos(t) + a * p.x;
    const double v = std::sin(t) + a * p.y;
    return u * u + v * v;
}

double integral_of_motion_C(double a, Point2 p, double t) {
    const double m = harmonic_denominator(a, p, t);
    return m - a * a * checked_log_denominator(m) - 2.0 * a * (p.x * std::cos(t) + p.y * std::sin(t));
}

double stream_function_H(double a, Point2 p, double t) {
    return 0.5 * checked_log_denominator(harmonic_denominator(a, p, t));
}

Gradient2 stream_function_H_gradient(double a, Point2 p, double t) {
    const double u = std::cos(t) + a * p.x;
    const double v = std::sin(t) + a * p.y;
    const double m = u * u + v * v;
    checked_log_denominator(m);
    return {a * u / m, a * v / m};
}

double well_invariant_delta(Point2 p) noexcept { return std::sin(p.x) * std::sin(p.y); }

}  // namespace bohm::fields
