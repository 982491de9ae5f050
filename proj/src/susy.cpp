#include "bohm/susy.hpp"

#include <cmath>
#include <string>

#include "bohm/errors.hpp"

namespace bohm::susy {

namespace {

const double kInvSqrtPi = 1.0 / std::sqrt(kPi);
const double kPiQuarter = std::pow(kPi, -0.25);
constexpr double kMinGround = 1e-300;

// sqrt(lambda (1 + lambda)) without overflowing for huge |lambda|.
double norm_factor(double lambda) noexcept {
    return std::sqrt(std::abs(lambda)) * std::sqrt(std::abs(1.0 + lambda));
}

}  // namespace

DeformationParam::DeformationParam(double lambda) : lambda_(lambda) {
    if (std::isnan(lambda) || (lambda >= -1.0 && lambda <= 0.0)) {
        throw InvalidDeformation("deformation parameter must satisfy lambda > 0 or lambda < -1, got " +
                                 std::to_string(lambda));
    }
}

double gaussian_cumulative(double x) noexcept {
    // erfc keeps full relative precision in the left tail where 1 + erf(x) cancels.
    return 0.5 * std::erfc(-x);
}

WaveFunction1D oscillator_ground() {
    return {
        [](double x) { return kPiQuarter * std::exp(-0.5 * x * x); },
        [](double x) { return -x * kPiQuarter * std::exp(-0.5 * x * x); },
        0.5,
    };
}

WaveFunction1D oscillator_first() {
    static const double c = std::sqrt(2.0) * kPiQuarter;
    return {
        [](double x) { return c * x * std::exp(-0.5 * x * x); },
        [](double x) { return c * (1.0 - x * x) * std::exp(-0.5 * x * x); },
        1.5,
    };
}

double isospectral_ground(double x, DeformationParam lam) {
    const double l = lam.value();
    const double psi0 = kPiQuarter * std::exp(-0.5 * x * x);
    if (std::isinf(l)) return psi0;
    const double shift = gaussian_cumulative(x) + l;
    // sqrt(l (1 + l)) / (I + l), split so that neither factor overflows.
    return std::sqrt(std::abs(l) / std::abs(shift)) * std::sqrt(std::abs(1.0 + l) / std::abs(shift)) *
           std::copysign(1.0, shift) * psi0;
}

double isospectral_excited(const WaveFunction1D& psi_next, const WaveFunction1D& psi0, DeformationParam lam,
                           double x) {
    const double g = psi0.value(x);
    if (!(std::abs(g) >= kMinGround)) {
        throw NodeDivision("ground state vanishes at x = " + std::to_string(x));
    }
    const double l = lam.value();
    const double f = psi_next.value(x);
    if (std::isinf(l)) return f;
    const double gap = psi_next.energy - psi0.energy;
    const double density = g * g;  // I'(x)
    const double shift = gaussian_cumulative(x) + l;
    const double lowered = psi_next.derivative(x) - (psi0.derivative(x) / g) * f;
    return f + 0.5 * (1.0 / gap) * (density / shift) * lowered;
}

double phi_hat(double x, DeformationParam lam) noexcept {
    const double l = lam.value();
    if (std::isinf(l)) return x;
    const double shift = gaussian_cumulative(x) + l;
    return shift / norm_factor(l) * (x + std::exp(-x * x) * kInvSqrtPi / (2.0 * shift));
}

double phi_hat_prime(double x, DeformationParam lam) noexcept {
    const double l = lam.value();
    if (std::isinf(l)) return 1.0;
    return (gaussian_cumulative(x) + l) / norm_factor(l);
}

double phi_hat_second(double x, DeformationParam lam) noexcept {
    const double l = lam.value();
    if (std::isinf(l)) return 0.0;
    return kInvSqrtPi * std::exp(-x * x) / norm_factor(l);
}

double deformed_potential(double x, DeformationParam lam) noexcept {
    const double l = lam.value();
    const double base = 0.5 * x * x;
    if (std::isinf(l)) return base;
    const double shift = l + gaussian_cumulative(x);
    const double e = std::exp(-x * x);
    return base + (2.0 * kInvSqrtPi * x * e * shift + e * e / kPi) / (shift * shift);
}

}  // namespace bohm::susy
