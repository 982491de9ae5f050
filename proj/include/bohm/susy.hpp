#pragma once

// Special functions and the strictly isospectral (q = 0) SUSY construction
// built on the 1D harmonic oscillator. Units: hbar = m = omega = 1.

#include <functional>

namespace bohm::susy {

inline constexpr double kPi = 3.14159265358979323846;

/// Admissible SUSY deformation parameter: lambda > 0 or lambda < -1.
/// Validated on construction; an infinite value is allowed and denotes the
/// undeformed oscillator.
class DeformationParam {
public:
    explicit DeformationParam(double lambda);

    double value() const noexcept { return lambda_; }

    friend bool operator==(const DeformationParam&, const DeformationParam&) = default;

private:
    double lambda_;
};

/// A real 1D eigenfunction with its analytic first derivative.
struct WaveFunction1D {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
    double energy = 0.0;
};

/// I(x) = pi^{-1/2} * integral_{-inf}^{x} exp(-u^2) du.
double gaussian_cumulative(double x) noexcept;

/// Oscillator ground state pi^{-1/4} exp(-x^2/2), E = 1/2.
WaveFunction1D oscillator_ground();
/// First excited oscillator state sqrt(2) pi^{-1/4} x exp(-x^2/2), E = 3/2.
WaveFunction1D oscillator_first();

/// Normalized deformed ground state psi_hat_0(x; lambda).
double isospectral_ground(double x, DeformationParam lam);

/// Deformed excited state psi_hat_{n+1}(x; lambda) built from psi_{n+1} and a
/// nodeless ground state psi0. Throws NodeDivision where psi0 underflows.
double isospectral_excited(const WaveFunction1D& psi_next, const WaveFunction1D& psi0,
                           DeformationParam lam, double x);

/// Ratio phi_hat_lambda(x) = psi_hat_1 / psi_hat_0 with the sqrt(2) absorbed.
double phi_hat(double x, DeformationParam lam) noexcept;
/// First derivative of phi_hat; simplifies to (I(x) + lambda) / sqrt(lambda (1 + lambda)).
double phi_hat_prime(double x, DeformationParam lam) noexcept;
/// Second derivative of phi_hat.
double phi_hat_second(double x, DeformationParam lam) noexcept;

/// Deformed potential V_hat_lambda(x), isospectral to x^2 / 2.
double deformed_potential(double x, DeformationParam lam) noexcept;

}  // namespace bohm::susy
