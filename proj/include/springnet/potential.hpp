#ifndef SPRINGNET_POTENTIAL_HPP
#define SPRINGNET_POTENTIAL_HPP

#include <string>
#include <vector>

#include "springnet/domain.hpp"

namespace springnet {

/// Spring interaction parameters: intensity kappa, rest length l0,
/// interaction radius R.
struct HookeParams {
    double kappa = 1.0;
    double l0 = 0.0;
    double R = 1.0;

    HookeParams() = default;
    HookeParams(double kappa_, double l0_, double R_);

    double alpha() const { return l0 / R; }
};

/// Non-fatal diagnostics (e.g. alpha outside the [0,1] regime the
/// analysis targets). Hard violations throw from the constructor instead.
std::vector<std::string> parameter_warnings(const HookeParams& p);

/// U(r): kappa/2 [(r-l0)^2 - (R-l0)^2] inside the support, 0 outside.
double potential_value(const HookeParams& p, double r);

/// U'(r) = kappa (r - l0) for 0 < r < R, else 0. The radial direction is
/// undefined at r = 0; that event carries zero force.
double potential_force_magnitude(const HookeParams& p, double r);

/// M = integral of the potential over the plane: pi kappa R^3 (l0/3 - R/4).
/// Positive M means the potential is H-stable.
double h_stability_integral(const HookeParams& p);

/// ((pi alpha / 2)[J1 H0 - J0 H1](z) - J2(z)) / z^2 -- the radial profile
/// shared by the continuum transform, the rectangle coefficients and the
/// dispersion function. Smooth at z = 0 with limit alpha/6 - 1/8; evaluated
/// by a 4-term Taylor expansion below z = 1e-3.
double kernel_shape_over_z2(double alpha, double z);

/// z^2 * kernel_shape_over_z2 (vanishes at z = 0).
double kernel_shape(double alpha, double z);

/// Radial Fourier transform with the 1/(2pi) convention; s = |y|.
/// Equals kappa R^4 * kernel_shape_over_z2(alpha, s R); at s = 0 this is
/// the analytic limit M/(2pi).
double fourier_transform_continuum(const HookeParams& p, double s);

/// z_{k1,k2} = pi R sqrt(k1^2/L1^2 + k2^2/L2^2).
double mode_wavenumber(const PeriodicDomain& dom, double R, int k1, int k2);

/// Fourier coefficient of the potential on the periodic rectangle,
/// f-hat convention of coefficients against e_{k1,k2}. Requires
/// R < min(L1, L2) so the support fits inside one period.
double fourier_coeff_rect(const HookeParams& p, const PeriodicDomain& dom,
                          int k1, int k2);

} // namespace springnet

#endif
