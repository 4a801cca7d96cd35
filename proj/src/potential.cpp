#include "springnet/potential.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "springnet/specfun.hpp"

namespace springnet {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSmallZ = 1e-3;
} // namespace

HookeParams::HookeParams(double kappa_, double l0_, double R_)
    : kappa(kappa_), l0(l0_), R(R_) {
    if (!(kappa > 0.0)) throw std::invalid_argument("HookeParams: kappa must be > 0");
    if (!(R > 0.0)) throw std::invalid_argument("HookeParams: R must be > 0");
    if (!(l0 >= 0.0)) throw std::invalid_argument("HookeParams: l0 must be >= 0");
}

std::vector<std::string> parameter_warnings(const HookeParams& p) {
    std::vector<std::string> w;
    const double a = p.alpha();
    if (a > 1.0)
        w.push_back("alpha = l0/R = " + std::to_string(a) +
                    " lies outside [0,1]; the stability analysis targets that range");
    return w;
}

double potential_value(const HookeParams& p, double r) {
    if (!(r >= 0.0)) throw std::domain_error("potential_value: r must be >= 0");
    if (r >= p.R) return 0.0;
    const double a = r - p.l0;
    const double b = p.R - p.l0;
    return 0.5 * p.kappa * (a * a - b * b);
}

double potential_force_magnitude(const HookeParams& p, double r) {
    if (!(r >= 0.0)) throw std::domain_error("potential_force_magnitude: r must be >= 0");
    if (r == 0.0 || r >= p.R) return 0.0;
    return p.kappa * (r - p.l0);
}

double h_stability_integral(const HookeParams& p) {
    return kPi * p.kappa * p.R * p.R * p.R * (p.l0 / 3.0 - p.R / 4.0);
}

double kernel_shape_over_z2(double alpha, double z) {
    if (!(z >= 0.0)) throw std::domain_error("kernel_shape_over_z2: z must be >= 0");
    if (z < kSmallZ) {
        // (pi a/2)[J1 H0 - J0 H1] = z^2/6 - z^4/80 + z^6/2688 - z^8/165888 ...
        // J2                      = z^2/8 - z^4/96 + z^6/3072 - z^8/184320 ...
        const double z2 = z * z;
        return (alpha / 6.0 - 1.0 / 8.0) +
               z2 * ((1.0 / 96.0 - alpha / 80.0) +
                     z2 * ((alpha / 2688.0 - 1.0 / 3072.0) +
                           z2 * (1.0 / 184320.0 - alpha / 165888.0)));
    }
    const double d = (kPi * alpha / 2.0) * specfun::bessel_struve_bracket(z) -
                     specfun::bessel_j2(z);
    return d / (z * z);
}

double kernel_shape(double alpha, double z) {
    return z * z * kernel_shape_over_z2(alpha, z);
}

double fourier_transform_continuum(const HookeParams& p, double s) {
    if (!(s >= 0.0)) throw std::domain_error("fourier_transform_continuum: s must be >= 0");
    const double r4 = p.R * p.R * p.R * p.R;
    return p.kappa * r4 * kernel_shape_over_z2(p.alpha(), s * p.R);
}

double mode_wavenumber(const PeriodicDomain& dom, double R, int k1, int k2) {
    const double q1 = k1 / dom.L1();
    const double q2 = k2 / dom.L2();
    return kPi * R * std::sqrt(q1 * q1 + q2 * q2);
}

double fourier_coeff_rect(const HookeParams& p, const PeriodicDomain& dom,
                          int k1, int k2) {
    if (!(p.R < dom.min_side()))
        throw std::domain_error(
            "fourier_coeff_rect: requires R < min(L1, L2), got R = " +
            std::to_string(p.R) + ", min side = " + std::to_string(dom.min_side()));
    const double z = mode_wavenumber(dom, p.R, k1, k2);
    const double r4 = p.R * p.R * p.R * p.R;
    return p.kappa * kPi * r4 / (2.0 * dom.L1() * dom.L2()) *
           kernel_shape_over_z2(p.alpha(), z);
}

} // namespace springnet
