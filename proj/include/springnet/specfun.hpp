#ifndef SPRINGNET_SPECFUN_HPP
#define SPRINGNET_SPECFUN_HPP

namespace springnet::specfun {

/// Value together with a conservative absolute error bound.
struct Result {
    double value;
    double est_error;
};

// Bessel functions of the first kind, orders 0..2, real x >= 0.
// Power series below the switch point, Hankel asymptotic expansion above;
// absolute error <= 1e-10 on [0, 100] (in practice ~1e-13).
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_j2(double x);

/// Checked entry point. Throws std::invalid_argument for order outside
/// {0,1,2} and std::domain_error for x < 0.
double bessel_j(int order, double x);
Result bessel_j_detailed(int order, double x);

// Struve functions H0, H1, real x >= 0. Same accuracy contract.
double struve_h0(double x);
double struve_h1(double x);

/// Checked entry point, order in {0,1}.
double struve_h(int order, double x);
Result struve_h_detailed(int order, double x);

/// J1(z)H0(z) - J0(z)H1(z). Single shared implementation of the
/// combination every dispersion/transform formula uses.
double bessel_struve_bracket(double z);

/// Switch points between the power series and the asymptotic expansions
/// (exposed so tests can probe continuity across them).
inline constexpr double bessel_series_cutoff = 18.0;
inline constexpr double struve_series_cutoff = 22.0;

} // namespace springnet::specfun

#endif
