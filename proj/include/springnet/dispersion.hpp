#ifndef SPRINGNET_DISPERSION_HPP
#define SPRINGNET_DISPERSION_HPP

#include <optional>
#include <vector>

#include "springnet/domain.hpp"

namespace springnet::dispersion {

/// alpha = l0/R, beta = 2 pi kappa f* nu_f R^4 / nu_d.
struct DimensionlessParams {
    double alpha = 0.0;
    double beta = 0.0;

    DimensionlessParams() = default;
    DimensionlessParams(double alpha_, double beta_);
};

/// F(z) = z^2 + beta ((pi alpha / 2)[J1 H0 - J0 H1](z) - J2(z)).
/// F(0) = 0 for every (alpha, beta); F < 0 at some z means the mode with
/// rescaled wavenumber z grows.
double F_alpha_beta(const DimensionlessParams& p, double z);

/// Coefficient of (z/2)^2 in the expansion of F around 0:
/// 4 + 2 alpha beta / 3 - beta / 2. Negative iff small wavenumbers grow.
double small_z_coefficient(const DimensionlessParams& p);

/// Whole-space instability region: alpha < 3/4 and beta > 24/(3 - 4 alpha).
/// Boundary points count as stable (strict inequalities).
bool wholespace_unstable(const DimensionlessParams& p);

/// Instability criterion in raw parameters: M < 0 and
/// f* > (-1/M)(nu_d/nu_f).
bool constant_state_unstable(double M, double f_star, double nu_f, double nu_d);

struct DispersionScan {
    std::vector<double> z_grid;
    std::vector<double> F_values;
    std::optional<double> z_min; ///< interior minimiser, absent when the minimum sits at z = 0
    double F_min = 0.0;
    std::optional<double> z0;    ///< upper edge of the first negative window of F
};

/// Uniform scan of F on [0, z_max] (n_points >= 100) refined by
/// golden-section search around the discrete minimum (1e-10 in z) and
/// bisection for z0 (1e-12).
DispersionScan scan(const DimensionlessParams& p, double z_max, int n_points);

struct ModeStabilityEntry {
    int k1 = 0;
    int k2 = 0;
    double z = 0.0;
    double lambda = 0.0; ///< growth rate, lambda R^2 = -F(z)
    bool stable = false;
};

struct ModeStabilityTable {
    std::vector<ModeStabilityEntry> entries;
};

/// Stability of every discrete mode 0 <= |k1|,|k2| <= k_max except (0,0)
/// on the given periodic rectangle. Requires R < min(L1, L2).
ModeStabilityTable mode_table(const DimensionlessParams& p, const PeriodicDomain& dom,
                              double R, int k_max);

/// F(pi) > 0, evaluated through the special functions. On the box
/// [-R,R]^2 this is the condition that no discrete mode is unstable.
bool stability_inequality_at_pi(double alpha, double beta);

/// Conservative bound on sup_z |(pi alpha / 2) bracket(z) - J2(z)|, used to
/// certify that F > 0 for all z beyond stable_tail_start.
double kernel_sup_bound(double alpha);

/// Smallest Z with the guarantee F(z) > 0 for all z > Z (from the sup
/// bound: z^2 > beta * bound).
double stable_tail_start(const DimensionlessParams& p);

} // namespace springnet::dispersion

#endif
