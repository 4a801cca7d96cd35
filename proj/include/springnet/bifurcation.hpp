#ifndef SPRINGNET_BIFURCATION_HPP
#define SPRINGNET_BIFURCATION_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "springnet/spectral.hpp"

namespace springnet::bifurcation {

enum class BifurcationType { supercritical, subcritical };

std::string to_string(BifurcationType t);

/// Growth rate of mode (k1,k2) of the linearised dynamics around the
/// constant state f*:
///   lambda = -pi^2 (k1^2/L1^2 + k2^2/L2^2) (1 + gamma_eff V-hat_{k1,k2}),
/// gamma_eff = gamma 4 L1 L2 f*. The mass mode (0,0) is rejected.
double eigenvalue(const spectral::MacroParams& p, double f_star, int k1, int k2);

/// beta at which mode (1,0) turns neutral: F^{alpha,beta}(z_{1,0}) = 0,
/// z_{1,0} = pi R / L1. Closed form, cross-checked by bisection on F.
/// Throws AssumptionViolation when the interaction term at z_{1,0} is
/// nonnegative (no beta destabilises the mode).
double beta_critical(double R, double alpha, const PeriodicDomain& dom);

/// Cubic coefficients of the reduced square-domain system
/// (unit box normalisation, kappa folded into the V-hat values):
///   c = 2 gamma^2 pi^2 V10 (2 V20 - V10) / (1 + gamma V20)
///   d = 8 gamma^2 pi^2 V10 V11 / (1 + gamma V11)
/// Throw AssumptionViolation when the slaved-mode denominator is <= 0.
double coeff_c(double gamma, double v10, double v20);
double coeff_d(double gamma, double v10, double v11);

/// Rectangular criterion: supercritical iff 2 V20 - V(-1,0) > 0.
/// Exactly zero is degenerate (cubic truncation inconclusive) and throws.
BifurcationType classify_rectangular(double v10, double v20, double v_m10);

/// Square criterion: supercritical iff c < -|d|; equality throws.
BifurcationType classify_square(double c, double d);

/// Cubic coefficient of the reduced rectangular equation
/// A' = lambda A + coef3 |A|^2 A:
///   coef3 = 8 gamma^2 pi^2 L2^2 V10 (2 V20 - V(-1,0)) / (1 + gamma V20).
double rect_cubic_coeff(double gamma, double L2, double v10, double v20, double v_m10);

struct SlavedCoefficients {
    double h20;  ///< -gamma V10 / (2 (1 + gamma V20))
    double h11;  ///< -gamma V10 / (1 + gamma V11)
    double h1m1; ///< equals h11
};
SlavedCoefficients slaved_mode_coefficient(double gamma, double v10, double v20,
                                           double v11);

struct AmplitudeTrajectory {
    std::vector<double> t;
    std::vector<std::complex<double>> A;
    std::vector<std::complex<double>> B; ///< empty for the rectangular equation
    bool escaped = false; ///< stopped after |A| or |B| exceeded 10x the perturbative scale
};

/// RK4 on A' = lambda A + coef3 |A|^2 A. Requires dt lambda <= 0.01.
AmplitudeTrajectory amplitude_ode_rect(double lambda, double coef3,
                                       std::complex<double> A0, double t_end, double dt);

/// RK4 on the coupled pair A' = lambda A + c|A|^2 A + d|B|^2 A and the
/// symmetric equation for B.
AmplitudeTrajectory amplitude_ode_square(double lambda, double c, double d,
                                         std::complex<double> A0, std::complex<double> B0,
                                         double t_end, double dt);

struct BifurcationReport {
    double R = 0.0;
    double alpha = 0.0;
    double beta = 0.0;   ///< beta the report is evaluated at
    double beta_c = 0.0;
    double gamma_eff = 0.0;
    std::map<std::pair<int, int>, double> lambda_table;
    double c = 0.0;
    double d = 0.0;               ///< square case only
    bool square = true;
    double rect_coef3 = 0.0;      ///< rectangular case only
    BifurcationType classification = BifurcationType::supercritical;
    std::optional<double> stationary_amplitude;
    bool assumptions_ok = true;
    std::vector<std::string> violated;
};

/// Full analysis at (R, alpha) on the given domain with kappa = 1 and
/// f* = 1/(4 L1 L2). beta defaults to beta_c (the paper's convention for
/// evaluating c and d). k_max bounds the eigenvalue table.
BifurcationReport analyze(double R, double alpha, const PeriodicDomain& dom,
                          std::optional<double> beta = std::nullopt, int k_max = 8);

} // namespace springnet::bifurcation

#endif
