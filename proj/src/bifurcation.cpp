#include "springnet/bifurcation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "springnet/dispersion.hpp"
#include "springnet/errors.hpp"
#include "springnet/potential.hpp"

namespace springnet::bifurcation {

namespace {
constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;
} // namespace

std::string to_string(BifurcationType t) {
    return t == BifurcationType::supercritical ? "supercritical" : "subcritical";
}

double eigenvalue(const spectral::MacroParams& p, double f_star, int k1, int k2) {
    if (k1 == 0 && k2 == 0)
        throw std::invalid_argument("eigenvalue: (0,0) is the neutral mass mode");
    if (!(f_star > 0.0)) throw std::invalid_argument("eigenvalue: f_star must be > 0");
    const double L1 = p.domain.L1(), L2 = p.domain.L2();
    const double a = kPi * kPi * (k1 * k1 / (L1 * L1) + k2 * k2 / (L2 * L2));
    const double gamma_eff = p.gamma * p.domain.area() * f_star;
    const double v = fourier_coeff_rect(p.hooke, p.domain, k1, k2);
    return -a * (1.0 + gamma_eff * v);
}

double beta_critical(double R, double alpha, const PeriodicDomain& dom) {
    if (!(R > 0.0) || !(R < dom.min_side()))
        throw std::domain_error("beta_critical: requires 0 < R < min(L1, L2)");
    const double z10 = kPi * R / dom.L1();
    const double shape = kernel_shape(alpha, z10);
    if (!(shape < 0.0))
        throw AssumptionViolation(
            "beta_critical: interaction term at z_{1,0} = " + std::to_string(z10) +
            " is nonnegative (" + std::to_string(shape) +
            "); mode (1,0) is stable for every beta");
    const double beta = -z10 * z10 / shape;

    // cross-check the closed form by bisecting F(z10) in beta
    double lo = 0.0, hi = 2.0 * beta + 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + beta); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm =
            dispersion::F_alpha_beta(dispersion::DimensionlessParams(alpha, mid), z10);
        (fm > 0.0 ? lo : hi) = mid;
    }
    const double beta_bisect = 0.5 * (lo + hi);
    if (std::abs(beta_bisect - beta) > 1e-6 * (1.0 + beta))
        throw NumericalError("beta_critical: closed form and bisection disagree: " +
                             std::to_string(beta) + " vs " + std::to_string(beta_bisect));
    return beta;
}

double coeff_c(double gamma, double v10, double v20) {
    const double denom = 1.0 + gamma * v20;
    if (!(denom > 0.0))
        throw AssumptionViolation("coeff_c: requires 1 + gamma V20 > 0, got " +
                                  std::to_string(denom));
    return 2.0 * gamma * gamma * kPi * kPi * v10 * (2.0 * v20 - v10) / denom;
}

double coeff_d(double gamma, double v10, double v11) {
    const double denom = 1.0 + gamma * v11;
    if (!(denom > 0.0))
        throw AssumptionViolation("coeff_d: requires 1 + gamma V11 > 0, got " +
                                  std::to_string(denom));
    return 8.0 * gamma * gamma * kPi * kPi * v10 * v11 / denom;
}

BifurcationType classify_rectangular(double /*v10*/, double v20, double v_m10) {
    const double crit = 2.0 * v20 - v_m10;
    if (crit == 0.0)
        throw AssumptionViolation(
            "classify_rectangular: 2 V20 - V(-1,0) vanishes exactly; the cubic "
            "truncation is inconclusive");
    return crit > 0.0 ? BifurcationType::supercritical : BifurcationType::subcritical;
}

BifurcationType classify_square(double c, double d) {
    if (c == -std::abs(d))
        throw AssumptionViolation(
            "classify_square: c = -|d| exactly; the cubic truncation is inconclusive");
    return c < -std::abs(d) ? BifurcationType::supercritical : BifurcationType::subcritical;
}

double rect_cubic_coeff(double gamma, double L2, double v10, double v20, double v_m10) {
    const double denom = 1.0 + gamma * v20;
    if (!(denom > 0.0))
        throw AssumptionViolation("rect_cubic_coeff: requires 1 + gamma V20 > 0");
    return 8.0 * gamma * gamma * kPi * kPi * L2 * L2 * v10 * (2.0 * v20 - v_m10) / denom;
}

SlavedCoefficients slaved_mode_coefficient(double gamma, double v10, double v20,
                                           double v11) {
    const double d20 = 1.0 + gamma * v20;
    const double d11 = 1.0 + gamma * v11;
    if (!(d20 > 0.0) || !(d11 > 0.0))
        throw AssumptionViolation(
            "slaved_mode_coefficient: slaved-mode denominators must be positive");
    const double h11 = -gamma * v10 / d11;
    return {-gamma * v10 / (2.0 * d20), h11, h11};
}

namespace {

// RK4 on a pair of complex amplitudes; the rectangular equation is the
// B = 0 slice of the square system with c = coef3, d = 0.
AmplitudeTrajectory integrate_pair(double lambda, double c, double d, cplx A0, cplx B0,
                                   double t_end, double dt, bool track_b,
                                   double escape_scale) {
    if (!(dt > 0.0) || !(t_end > 0.0))
        throw std::invalid_argument("amplitude_ode: dt and t_end must be > 0");
    if (dt * lambda > 0.01)
        throw std::invalid_argument("amplitude_ode: requires dt * lambda <= 0.01");

    const auto deriv = [&](cplx A, cplx B, cplx& dA, cplx& dB) {
        dA = lambda * A + c * std::norm(A) * A + d * std::norm(B) * A;
        dB = lambda * B + c * std::norm(B) * B + d * std::norm(A) * B;
    };

    AmplitudeTrajectory out;
    const long n = std::llround(t_end / dt);
    out.t.reserve(n + 1);
    out.A.reserve(n + 1);
    if (track_b) out.B.reserve(n + 1);

    cplx A = A0, B = B0;
    for (long i = 0; i <= n; ++i) {
        out.t.push_back(i * dt);
        out.A.push_back(A);
        if (track_b) out.B.push_back(B);
        if (escape_scale > 0.0 &&
            std::max(std::abs(A), std::abs(B)) > 10.0 * escape_scale) {
            out.escaped = true;
            break;
        }
        if (i == n) break;
        cplx k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b;
        deriv(A, B, k1a, k1b);
        deriv(A + 0.5 * dt * k1a, B + 0.5 * dt * k1b, k2a, k2b);
        deriv(A + 0.5 * dt * k2a, B + 0.5 * dt * k2b, k3a, k3b);
        deriv(A + dt * k3a, B + dt * k3b, k4a, k4b);
        A += dt / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
        B += dt / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
        if (!std::isfinite(A.real()) || !std::isfinite(B.real()))
            throw NumericalError("amplitude_ode: trajectory diverged");
    }
    return out;
}

double escape_scale_for(double lambda, double cubic) {
    if (lambda <= 0.0 || cubic == 0.0) return 0.0;
    return std::sqrt(lambda / std::abs(cubic));
}

} // namespace

AmplitudeTrajectory amplitude_ode_rect(double lambda, double coef3, cplx A0, double t_end,
                                       double dt) {
    return integrate_pair(lambda, coef3, 0.0, A0, {0.0, 0.0}, t_end, dt, false,
                          escape_scale_for(lambda, coef3));
}

AmplitudeTrajectory amplitude_ode_square(double lambda, double c, double d, cplx A0,
                                         cplx B0, double t_end, double dt) {
    return integrate_pair(lambda, c, d, A0, B0, t_end, dt, true,
                          escape_scale_for(lambda, c + d));
}

BifurcationReport analyze(double R, double alpha, const PeriodicDomain& dom,
                          std::optional<double> beta_opt, int k_max) {
    BifurcationReport rep;
    rep.R = R;
    rep.alpha = alpha;
    rep.beta_c = beta_critical(R, alpha, dom);
    rep.beta = beta_opt.value_or(rep.beta_c);
    rep.square = dom.L1() == dom.L2();

    const HookeParams hooke(1.0, alpha * R, R);
    // beta = 2 pi kappa f* gamma R^4 with f* = 1/(4 L1 L2)
    const double gamma = rep.beta * dom.area() / (2.0 * kPi * R * R * R * R);
    rep.gamma_eff = gamma;

    const double v10 = fourier_coeff_rect(hooke, dom, 1, 0);
    const double v20 = fourier_coeff_rect(hooke, dom, 2, 0);
    const double v11 = fourier_coeff_rect(hooke, dom, 1, 1);
    const double v_m10 = fourier_coeff_rect(hooke, dom, -1, 0);

    const double L1 = dom.L1(), L2 = dom.L2();
    auto lam = [&](int k1, int k2) {
        const double a = kPi * kPi * (k1 * k1 / (L1 * L1) + k2 * k2 / (L2 * L2));
        return -a * (1.0 + gamma * fourier_coeff_rect(hooke, dom, k1, k2));
    };
    for (int k1 = 0; k1 <= k_max; ++k1)
        for (int k2 = 0; k2 <= k_max; ++k2)
            if (k1 || k2) rep.lambda_table[{k1, k2}] = lam(k1, k2);

    const double lambda10 = rep.lambda_table.at({1, 0});
    if (lambda10 < -1e-9)
        rep.violated.push_back("lambda_{1,0} <= 0: beta is below the critical value");

    // every mode other than the critical pair must decay
    for (const auto& [k, l] : rep.lambda_table) {
        const bool critical_mode =
            rep.square ? (k == std::pair{1, 0} || k == std::pair{0, 1})
                       : (k == std::pair{1, 0});
        if (!critical_mode && l >= 0.0)
            rep.violated.push_back("lambda_{" + std::to_string(k.first) + "," +
                                   std::to_string(k.second) +
                                   "} = " + std::to_string(l) + " is not negative");
    }
    // ... and the truncation must cover everything the tail bound does not
    {
        dispersion::DimensionlessParams dp(alpha, rep.beta);
        const double z_tail = dispersion::stable_tail_start(dp);
        const double z_cov = mode_wavenumber(dom, R, k_max, 0);
        if (z_cov < z_tail)
            rep.violated.push_back("k_max too small to certify stability of the tail");
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (rep.square) {
        try {
            rep.c = coeff_c(gamma, v10, v20);
            rep.d = coeff_d(gamma, v10, v11);
            rep.classification = classify_square(rep.c, rep.d);
        } catch (const AssumptionViolation& e) {
            rep.c = std::isfinite(rep.c) ? rep.c : nan;
            rep.d = nan;
            rep.classification = BifurcationType::subcritical;
            rep.violated.push_back(std::string("cubic coefficients unreliable: ") + e.what());
        }
        if (rep.classification == BifurcationType::supercritical && lambda10 > 1e-12 &&
            rep.c + rep.d < 0.0)
            rep.stationary_amplitude = std::sqrt(lambda10 / -(rep.c + rep.d));
    } else {
        try {
            rep.rect_coef3 = rect_cubic_coeff(gamma, L2, v10, v20, v_m10);
            rep.classification = classify_rectangular(v10, v20, v_m10);
        } catch (const AssumptionViolation& e) {
            rep.rect_coef3 = nan;
            rep.classification = BifurcationType::subcritical;
            rep.violated.push_back(std::string("cubic coefficient unreliable: ") + e.what());
        }
        if (rep.classification == BifurcationType::supercritical && lambda10 > 1e-12 &&
            rep.rect_coef3 < 0.0)
            rep.stationary_amplitude = std::sqrt(lambda10 / -rep.rect_coef3);
    }

    rep.assumptions_ok = rep.violated.empty();
    return rep;
}

} // namespace springnet::bifurcation
