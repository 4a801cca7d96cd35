#include "springnet/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "springnet/potential.hpp"
#include "springnet/specfun.hpp"

namespace springnet::dispersion {

namespace {

constexpr double kPi = std::numbers::pi;

template <typename Fn>
double golden_section_min(Fn&& f, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498948482;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

template <typename Fn>
double bisect_root(Fn&& f, double lo, double hi, double tol) {
    double flo = f(lo);
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid; flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

DimensionlessParams::DimensionlessParams(double alpha_, double beta_)
    : alpha(alpha_), beta(beta_) {
    if (!(alpha >= 0.0))
        throw std::invalid_argument("DimensionlessParams: alpha must be >= 0");
    if (!(beta >= 0.0))
        throw std::invalid_argument("DimensionlessParams: beta must be >= 0");
}

double F_alpha_beta(const DimensionlessParams& p, double z) {
    if (!(z >= 0.0)) throw std::domain_error("F_alpha_beta: z must be >= 0");
    // z^2 (1 + beta K(z)/z^2): keeps F(0) = 0 exact and avoids the
    // cancellation of the raw closed form near z = 0.
    return z * z * (1.0 + p.beta * kernel_shape_over_z2(p.alpha, z));
}

double small_z_coefficient(const DimensionlessParams& p) {
    return 4.0 + p.beta * (2.0 * p.alpha / 3.0 - 0.5);
}

bool wholespace_unstable(const DimensionlessParams& p) {
    return p.alpha < 0.75 && p.beta > 24.0 / (3.0 - 4.0 * p.alpha);
}

bool constant_state_unstable(double M, double f_star, double nu_f, double nu_d) {
    if (!(f_star > 0.0))
        throw std::invalid_argument("constant_state_unstable: f_star must be > 0");
    if (!(nu_f > 0.0) || !(nu_d > 0.0))
        throw std::invalid_argument("constant_state_unstable: rates must be > 0");
    if (M >= 0.0) return false;
    return f_star > (-1.0 / M) * (nu_d / nu_f);
}

DispersionScan scan(const DimensionlessParams& p, double z_max, int n_points) {
    if (!(z_max > 0.0)) throw std::invalid_argument("scan: z_max must be > 0");
    if (n_points < 100) throw std::invalid_argument("scan: n_points must be >= 100");

    DispersionScan out;
    out.z_grid.resize(n_points);
    out.F_values.resize(n_points);
    const double h = z_max / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        out.z_grid[i] = i * h;
        out.F_values[i] = F_alpha_beta(p, out.z_grid[i]);
    }

    const auto F = [&](double z) { return F_alpha_beta(p, z); };

    const auto it = std::min_element(out.F_values.begin(), out.F_values.end());
    const int im = static_cast<int>(it - out.F_values.begin());
    if (im == 0) {
        out.F_min = out.F_values[0]; // = 0 at z = 0
    } else {
        const double lo = out.z_grid[im - 1];
        const double hi = out.z_grid[std::min(im + 1, n_points - 1)];
        const double zm = golden_section_min(F, lo, hi, 1e-10);
        out.z_min = zm;
        out.F_min = F(zm);
    }

    // z0: bracket the exit of the first negative window, then bisect.
    int first_neg = -1;
    for (int i = 1; i < n_points; ++i) {
        if (out.F_values[i] < 0.0) { first_neg = i; break; }
    }
    if (first_neg >= 0) {
        for (int i = first_neg + 1; i < n_points; ++i) {
            if (out.F_values[i] > 0.0) {
                out.z0 = bisect_root(F, out.z_grid[i - 1], out.z_grid[i], 1e-12);
                break;
            }
        }
    }
    return out;
}

ModeStabilityTable mode_table(const DimensionlessParams& p, const PeriodicDomain& dom,
                              double R, int k_max) {
    if (!(R > 0.0) || !(R < dom.min_side()))
        throw std::domain_error("mode_table: requires 0 < R < min(L1, L2)");
    if (k_max < 1) throw std::invalid_argument("mode_table: k_max must be >= 1");

    ModeStabilityTable table;
    table.entries.reserve((2 * k_max + 1) * (2 * k_max + 1) - 1);
    for (int k1 = -k_max; k1 <= k_max; ++k1) {
        for (int k2 = -k_max; k2 <= k_max; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            const double z = mode_wavenumber(dom, R, k1, k2);
            const double f = F_alpha_beta(p, z);
            table.entries.push_back({k1, k2, z, -f / (R * R), f > 0.0});
        }
    }
    return table;
}

bool stability_inequality_at_pi(double alpha, double beta) {
    return F_alpha_beta(DimensionlessParams(alpha, beta), kPi) > 0.0;
}

double kernel_sup_bound(double alpha) {
    // Grid maximum over [0, 60]. Past z = 60 the envelope
    // (pi a/2)(4/(pi z) + (2/pi) sqrt(2/(pi z))) + sqrt(2/(pi z))
    // stays below 0.137 alpha + 0.11, which is kept as a floor.
    double bound = 0.0;
    for (int i = 1; i <= 6000; ++i) {
        const double z = i / 100.0;
        bound = std::max(bound, std::abs(kernel_shape(alpha, z)));
    }
    bound = std::max(bound, 0.137 * alpha + 0.11);
    return 1.1 * bound;
}

double stable_tail_start(const DimensionlessParams& p) {
    return std::sqrt(p.beta * kernel_sup_bound(p.alpha));
}

} // namespace springnet::dispersion
