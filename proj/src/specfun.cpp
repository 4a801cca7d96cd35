#include "springnet/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace springnet::specfun {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kLdEps = 1.0842e-19L; // 2^-63

struct LdResult {
    long double value;
    long double est_error;
};

// Maclaurin series J_n(x) = sum_m (-1)^m / (m! (m+n)!) (x/2)^{2m+n}.
// Accumulated in long double; the error scale is the sum of term
// magnitudes (= I_n(x)), which stays below ~6e6 for x <= 18.
LdResult bessel_series(int n, long double x) {
    const long double q = (x / 2) * (x / 2);
    long double term = 1.0L;
    for (int i = 1; i <= n; ++i) term *= (x / 2) / i;
    long double sum = term;
    long double abs_sum = std::fabs(term);
    for (int m = 1; m <= 200; ++m) {
        term *= -q / (static_cast<long double>(m) * (m + n));
        sum += term;
        abs_sum += std::fabs(term);
        if (std::fabs(term) < 1e-16L * (abs_sum + 1e-300L)) break;
    }
    return {sum, abs_sum * kLdEps * 8 + std::fabs(term)};
}

// Struve series H_n(x) = sum_m (-1)^m (x/2)^{2m+n+1} /
// (Gamma(m+3/2) Gamma(m+n+3/2)).  Leading coefficients come from
// Gamma(1/2) = sqrt(pi) and the half-integer recursion.
LdResult struve_series(int n, long double x) {
    const long double sqrt_pi = std::sqrt(kPi);
    long double g_a = sqrt_pi / 2;                  // Gamma(3/2)
    long double g_b = sqrt_pi / 2;                  // Gamma(n+3/2)
    for (int i = 0; i < n; ++i) g_b *= (i + 1.5L);
    const long double q = (x / 2) * (x / 2);
    long double term = std::pow(x / 2, n + 1) / (g_a * g_b);
    long double sum = term;
    long double abs_sum = std::fabs(term);
    for (int m = 0; m <= 200; ++m) {
        term *= -q / ((m + 1.5L) * (m + n + 1.5L));
        sum += term;
        abs_sum += std::fabs(term);
        if (std::fabs(term) < 1e-16L * (abs_sum + 1e-300L)) break;
    }
    return {sum, abs_sum * kLdEps * 8 + std::fabs(term)};
}

struct AsymJY {
    long double j;
    long double y;
    long double est_error;
};

// Hankel expansion: J_n = sqrt(2/(pi x)) (P cos chi - Q sin chi),
// Y_n = sqrt(2/(pi x)) (P sin chi + Q cos chi), chi = x - (2n+1) pi/4.
// Terms are added while they decrease; the first omitted term bounds the
// truncation error.  For x >= 18 that bound is far below 1e-12.
AsymJY bessel_asymptotic(int n, long double x) {
    const long double mu = 4.0L * n * n;
    long double p = 1.0L, q = 0.0L;
    long double a = 1.0L;
    long double prev = 1e300L;
    long double trunc = 0.0L;
    for (int k = 1; k <= 60; ++k) {
        const long double odd = 2.0L * k - 1.0L;
        a *= (mu - odd * odd) / (8.0L * k * x);
        const long double mag = std::fabs(a);
        if (mag >= prev) { trunc = mag; break; }
        prev = mag;
        trunc = mag;
        switch (k % 4) {
            case 1: q += a; break;
            case 2: p -= a; break;
            case 3: q -= a; break;
            case 0: p += a; break;
        }
        if (mag < 1e-20L) break;
    }
    const long double chi = x - (2 * n + 1) * kPi / 4;
    const long double amp = std::sqrt(2.0L / (kPi * x));
    const long double c = std::cos(chi), s = std::sin(chi);
    return {amp * (p * c - q * s), amp * (p * s + q * c), amp * trunc + 1e-17L};
}

// H_n - Y_n ~ (1/pi) sum_k Gamma(k+1/2) (x/2)^{n-2k-1} / Gamma(n+1/2-k);
// term ratio (k+1/2)(n-1/2-k) (2/x)^2.  Alternating once the second
// factor goes negative, so the first omitted term bounds the error.
LdResult struve_asymptotic_correction(int n, long double x) {
    long double term = (n == 0) ? 2.0L / (kPi * x) : 2.0L / kPi;
    long double sum = term;
    long double prev = std::fabs(term);
    long double trunc = 0.0L;
    for (int k = 0; k <= 60; ++k) {
        term *= (k + 0.5L) * (n - 0.5L - k) * 4.0L / (x * x);
        const long double mag = std::fabs(term);
        if (mag >= prev) { trunc = mag; break; }
        prev = mag;
        trunc = mag;
        sum += term;
        if (mag < 1e-20L) break;
    }
    return {sum, trunc};
}

Result bessel_impl(int n, double x) {
    if (x <= bessel_series_cutoff) {
        const LdResult r = bessel_series(n, x);
        return {static_cast<double>(r.value), static_cast<double>(r.est_error)};
    }
    const AsymJY r = bessel_asymptotic(n, x);
    return {static_cast<double>(r.j), static_cast<double>(r.est_error)};
}

Result struve_impl(int n, double x) {
    if (x <= struve_series_cutoff) {
        const LdResult r = struve_series(n, x);
        return {static_cast<double>(r.value), static_cast<double>(r.est_error)};
    }
    const AsymJY jy = bessel_asymptotic(n, x);
    const LdResult corr = struve_asymptotic_correction(n, x);
    return {static_cast<double>(jy.y + corr.value),
            static_cast<double>(jy.est_error + corr.est_error)};
}

void check_arg(int order, int max_order, double x, const char* name) {
    if (order < 0 || order > max_order)
        throw std::invalid_argument(std::string(name) + ": unsupported order " +
                                    std::to_string(order));
    if (!(x >= 0.0))
        throw std::domain_error(std::string(name) + ": argument must be >= 0, got " +
                                std::to_string(x));
}

} // namespace

double bessel_j0(double x) { return bessel_impl(0, x).value; }
double bessel_j1(double x) { return bessel_impl(1, x).value; }
double bessel_j2(double x) { return bessel_impl(2, x).value; }

Result bessel_j_detailed(int order, double x) {
    check_arg(order, 2, x, "bessel_j");
    return bessel_impl(order, x);
}

double bessel_j(int order, double x) { return bessel_j_detailed(order, x).value; }

double struve_h0(double x) { return struve_impl(0, x).value; }
double struve_h1(double x) { return struve_impl(1, x).value; }

Result struve_h_detailed(int order, double x) {
    check_arg(order, 1, x, "struve_h");
    return struve_impl(order, x);
}

double struve_h(int order, double x) { return struve_h_detailed(order, x).value; }

double bessel_struve_bracket(double z) {
    if (!(z >= 0.0))
        throw std::domain_error("bessel_struve_bracket: argument must be >= 0");
    return bessel_j1(z) * struve_h0(z) - bessel_j0(z) * struve_h1(z);
}

} // namespace springnet::specfun
