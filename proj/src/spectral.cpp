#include "springnet/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "springnet/errors.hpp"

namespace springnet::spectral {

namespace {
constexpr double kPi = std::numbers::pi;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double slope_fit(const std::vector<double>& t, const std::vector<double>& y) {
    const std::size_t n = t.size();
    double tm = 0, ym = 0;
    for (std::size_t i = 0; i < n; ++i) { tm += t[i]; ym += y[i]; }
    tm /= n; ym /= n;
    double num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (t[i] - tm) * (y[i] - ym);
        den += (t[i] - tm) * (t[i] - tm);
    }
    return num / den;
}
} // namespace

void MacroParams::validate() const {
    if (!power_of_two(n1) || !power_of_two(n2) || n1 < 16 || n2 < 16)
        throw std::invalid_argument("MacroParams: n1, n2 must be powers of two >= 16");
    if (!(hooke.R < domain.min_side()))
        throw std::invalid_argument("MacroParams: requires R < min(L1, L2)");
    if (!(dt > 0.0)) throw std::invalid_argument("MacroParams: dt must be > 0");
    if (!(gamma >= 0.0)) throw std::invalid_argument("MacroParams: gamma must be >= 0");
}

SpectralField::SpectralField(int n1, int n2, const PeriodicDomain& dom)
    : n1_(n1), n2_(n2), dom_(dom),
      c_(static_cast<std::size_t>(n1) * (n2 / 2 + 1), {0.0, 0.0}) {}

std::complex<double> SpectralField::mode(int k1, int k2) const {
    if (std::abs(k1) > n1_ / 2 || std::abs(k2) > n2_ / 2)
        throw std::invalid_argument("SpectralField::mode: wavenumber out of range");
    if (k2 < 0) return std::conj(mode(-k1, -k2));
    const int row = k1 >= 0 ? k1 : k1 + n1_;
    const std::complex<double> v = c_[static_cast<std::size_t>(row) * (n2_ / 2 + 1) + k2];
    return ((k1 + k2) & 1) ? -v : v;
}

MacroSolver::MacroSolver(const MacroParams& p) : p_(p), nc_(p.n2 / 2 + 1) {
    p_.validate();
    const std::size_t ns = static_cast<std::size_t>(p_.n1) * nc_;
    const std::size_t np = static_cast<std::size_t>(p_.n1) * p_.n2;
    vhat_.resize(ns);
    lap_.resize(ns);
    dk1_.resize(ns);
    dk2_.resize(ns);
    keep_.resize(ns);
    spec_.resize(ns);
    phys_.resize(np);
    fphys_.resize(np);
    u1_.resize(np);
    u2_.resize(np);

    const double L1 = p_.domain.L1(), L2 = p_.domain.L2();
    for (int r = 0; r < p_.n1; ++r) {
        const int k1 = r <= p_.n1 / 2 ? r : r - p_.n1;
        for (int k2 = 0; k2 < nc_; ++k2) {
            const std::size_t id = static_cast<std::size_t>(r) * nc_ + k2;
            vhat_[id] = fourier_coeff_rect(p_.hooke, p_.domain, k1, k2);
            const double q1 = kPi * k1 / L1, q2 = kPi * k2 / L2;
            lap_[id] = -(q1 * q1 + q2 * q2);
            dk1_[id] = (std::abs(k1) == p_.n1 / 2) ? 0.0 : q1;
            dk2_[id] = (k2 == p_.n2 / 2) ? 0.0 : q2;
            keep_[id] = (3 * std::abs(k1) <= p_.n1) && (3 * k2 <= p_.n2);
        }
    }

    plan_r2c_ = reinterpret_cast<fftw_plan_s*>(fftw_plan_dft_r2c_2d(
        p_.n1, p_.n2, phys_.data(), reinterpret_cast<fftw_complex*>(spec_.data()),
        FFTW_ESTIMATE));
    plan_c2r_ = reinterpret_cast<fftw_plan_s*>(fftw_plan_dft_c2r_2d(
        p_.n1, p_.n2, reinterpret_cast<fftw_complex*>(spec_.data()), phys_.data(),
        FFTW_ESTIMATE));
    if (!plan_r2c_ || !plan_c2r_) throw NumericalError("MacroSolver: FFTW planning failed");
}

MacroSolver::~MacroSolver() {
    if (plan_r2c_) fftw_destroy_plan(reinterpret_cast<fftw_plan>(plan_r2c_));
    if (plan_c2r_) fftw_destroy_plan(reinterpret_cast<fftw_plan>(plan_c2r_));
}

void MacroSolver::check_shape(const SpectralField& f) const {
    if (f.n1() != p_.n1 || f.n2() != p_.n2)
        throw std::invalid_argument("MacroSolver: field size mismatch");
}

double MacroSolver::vhat(int k1, int k2) const {
    const int r = ((k1 % p_.n1) + p_.n1) % p_.n1;
    const int c = std::abs(k2);
    if (c >= nc_) throw std::invalid_argument("vhat: k2 out of range");
    return vhat_[static_cast<std::size_t>(r) * nc_ + c];
}

SpectralField MacroSolver::constant_density() const {
    SpectralField f(p_.n1, p_.n2, p_.domain);
    f.c_[0] = 1.0 / p_.domain.area();
    return f;
}

SpectralField MacroSolver::from_physical(const std::vector<double>& f) {
    if (f.size() != phys_.size())
        throw std::invalid_argument("from_physical: grid size mismatch");
    std::copy(f.begin(), f.end(), phys_.begin());
    fftw_execute(reinterpret_cast<fftw_plan>(plan_r2c_));
    SpectralField out(p_.n1, p_.n2, p_.domain);
    const double norm = 1.0 / (static_cast<double>(p_.n1) * p_.n2);
    for (std::size_t i = 0; i < spec_.size(); ++i) out.c_[i] = spec_[i] * norm;
    return out;
}

std::vector<double> MacroSolver::to_physical(const SpectralField& f) {
    check_shape(f);
    std::copy(f.c_.begin(), f.c_.end(), spec_.begin());
    fftw_execute(reinterpret_cast<fftw_plan>(plan_c2r_));
    return phys_;
}

void MacroSolver::add_cosine(SpectralField& f, int k1, int k2, double eps) const {
    check_shape(f);
    if (k1 == 0 && k2 == 0) throw std::invalid_argument("add_cosine: (0,0) is the mass mode");
    if (std::abs(k1) >= p_.n1 / 2 || std::abs(k2) >= p_.n2 / 2)
        throw std::invalid_argument("add_cosine: mode at or beyond the Nyquist limit");
    if (k2 < 0 || (k2 == 0 && k1 < 0)) { k1 = -k1; k2 = -k2; }
    const int row = k1 >= 0 ? k1 : k1 + p_.n1;
    const double phase = ((k1 + k2) & 1) ? -1.0 : 1.0;
    f.c_[static_cast<std::size_t>(row) * nc_ + k2] += phase * eps / 2.0;
}

void MacroSolver::add_noise(SpectralField& f, double eps, std::uint64_t seed) {
    check_shape(f);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double mean = 0.0;
    for (auto& v : phys_) { v = gauss(rng); mean += v; }
    mean /= phys_.size();
    for (auto& v : phys_) v = (v - mean) * eps;
    fftw_execute(reinterpret_cast<fftw_plan>(plan_r2c_));
    const double norm = 1.0 / (static_cast<double>(p_.n1) * p_.n2);
    for (std::size_t i = 1; i < spec_.size(); ++i) f.c_[i] += spec_[i] * norm;
}

SpectralField MacroSolver::convolution_coeffs(const SpectralField& f) const {
    check_shape(f);
    SpectralField out(p_.n1, p_.n2, p_.domain);
    const double a = p_.domain.area();
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a * vhat_[i] * f.c_[i];
    return out;
}

MacroSolver::Nonlinear MacroSolver::nonlinear_term(const SpectralField& f) {
    const double area = p_.domain.area();
    const std::size_t ns = spec_.size();
    const std::size_t np = phys_.size();

    std::copy(f.c_.begin(), f.c_.end(), spec_.begin());
    fftw_execute(reinterpret_cast<fftw_plan>(plan_c2r_));
    fphys_ = phys_;

    // u = grad(V * f)
    for (std::size_t i = 0; i < ns; ++i) {
        const std::complex<double> conv = area * vhat_[i] * f.c_[i];
        spec_[i] = std::complex<double>(-conv.imag(), conv.real()) * dk1_[i];
    }
    fftw_execute(reinterpret_cast<fftw_plan>(plan_c2r_));
    u1_ = phys_;
    for (std::size_t i = 0; i < ns; ++i) {
        const std::complex<double> conv = area * vhat_[i] * f.c_[i];
        spec_[i] = std::complex<double>(-conv.imag(), conv.real()) * dk2_[i];
    }
    fftw_execute(reinterpret_cast<fftw_plan>(plan_c2r_));
    u2_ = phys_;

    Nonlinear out;
    out.nhat.assign(ns, {0.0, 0.0});
    double grad2 = 0.0, fmin = fphys_[0];
    for (std::size_t j = 0; j < np; ++j) {
        grad2 = std::max(grad2, u1_[j] * u1_[j] + u2_[j] * u2_[j]);
        fmin = std::min(fmin, fphys_[j]);
    }
    out.grad_max = std::sqrt(grad2);
    out.f_min = fmin;

    const double norm = 1.0 / (static_cast<double>(p_.n1) * p_.n2);
    for (std::size_t j = 0; j < np; ++j) phys_[j] = fphys_[j] * u1_[j];
    fftw_execute(reinterpret_cast<fftw_plan>(plan_r2c_));
    for (std::size_t i = 0; i < ns; ++i) {
        if (p_.dealias && !keep_[i]) continue;
        const std::complex<double> w = spec_[i] * norm;
        out.nhat[i] += p_.gamma * dk1_[i] * std::complex<double>(-w.imag(), w.real());
    }
    for (std::size_t j = 0; j < np; ++j) phys_[j] = fphys_[j] * u2_[j];
    fftw_execute(reinterpret_cast<fftw_plan>(plan_r2c_));
    for (std::size_t i = 0; i < ns; ++i) {
        if (p_.dealias && !keep_[i]) continue;
        const std::complex<double> w = spec_[i] * norm;
        out.nhat[i] += p_.gamma * dk2_[i] * std::complex<double>(-w.imag(), w.real());
    }
    out.nhat[0] = 0.0; // divergence form: the mass mode never moves
    return out;
}

SpectralField MacroSolver::rhs(const SpectralField& f) {
    check_shape(f);
    const Nonlinear nl = nonlinear_term(f);
    SpectralField out(p_.n1, p_.n2, p_.domain);
    for (std::size_t i = 0; i < out.c_.size(); ++i)
        out.c_[i] = lap_[i] * f.c_[i] + nl.nhat[i];
    out.c_[0] = 0.0;
    return out;
}

void MacroSolver::step_semi_implicit(SpectralField& f) { step_semi_implicit(f, p_.dt); }

void MacroSolver::step_semi_implicit(SpectralField& f, double dt) {
    check_shape(f);
    if (!(dt > 0.0)) throw std::invalid_argument("step_semi_implicit: dt must be > 0");
    const Nonlinear nl = nonlinear_term(f);
    const double h = std::min(2.0 * p_.domain.L1() / p_.n1, 2.0 * p_.domain.L2() / p_.n2);
    if (dt * p_.gamma * nl.grad_max / h > 0.5)
        throw GuardViolation("macro step guard violated: dt*gamma*max|grad(V*f)|/h = " +
                             std::to_string(dt * p_.gamma * nl.grad_max / h) + " > 0.5");
    last_grad_max_ = nl.grad_max;
    for (std::size_t i = 0; i < f.c_.size(); ++i)
        f.c_[i] = (f.c_[i] + dt * nl.nhat[i]) / (1.0 - dt * lap_[i]);
    for (const auto& v : f.c_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NumericalError("macro step: spectral coefficients became non-finite");
}

double MacroSolver::min_value(const SpectralField& f) {
    const auto v = to_physical(f);
    return *std::min_element(v.begin(), v.end());
}

double MacroSolver::free_energy(const SpectralField& f) {
    check_shape(f);
    const auto fv = to_physical(f);
    const auto it = std::min_element(fv.begin(), fv.end());
    if (!(*it > 0.0)) {
        const std::size_t j = it - fv.begin();
        throw PositivityError("free_energy: density must be positive; min f = " +
                              std::to_string(*it) + " at grid cell (" +
                              std::to_string(j / p_.n2) + ", " + std::to_string(j % p_.n2) +
                              ")");
    }
    const auto conv = to_physical(convolution_coeffs(f));
    const double cell = p_.domain.area() / (static_cast<double>(p_.n1) * p_.n2);
    double acc = 0.0;
    for (std::size_t j = 0; j < fv.size(); ++j)
        acc += fv[j] * std::log(fv[j]) + 0.5 * p_.gamma * fv[j] * conv[j];
    return acc * cell;
}

double MacroSolver::cfl_max_dt(const SpectralField& f) {
    const Nonlinear nl = nonlinear_term(f);
    last_grad_max_ = nl.grad_max;
    const double h = std::min(2.0 * p_.domain.L1() / p_.n1, 2.0 * p_.domain.L2() / p_.n2);
    const double denom = p_.gamma * nl.grad_max;
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return 0.5 * h / denom;
}

double MacroSolver::measure_growth_rate(int k1, int k2, double eps, double t_window) {
    const double f_star = 1.0 / p_.domain.area();
    if (!(eps > 0.0) || eps > 1e-4 * f_star)
        throw std::invalid_argument("measure_growth_rate: requires 0 < eps <= 1e-4 f*");
    if (!(t_window > 0.0))
        throw std::invalid_argument("measure_growth_rate: t_window must be > 0");
    SpectralField f = constant_density();
    add_cosine(f, k1, k2, eps);
    const int n_steps = std::max(8, static_cast<int>(std::llround(t_window / p_.dt)));
    std::vector<double> ts, logs;
    ts.reserve(n_steps + 1);
    logs.reserve(n_steps + 1);
    for (int i = 0; i <= n_steps; ++i) {
        const double a = std::abs(f.mode(k1, k2));
        if (a > 1e-2 * f_star)
            throw std::invalid_argument(
                "measure_growth_rate: amplitude left the linear regime before the "
                "window ended; use a smaller eps");
        if (!(a > 0.0))
            throw NumericalError("measure_growth_rate: mode amplitude underflowed");
        ts.push_back(i * p_.dt);
        logs.push_back(std::log(a));
        if (i < n_steps) step_semi_implicit(f);
    }
    return slope_fit(ts, logs);
}

RunResult MacroSolver::run(SpectralField& f, const RunOptions& opt) {
    check_shape(f);
    if (!(opt.t_end > 0.0)) throw std::invalid_argument("run: t_end must be > 0");
    const double dt_req = opt.dt > 0.0 ? opt.dt : p_.dt;

    RunResult res;
    const double h = std::min(2.0 * p_.domain.L1() / p_.n1, 2.0 * p_.domain.L2() / p_.n2);

    double fmin = min_value(f);
    res.min_f = fmin;
    if (fmin <= 0.0) {
        res.status = RunStatus::positivity_lost;
        return res;
    }
    double F_prev = opt.track_free_energy ? free_energy(f) : 0.0;

    auto record = [&](double t, double F) {
        res.series.push_back({t, f.mass_coeff(), F, std::abs(f.mode(1, 0)),
                              std::abs(f.mode(0, 1)), std::abs(f.mode(1, 1)),
                              std::abs(f.mode(2, 0))});
    };
    record(0.0, F_prev);
    if (opt.snapshot_every > 0) res.snapshots.push_back({0.0, to_physical(f)});

    if (opt.adaptive) cfl_max_dt(f); // primes the cached gradient bound

    double t = 0.0;
    long step_idx = 0;
    while (t < opt.t_end * (1.0 - 1e-12)) {
        double dt = std::min(dt_req, opt.t_end - t);
        if (opt.adaptive && p_.gamma * last_grad_max_ > 0.0)
            dt = std::min(dt, 0.45 * h / (p_.gamma * last_grad_max_));
        if (dt < 1e-10)
            throw GuardViolation("run: adaptive step size collapsed below 1e-10 at t = " +
                                 std::to_string(t));
        step_semi_implicit(f, dt);
        t += dt;
        ++step_idx;

        fmin = min_value(f);
        res.min_f = fmin;
        res.t_final = t;
        if (fmin <= 0.0) {
            res.status = RunStatus::positivity_lost;
            record(t, F_prev);
            break;
        }
        double F_now = F_prev;
        if (opt.track_free_energy) {
            F_now = free_energy(f);
            res.max_free_energy_rise = std::max(res.max_free_energy_rise, F_now - F_prev);
            F_prev = F_now;
        }
        if (step_idx % std::max(1, opt.series_every) == 0 || t >= opt.t_end * (1.0 - 1e-12))
            record(t, F_now);
        if (opt.snapshot_every > 0 && step_idx % opt.snapshot_every == 0)
            res.snapshots.push_back({t, to_physical(f)});
        if (opt.stop_threshold > 0.0 &&
            std::max(std::abs(f.mode(1, 0)), std::abs(f.mode(0, 1))) >= opt.stop_threshold) {
            res.status = RunStatus::threshold_reached;
            break;
        }
    }
    res.t_final = t;
    return res;
}

} // namespace springnet::spectral
