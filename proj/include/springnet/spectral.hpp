#ifndef SPRINGNET_SPECTRAL_HPP
#define SPRINGNET_SPECTRAL_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "springnet/domain.hpp"
#include "springnet/potential.hpp"

// forward declarations from fftw3.h; the header is only needed in the .cpp
struct fftw_plan_s;

namespace springnet::spectral {

struct MacroParams {
    double gamma = 1.0; ///< nu_f / nu_d
    HookeParams hooke;
    PeriodicDomain domain{0.5, 0.5};
    int n1 = 128;
    int n2 = 128;
    double dt = 1e-3;
    bool dealias = true;

    /// n1, n2 powers of two >= 16; R < min(L1, L2); dt > 0; gamma >= 0.
    void validate() const;
};

/// Density on the periodic rectangle held as Fourier coefficients.
/// Storage is the half-spectrum of a real field (k2 >= 0), so Hermitian
/// symmetry holds structurally. Coefficients are normalised so that
/// c[0] is the mean of the field.
class SpectralField {
public:
    SpectralField(int n1, int n2, const PeriodicDomain& dom);

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    const PeriodicDomain& domain() const { return dom_; }

    std::vector<std::complex<double>>& data() { return c_; }
    const std::vector<std::complex<double>>& data() const { return c_; }

    /// Coefficient against e_{k1,k2} = exp[i pi (k1 x1/L1 + k2 x2/L2)]
    /// (includes the phase from the grid starting at (-L1,-L2)).
    /// Valid for |k1| <= n1/2, |k2| <= n2/2.
    std::complex<double> mode(int k1, int k2) const;

    /// f-hat_{0,0}; equals 1/(4 L1 L2) for a mass-one density.
    double mass_coeff() const { return c_[0].real(); }

private:
    friend class MacroSolver;
    int n1_;
    int n2_;
    PeriodicDomain dom_;
    std::vector<std::complex<double>> c_; // n1 x (n2/2+1), row-major
};

enum class RunStatus { completed, positivity_lost, threshold_reached };

struct SeriesRow {
    double t, mass, free_energy, a10, a01, a11, a20;
};

struct Snapshot {
    double t;
    std::vector<double> f; // n1 x n2 row-major
};

struct RunOptions {
    double t_end = 1.0;
    double dt = 0.0;          ///< 0 = take dt from MacroParams
    bool adaptive = false;    ///< shrink dt to respect the transport CFL guard
    int series_every = 1;
    int snapshot_every = 0;   ///< 0 = no snapshots
    bool track_free_energy = true;
    double stop_threshold = 0.0; ///< stop once max(|f-hat_{1,0}|,|f-hat_{0,1}|) >= this (0 = off)
};

struct RunResult {
    RunStatus status = RunStatus::completed;
    double t_final = 0.0;
    double min_f = 0.0;                 ///< minimum of the final recorded state
    double max_free_energy_rise = 0.0;  ///< largest per-step increase seen
    std::vector<SeriesRow> series;
    std::vector<Snapshot> snapshots;
};

/// Pseudospectral IMEX solver for
///   df/dt = Laplace f + gamma div(f grad(V * f))
/// on the periodic rectangle: diffusion handled by the implicit
/// 1/(1 + dt pi^2 (k1^2/L1^2 + k2^2/L2^2)) multiplier, transport term
/// evaluated on the collocation grid (2/3-rule dealiasing optional).
class MacroSolver {
public:
    explicit MacroSolver(const MacroParams& p);
    ~MacroSolver();
    MacroSolver(const MacroSolver&) = delete;
    MacroSolver& operator=(const MacroSolver&) = delete;

    const MacroParams& params() const { return p_; }

    /// Homogeneous probability density f* = 1/(4 L1 L2).
    SpectralField constant_density() const;

    SpectralField from_physical(const std::vector<double>& f);
    std::vector<double> to_physical(const SpectralField& f);

    /// f += eps cos(pi (k1 x1/L1 + k2 x2/L2)); mode (k1,k2) and its
    /// conjugate each gain eps/2.
    void add_cosine(SpectralField& f, int k1, int k2, double eps) const;

    /// Mean-zero white noise of pointwise standard deviation eps.
    void add_noise(SpectralField& f, double eps, std::uint64_t seed);

    /// Coefficients of V * f (the convolution picks up 4 L1 L2 V-hat_k).
    SpectralField convolution_coeffs(const SpectralField& f) const;

    /// Right-hand side of the evolution equation in spectral form.
    SpectralField rhs(const SpectralField& f);

    /// One IMEX step. Throws GuardViolation when
    /// dt gamma max|grad(V*f)| / h > 0.5 and NumericalError on non-finite
    /// coefficients.
    void step_semi_implicit(SpectralField& f);
    void step_semi_implicit(SpectralField& f, double dt);

    /// F(f) = integral of f log f + (gamma/2) f (V*f).
    /// Throws PositivityError when f <= 0 anywhere on the grid.
    double free_energy(const SpectralField& f);

    double min_value(const SpectralField& f);

    /// Largest dt the transport guard admits for this state.
    double cfl_max_dt(const SpectralField& f);

    /// Seeds f* + eps cos-mode, evolves for t_window with the params dt,
    /// returns the least-squares slope of log|f-hat_{k1,k2}(t)|.
    /// Requires eps <= 1e-4 f*; throws when the amplitude leaves the
    /// linear regime (> 1e-2 f*) before the window ends.
    double measure_growth_rate(int k1, int k2, double eps, double t_window);

    RunResult run(SpectralField& f, const RunOptions& opt);

    double vhat(int k1, int k2) const; ///< potential coefficient used internally

private:
    struct Nonlinear {
        std::vector<std::complex<double>> nhat;
        double grad_max = 0.0;
        double f_min = 0.0;
    };
    Nonlinear nonlinear_term(const SpectralField& f);
    void check_shape(const SpectralField& f) const;

    MacroParams p_;
    int nc_;                      // n2/2 + 1
    std::vector<double> vhat_;    // potential coefficients, half-spectrum layout
    std::vector<double> lap_;     // -pi^2 (k1^2/L1^2 + k2^2/L2^2)
    std::vector<double> dk1_;     // pi k1 / L1 (0 at the Nyquist row)
    std::vector<double> dk2_;     // pi k2 / L2
    std::vector<bool> keep_;      // 2/3-rule mask
    std::vector<std::complex<double>> spec_;
    std::vector<double> phys_, fphys_, u1_, u2_;
    fftw_plan_s* plan_r2c_ = nullptr;
    fftw_plan_s* plan_c2r_ = nullptr;
    double last_grad_max_ = 0.0;
};

} // namespace springnet::spectral

#endif
