#ifndef SPRINGNET_MICRO_HPP
#define SPRINGNET_MICRO_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "springnet/domain.hpp"
#include "springnet/potential.hpp"

namespace springnet::micro {

struct MicroParams {
    int N = 2;
    HookeParams hooke;
    double D = 1.0;     ///< diffusion coefficient
    double mu = 1.0;    ///< mobility
    double nu_f = 0.0;  ///< macroscopic linking rate; per-pair rate is nu_f/(N-1)
    double nu_d = 0.0;  ///< unlinking rate
    double dt = 1e-3;
    PeriodicDomain domain{1.0, 1.0};

    /// Throws GuardViolation naming the violated inequality:
    /// dt mu kappa <= 0.1, dt nu_d <= 0.1, dt nu_f/(N-1) <= 0.1.
    void validate() const;
};

using LinkSet = std::set<std::pair<int, int>>; // pairs stored with i < j

struct ParticleNetworkState {
    std::vector<Vec2> positions;
    LinkSet links;
    double time = 0.0;
    std::mt19937_64 rng;
};

struct LinkEvent {
    double time;
    bool created; ///< false = destroyed
    int i, j;
};

struct StepEvents {
    std::vector<LinkEvent> events;
};

/// Particles i.i.d. uniform on the domain, no links. Deterministic per seed.
ParticleNetworkState init(const MicroParams& p, std::uint64_t seed);

/// Caller-provided positions (wrapped into the domain), no links.
ParticleNetworkState init(const MicroParams& p, std::uint64_t seed,
                          const std::vector<Vec2>& positions);

/// One Euler-Maruyama step: spring drift over current links (minimal
/// image), Gaussian noise, wrap, then link death (prob 1 - exp(-nu_d dt))
/// and birth over unlinked pairs within R (prob 1 - exp(-nu_f/(N-1) dt)).
/// Throws NumericalError when a position turns non-finite.
void step(ParticleNetworkState& s, const MicroParams& p, StepEvents* events = nullptr);

/// Unordered pairs (i < j) at distance <= R, sorted lexicographically.
/// Cell lists with an all-pairs fallback on very small grids; the result
/// is identical either way.
std::vector<std::pair<int, int>> pairs_within(const std::vector<Vec2>& positions,
                                              const PeriodicDomain& dom, double R);

/// Detailed-balance prediction for the stationary mean number of links in
/// the spatially homogeneous regime: (nu_f / (2 nu_d)) N pi R^2 f*.
double link_count_equilibrium_prediction(const MicroParams& p, double f_star);

/// Histogram of positions normalised to integrate to 1 over the domain;
/// bins_x * bins_y values in row-major order (x fastest dimension last).
std::vector<double> empirical_density(const ParticleNetworkState& s,
                                      const PeriodicDomain& dom,
                                      int n_bins1, int n_bins2);

/// (1/N) sum_i conj(e_{k1,k2}(X_i)) -- empirical Fourier mode of f^N.
std::complex<double> mode_amplitude(const ParticleNetworkState& s,
                                    const PeriodicDomain& dom, int k1, int k2);

/// Total spring energy over the active links (minimal-image separations).
double spring_energy(const ParticleNetworkState& s, const MicroParams& p);

} // namespace springnet::micro

#endif
