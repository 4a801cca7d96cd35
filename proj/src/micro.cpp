#include "springnet/micro.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "springnet/errors.hpp"

namespace springnet::micro {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::pair<int, int>> all_pairs_within(const std::vector<Vec2>& pos,
                                                  const PeriodicDomain& dom, double R) {
    std::vector<std::pair<int, int>> out;
    const double r2 = R * R;
    const int n = static_cast<int>(pos.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dom.min_image(pos[i], pos[j]).norm2() <= r2) out.emplace_back(i, j);
    return out;
}

} // namespace

void MicroParams::validate() const {
    if (N < 2) throw std::invalid_argument("MicroParams: N must be >= 2");
    if (!(dt > 0.0)) throw std::invalid_argument("MicroParams: dt must be > 0");
    if (!(D >= 0.0) || !(mu > 0.0) || !(nu_f >= 0.0) || !(nu_d >= 0.0))
        throw std::invalid_argument("MicroParams: rates must be finite and nonnegative, mu > 0");
    if (dt * mu * hooke.kappa > 0.1)
        throw GuardViolation("micro step guard violated: dt*mu*kappa = " +
                             std::to_string(dt * mu * hooke.kappa) + " > 0.1");
    if (dt * nu_d > 0.1)
        throw GuardViolation("micro step guard violated: dt*nu_d = " +
                             std::to_string(dt * nu_d) + " > 0.1");
    if (dt * nu_f / (N - 1) > 0.1)
        throw GuardViolation("micro step guard violated: dt*nu_f/(N-1) = " +
                             std::to_string(dt * nu_f / (N - 1)) + " > 0.1");
}

ParticleNetworkState init(const MicroParams& p, std::uint64_t seed) {
    p.validate();
    ParticleNetworkState s;
    s.rng.seed(seed);
    s.positions.resize(p.N);
    std::uniform_real_distribution<double> ux(-p.domain.L1(), p.domain.L1());
    std::uniform_real_distribution<double> uy(-p.domain.L2(), p.domain.L2());
    for (auto& q : s.positions) q = {ux(s.rng), uy(s.rng)};
    return s;
}

ParticleNetworkState init(const MicroParams& p, std::uint64_t seed,
                          const std::vector<Vec2>& positions) {
    p.validate();
    if (static_cast<int>(positions.size()) != p.N)
        throw std::invalid_argument("init: positions.size() != N");
    ParticleNetworkState s;
    s.rng.seed(seed);
    s.positions.reserve(p.N);
    for (const auto& q : positions) {
        if (!std::isfinite(q.x) || !std::isfinite(q.y))
            throw std::invalid_argument("init: non-finite position");
        s.positions.push_back(p.domain.wrap(q));
    }
    return s;
}

std::vector<std::pair<int, int>> pairs_within(const std::vector<Vec2>& positions,
                                              const PeriodicDomain& dom, double R) {
    if (!(R > 0.0)) throw std::invalid_argument("pairs_within: R must be > 0");
    const int ncx = static_cast<int>(std::floor(2.0 * dom.L1() / R));
    const int ncy = static_cast<int>(std::floor(2.0 * dom.L2() / R));
    // The 3x3 stencil double-counts on wrapped grids narrower than 4 cells.
    if (ncx < 4 || ncy < 4) return all_pairs_within(positions, dom, R);

    const double wx = 2.0 * dom.L1() / ncx; // >= R
    const double wy = 2.0 * dom.L2() / ncy;
    const int n = static_cast<int>(positions.size());

    std::vector<std::vector<int>> cells(static_cast<std::size_t>(ncx) * ncy);
    auto cell_of = [&](Vec2 q) {
        int cx = static_cast<int>((q.x + dom.L1()) / wx);
        int cy = static_cast<int>((q.y + dom.L2()) / wy);
        cx = std::clamp(cx, 0, ncx - 1);
        cy = std::clamp(cy, 0, ncy - 1);
        return cy * ncx + cx;
    };
    for (int i = 0; i < n; ++i) cells[cell_of(positions[i])].push_back(i);

    std::vector<std::pair<int, int>> out;
    const double r2 = R * R;
    for (int cy = 0; cy < ncy; ++cy) {
        for (int cx = 0; cx < ncx; ++cx) {
            const auto& home = cells[static_cast<std::size_t>(cy) * ncx + cx];
            if (home.empty()) continue;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const int ox = (cx + dx + ncx) % ncx;
                    const int oy = (cy + dy + ncy) % ncy;
                    const auto& other = cells[static_cast<std::size_t>(oy) * ncx + ox];
                    for (int i : home) {
                        for (int j : other) {
                            if (j <= i) continue;
                            if (dom.min_image(positions[i], positions[j]).norm2() <= r2)
                                out.emplace_back(i, j);
                        }
                    }
                }
            }
        }
    }
    // A pair can be seen from both cells' stencils; canonicalise.
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void step(ParticleNetworkState& s, const MicroParams& p, StepEvents* events) {
    const int n = static_cast<int>(s.positions.size());

    // spring drift over current links
    std::vector<Vec2> force(n, Vec2{0.0, 0.0});
    for (const auto& [i, j] : s.links) {
        const Vec2 d = p.domain.min_image(s.positions[i], s.positions[j]);
        const double r = d.norm();
        if (r <= 0.0) continue; // coincident pair carries no force
        const double fmag = p.hooke.kappa * (r - p.hooke.l0) / r;
        force[i] += d * (-fmag);
        force[j] += d * (fmag);
    }

    std::normal_distribution<double> gauss(0.0, 1.0);
    const double noise = std::sqrt(2.0 * p.D * p.dt);
    for (int i = 0; i < n; ++i) {
        Vec2 q = s.positions[i];
        q += force[i] * (p.mu * p.dt);
        q += Vec2{gauss(s.rng), gauss(s.rng)} * noise;
        if (!std::isfinite(q.x) || !std::isfinite(q.y))
            throw NumericalError("micro step: particle " + std::to_string(i) +
                                 " position became non-finite at t = " +
                                 std::to_string(s.time));
        s.positions[i] = p.domain.wrap(q);
    }

    s.time += p.dt;

    // link destruction, then creation over currently unlinked close pairs
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    if (p.nu_d > 0.0 && !s.links.empty()) {
        const double p_d = 1.0 - std::exp(-p.nu_d * p.dt);
        std::vector<std::pair<int, int>> doomed;
        for (const auto& link : s.links)
            if (unif(s.rng) < p_d) doomed.push_back(link);
        for (const auto& link : doomed) {
            s.links.erase(link);
            if (events) events->events.push_back({s.time, false, link.first, link.second});
        }
    }
    if (p.nu_f > 0.0) {
        const double p_c = 1.0 - std::exp(-p.nu_f / (p.N - 1) * p.dt);
        for (const auto& pr : pairs_within(s.positions, p.domain, p.hooke.R)) {
            if (s.links.count(pr)) continue;
            if (unif(s.rng) < p_c) {
                s.links.insert(pr);
                if (events) events->events.push_back({s.time, true, pr.first, pr.second});
            }
        }
    }
}

double link_count_equilibrium_prediction(const MicroParams& p, double f_star) {
    if (p.nu_f == 0.0) return 0.0;
    if (!(p.nu_d > 0.0))
        throw std::invalid_argument("link_count_equilibrium_prediction: nu_d must be > 0");
    return p.nu_f / (2.0 * p.nu_d) * p.N * kPi * p.hooke.R * p.hooke.R * f_star;
}

std::vector<double> empirical_density(const ParticleNetworkState& s,
                                      const PeriodicDomain& dom,
                                      int n_bins1, int n_bins2) {
    if (n_bins1 < 2 || n_bins2 < 2)
        throw std::invalid_argument("empirical_density: need at least 2 bins per side");
    std::vector<double> grid(static_cast<std::size_t>(n_bins1) * n_bins2, 0.0);
    const double wx = 2.0 * dom.L1() / n_bins1;
    const double wy = 2.0 * dom.L2() / n_bins2;
    for (const auto& q : s.positions) {
        int bx = std::clamp(static_cast<int>((q.x + dom.L1()) / wx), 0, n_bins1 - 1);
        int by = std::clamp(static_cast<int>((q.y + dom.L2()) / wy), 0, n_bins2 - 1);
        grid[static_cast<std::size_t>(by) * n_bins1 + bx] += 1.0;
    }
    const double norm = 1.0 / (s.positions.size() * wx * wy);
    for (auto& v : grid) v *= norm;
    return grid;
}

std::complex<double> mode_amplitude(const ParticleNetworkState& s,
                                    const PeriodicDomain& dom, int k1, int k2) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& q : s.positions) {
        const double phase = kPi * (k1 * q.x / dom.L1() + k2 * q.y / dom.L2());
        acc += std::complex<double>(std::cos(phase), -std::sin(phase));
    }
    return acc / static_cast<double>(s.positions.size());
}

double spring_energy(const ParticleNetworkState& s, const MicroParams& p) {
    double w = 0.0;
    for (const auto& [i, j] : s.links) {
        const double r = p.domain.distance(s.positions[i], s.positions[j]);
        const double stretch = r - p.hooke.l0;
        w += 0.5 * p.hooke.kappa * stretch * stretch;
    }
    return w;
}

} // namespace springnet::micro
