#include "springnet/domain.hpp"

#include <stdexcept>

namespace springnet {

PeriodicDomain::PeriodicDomain(double L1, double L2) : L1_(L1), L2_(L2) {
    if (!(L1 > 0.0) || !(L2 > 0.0))
        throw std::invalid_argument("PeriodicDomain: half-lengths must be positive");
}

double PeriodicDomain::wrap_coord(double v, double L) {
    double w = v - 2.0 * L * std::floor((v + L) / (2.0 * L));
    // floor can land exactly on the excluded upper edge through rounding
    if (w >= L) w -= 2.0 * L;
    if (w < -L) w += 2.0 * L;
    return w;
}

} // namespace springnet
