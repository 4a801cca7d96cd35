#ifndef SPRINGNET_DOMAIN_HPP
#define SPRINGNET_DOMAIN_HPP

#include <cmath>

namespace springnet {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
};

/// Rectangle [-L1,L1] x [-L2,L2] with opposite edges identified.
class PeriodicDomain {
public:
    PeriodicDomain(double L1, double L2);

    double L1() const { return L1_; }
    double L2() const { return L2_; }
    double area() const { return 4.0 * L1_ * L2_; }
    double min_side() const { return L1_ < L2_ ? L1_ : L2_; }

    /// Wraps a coordinate into [-L, L).
    static double wrap_coord(double v, double L);
    Vec2 wrap(Vec2 p) const { return {wrap_coord(p.x, L1_), wrap_coord(p.y, L2_)}; }

    /// Shortest periodic representative of a - b; components in [-L, L).
    Vec2 min_image(Vec2 a, Vec2 b) const {
        return {wrap_coord(a.x - b.x, L1_), wrap_coord(a.y - b.y, L2_)};
    }
    double distance(Vec2 a, Vec2 b) const { return min_image(a, b).norm(); }

private:
    double L1_;
    double L2_;
};

} // namespace springnet

#endif
