#include "spinhalf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinhalf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // fmod rounding can land exactly on 2*pi
    return r;
}

}  // namespace

Direction::Direction(double theta_raw, double phi_raw) {
    if (!std::isfinite(theta_raw) || !std::isfinite(phi_raw)) {
        throw std::domain_error("Direction: angles must be finite");
    }
    double t = wrap_two_pi(theta_raw);
    double p = phi_raw;
    if (t > kPi) {
        // Reflect through the polar axis: (2*pi - theta, phi + pi) is the
        // same point with theta back in [0, pi].
        t = kTwoPi - t;
        p += kPi;
    }
    theta_ = t;
    phi_ = wrap_two_pi(p);
}

Direction make_direction(double theta_raw, double phi_raw) {
    return Direction(theta_raw, phi_raw);
}

std::array<double, 3> to_cartesian(const Direction& d) {
    const double st = std::sin(d.theta());
    return {st * std::cos(d.phi()), st * std::sin(d.phi()), std::cos(d.theta())};
}

double angle_between(const Direction& a, const Direction& c) {
    // arccos of the composed cosine loses ~8 digits near 0 and pi, which
    // breaks the coincident/antipodal identities at the 1e-12 scale. The
    // half-angle form 2*atan2(|u - v|, |u + v|) is the same function and is
    // accurate at full precision everywhere.
    const auto u = to_cartesian(a);
    const auto v = to_cartesian(c);
    double diff = 0.0;
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        diff += (u[i] - v[i]) * (u[i] - v[i]);
        sum += (u[i] + v[i]) * (u[i] + v[i]);
    }
    return 2.0 * std::atan2(std::sqrt(diff), std::sqrt(sum));
}

Direction antipode(const Direction& d) {
    return Direction(kPi - d.theta(), d.phi() + kPi);
}

}  // namespace spinhalf
