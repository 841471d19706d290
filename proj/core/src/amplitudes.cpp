#include "spinhalf/amplitudes.hpp"

#include <cmath>

namespace spinhalf {

Amplitude amplitude(Projection mi, const Direction& a, Projection mf, const Direction& c) {
    if (a == c) {
        // Reproducibility: a repeated measurement gives the same outcome
        // with certainty. The closed forms reduce to these values exactly in
        // exact arithmetic; returning them directly keeps the identity exact
        // in floating point as well.
        return mi == mf ? Amplitude(1.0, 0.0) : Amplitude(0.0, 0.0);
    }

    const double cos_a = std::cos(0.5 * a.theta());
    const double sin_a = std::sin(0.5 * a.theta());
    const double cos_c = std::cos(0.5 * c.theta());
    const double sin_c = std::sin(0.5 * c.theta());
    const Complex phase = std::polar(1.0, a.phi() - c.phi());

    if (mi == Projection::up) {
        if (mf == Projection::up) return cos_a * cos_c + phase * (sin_a * sin_c);
        return cos_a * sin_c - phase * (sin_a * cos_c);
    }
    if (mf == Projection::up) return sin_a * cos_c - phase * (cos_a * sin_c);
    return sin_a * sin_c + phase * (cos_a * cos_c);
}

double transition_probability(Projection mi, const Direction& a, Projection mf,
                              const Direction& c) {
    return std::norm(amplitude(mi, a, mf, c));
}

Amplitude expand(Projection mi, const Direction& a, Projection mf, const Direction& c,
                 const Direction& b) {
    return amplitude(mi, a, Projection::up, b) * amplitude(Projection::up, b, mf, c) +
           amplitude(mi, a, Projection::down, b) * amplitude(Projection::down, b, mf, c);
}

}  // namespace spinhalf
