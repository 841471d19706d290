#pragma once

#include <array>

namespace spinhalf {

/// A measurement axis on the unit sphere, named by polar angles (theta, phi)
/// in radians.
///
/// Construction canonicalizes the angles into theta in [0, pi] and
/// phi in [0, 2*pi) without moving the point on the sphere. phi is kept
/// verbatim at the poles: (0, 0) and (0, pi) are distinct stored values even
/// though they name the same point. The reductions to the one-direction
/// formalism depend on the (0, pi) labeling, so collapsing it would be wrong.
///
/// Immutable after construction; freely shareable across threads.
class Direction {
public:
    /// North pole (0, 0).
    Direction() = default;

    /// Canonicalizes (theta_raw, phi_raw). Throws std::domain_error on
    /// non-finite input.
    Direction(double theta_raw, double phi_raw);

    double theta() const { return theta_; }
    double phi() const { return phi_; }

    /// Exact equality of the stored (canonical) angles.
    friend bool operator==(const Direction&, const Direction&) = default;

private:
    double theta_ = 0.0;
    double phi_ = 0.0;
};

/// Factory form of the canonicalizing constructor.
Direction make_direction(double theta_raw, double phi_raw);

/// (sin theta cos phi, sin theta sin phi, cos theta); unit norm to 1e-15.
std::array<double, 3> to_cartesian(const Direction& d);

/// Angle between two axes, in [0, pi]:
/// arccos(cos theta cos theta' + sin theta sin theta' cos(phi - phi')).
/// Evaluated through the cartesian half-angle form, which is exact at the
/// coincident and antipodal ends where the arccos form loses half the
/// mantissa; identical directions give exactly 0.
double angle_between(const Direction& a, const Direction& c);

/// The diametrically opposite direction, (pi - theta, phi + pi).
Direction antipode(const Direction& d);

}  // namespace spinhalf
