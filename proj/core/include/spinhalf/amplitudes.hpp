#pragma once

#include "spinhalf/geometry.hpp"
#include "spinhalf/matrix2.hpp"
#include "spinhalf/projection.hpp"

namespace spinhalf {

/// Dimensionless probability amplitude; its squared modulus is a
/// probability. Every amplitude produced here has modulus <= 1 + 1e-12.
using Amplitude = Complex;

/// Two-direction probability amplitude for a spin-1/2 projection
/// measurement: the spin is initially `mi` along axis `a` and is found to be
/// `mf` along axis `c`.
///
/// With (theta, phi) the angles of `a` and (theta', phi') those of `c`, the
/// closed forms are
///
///   (+,+):  cos(theta/2) cos(theta'/2) + e^{i(phi-phi')} sin(theta/2) sin(theta'/2)
///   (+,-):  cos(theta/2) sin(theta'/2) - e^{i(phi-phi')} sin(theta/2) cos(theta'/2)
///   (-,+):  sin(theta/2) cos(theta'/2) - e^{i(phi-phi')} cos(theta/2) sin(theta'/2)
///   (-,-):  sin(theta/2) sin(theta'/2) + e^{i(phi-phi')} cos(theta/2) cos(theta'/2)
///
/// This is the single phase-convention point of the library: states,
/// operators, eigenvectors and expectation values are all assembled from
/// this kernel, so an alternative phase convention would be introduced here
/// and nowhere else.
///
/// Repeating a measurement along the same axis must reproduce its outcome,
/// so `a == c` (same canonical angles) short-circuits to exactly 1 (mi == mf)
/// or exactly 0 (mi != mf), which the closed forms give in exact arithmetic.
Amplitude amplitude(Projection mi, const Direction& a, Projection mf, const Direction& c);

/// Born probability |amplitude(mi, a, mf, c)|^2, in [0, 1].
double transition_probability(Projection mi, const Direction& a, Projection mf,
                              const Direction& c);

/// Composition of the a -> c amplitude through an arbitrary intermediate
/// axis `b`: sum over k in {up, down} of
/// amplitude(mi, a, k, b) * amplitude(k, b, mf, c).
///
/// Equals amplitude(mi, a, mf, c) to 1e-12 for every `b`; for b == a or
/// b == c the collapse is exact.
Amplitude expand(Projection mi, const Direction& a, Projection mf, const Direction& c,
                 const Direction& b);

}  // namespace spinhalf
