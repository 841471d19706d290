#pragma once

#include <utility>

#include "spinhalf/amplitudes.hpp"
#include "spinhalf/geometry.hpp"
#include "spinhalf/matrix2.hpp"
#include "spinhalf/projection.hpp"

namespace spinhalf {

/// A spin state expressed in the eigenbasis of an arbitrary axis `basis`.
/// The components are the two amplitudes from (projection, initial) toward
/// the basis axis, so the vector has unit norm by construction.
struct SpinState {
    Vec2c components;       // (amplitude to basis-up, amplitude to basis-down)
    Direction initial;      // axis the projection refers to
    Projection projection;  // projection along `initial`
    Direction basis;        // axis whose eigenbasis the components live in

    friend bool operator==(const SpinState&, const SpinState&) = default;
};

/// The spin-projection operator along `measured`, represented in the
/// eigenbasis of `basis`. Hermitian, traceless, involutory, determinant -1.
struct SpinOperator {
    Mat2c entries;
    Direction measured;  // axis whose projection the operator measures
    Direction basis;     // axis whose eigenbasis the entries live in

    friend bool operator==(const SpinOperator&, const SpinOperator&) = default;
};

/// State of a spin prepared with projection `mi` along `a`, written in the
/// eigenbasis of `b`:
///
///   components = (amplitude(mi, a, +, b), amplitude(mi, a, -, b)).
///
/// The state depends only on the preparation (mi, a) and the basis b, not on
/// any later measurement axis.
SpinState spin_state(Projection mi, const Direction& a, const Direction& b);

/// Spin-projection operator along `c` in the eigenbasis of `b`, assembled
/// from the b -> c amplitudes f(m; n) = amplitude(m, b, n, c):
///
///   entries(0,0) = |f(+;+)|^2 - |f(+;-)|^2
///   entries(0,1) = conj(f(+;+)) f(-;+) - conj(f(+;-)) f(-;-)
///   entries(1,0) = conj(f(-;+)) f(+;+) - conj(f(-;-)) f(+;-)
///   entries(1,1) = |f(-;+)|^2 - |f(-;-)|^2
///
/// This is the canonical constructor; it agrees entrywise with the matrix
/// elements <xi_b^m| sigma.c |xi_b^n> of the textbook formalism.
SpinOperator spin_operator(const Direction& c, const Direction& b);

/// Closed-form trigonometric variant of the operator entries, with
/// (theta', phi') the angles of `c` and (theta'', phi'') the angles of `b`:
///
///   (0,0):  cos theta'' cos theta' + sin theta'' sin theta' cos(phi'' - phi')
///   (0,1):  sin theta'' cos theta' - sin theta'' cos theta'
///             - sin theta' [cos theta'' cos(phi'' - phi') + i sin(phi'' - phi')]
///   (1,0):  same with the conjugate bracket
///   (1,1):  negative of the (0,0) form
///
/// Transcribed verbatim, including the first two off-diagonal terms, which
/// cancel identically. The matrix agrees with spin_operator only at
/// b = (0, pi); elsewhere the off-diagonals differ, and this routine exists
/// so the reconciliation report can quantify that difference. Use
/// spin_operator for anything else.
SpinOperator spin_operator_trig(const Direction& c, const Direction& b);

/// Eigenvectors of spin_operator(c, b) for eigenvalues +1 and -1. These are
/// exactly spin_state(up, c, b) and spin_state(down, c, b): the eigenvectors
/// carry the same two reference directions as the operator.
std::pair<SpinState, SpinState> eigenvectors(const Direction& c, const Direction& b);

/// True iff some unit-modulus scalar lambda makes ||u - lambda*v|| < tol.
/// For unit vectors this is equivalent to |<u, v>| > 1 - tol^2 / 2; the
/// residual is evaluated directly at the optimal phase because that
/// threshold is not representable for tight tolerances. Global phase
/// carries no physics, so reduction checks on states compare through this
/// rather than componentwise.
bool states_equal_up_to_phase(const SpinState& u, const SpinState& v, double tol);

}  // namespace spinhalf
