#pragma once

#include <utility>

#include "spinhalf/geometry.hpp"
#include "spinhalf/matrix2.hpp"
#include "spinhalf/projection.hpp"

namespace spinhalf::oracle {

/// Ground truth for the two-direction formalism, built from the textbook
/// one-direction Pauli machinery.
///
/// Everything in this namespace is computed directly from the explicit
/// half-angle eigenvector forms and the sigma matrices. It deliberately does
/// not call the amplitude/state/operator constructors it is used to check;
/// the only shared code is the Direction type and the generic 2x2
/// arithmetic. An oracle that reused the formulas under test would prove
/// nothing.

/// The three constant Pauli matrices.
struct PauliTriple {
    Mat2c x, y, z;
};

PauliTriple pauli_matrices();

/// Spin component along the axis n with angles (theta, phi):
///
///   ( cos theta              sin theta e^{-i phi} )
///   ( sin theta e^{i phi}   -cos theta            )
Mat2c sigma_n(const Direction& n);

/// Normalized eigenvectors of sigma_n(n) for eigenvalues +1 and -1:
///   xi+ = (cos(theta/2), sin(theta/2) e^{i phi})
///   xi- = (sin(theta/2), -cos(theta/2) e^{i phi})
std::pair<Vec2c, Vec2c> eigenvectors(const Direction& n);

/// Transition amplitude as an eigenvector overlap:
/// <xi_c^{mf}, xi_a^{mi}> with the Hermitian inner product.
Complex amplitude(Projection mi, const Direction& a, Projection mf, const Direction& c);

/// sigma.c expressed in the eigenbasis of b:
/// entries(m, n) = <xi_b^m, sigma_n(c) xi_b^n>.
Mat2c operator_in_basis(const Direction& c, const Direction& b);

/// <xi_a^{mi}, sigma_n(c) xi_a^{mi}>; analytically sign(mi) * (a . c).
double expectation(Projection mi, const Direction& a, const Direction& c);

}  // namespace spinhalf::oracle
