#pragma once

#include <optional>
#include <utility>

#include "spinhalf/geometry.hpp"
#include "spinhalf/projection.hpp"
#include "spinhalf/states_operators.hpp"

namespace spinhalf {

/// Full input of an expectation-value computation: the spin starts with
/// projection `projection` along `initial`, the projection along `final_axis`
/// is measured, and `basis` is the (arbitrary) axis whose eigenbasis carries
/// the matrix representation. The result never depends on `basis`.
struct MeasurementContext {
    Direction initial;     // a
    Direction final_axis;  // c
    Direction basis;       // b
    Projection projection; // initial projection along a
};

/// The five reference-vector configurations for an expectation value.
///   A: basis and final axis both free (the general case)
///   B: basis = initial axis
///   C: basis = final axis
///   D: final axis = initial axis, basis free
///   E: basis = final axis = initial axis
enum class CaseId { A, B, C, D, E };

/// Probability-weighted mean of the +1/-1 outcomes:
/// +|amplitude(mi,a,+,c)|^2 - |amplitude(mi,a,-,c)|^2. Lies in [-1, 1];
/// analytically equals sign(mi) * cos(angle_between(a, c)).
double expectation_direct(Projection mi, const Direction& a, const Direction& c);

/// state^dagger . operator . state for an explicit (state, operator) pair.
/// The value is real for Hermitian operators; an imaginary residue above
/// 1e-12 means the pair was not built by the constructors in this library
/// and throws std::logic_error.
double sandwich_expectation(const SpinState& state, const SpinOperator& op);

/// The same expectation routed through the basis `ctx.basis`:
/// spin_state(mi, a, b)^dagger . spin_operator(c, b) . spin_state(mi, a, b).
/// Agrees with expectation_direct to 1e-12 for every basis.
double expectation_sandwich(const MeasurementContext& ctx);

/// The (state, operator) pair for one of the five reference-vector cases.
///
/// Cases A and D require `basis`; B, C and E derive their basis from a or c
/// and reject a supplied one as ambiguous (std::invalid_argument either
/// way). Cases D and E measure along the initial axis itself, so `c` is
/// ignored there; the effective axes can be read back from the labels of the
/// returned pair.
std::pair<SpinState, SpinOperator> case_configuration(CaseId id, Projection mi,
                                                      const Direction& a, const Direction& c,
                                                      std::optional<Direction> basis);

}  // namespace spinhalf
