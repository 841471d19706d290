#include "spinhalf/expectation.hpp"

#include <cmath>
#include <stdexcept>

#include "spinhalf/amplitudes.hpp"

namespace spinhalf {

namespace {
constexpr double kImagResidueTol = 1e-12;
}

double expectation_direct(Projection mi, const Direction& a, const Direction& c) {
    return transition_probability(mi, a, Projection::up, c) -
           transition_probability(mi, a, Projection::down, c);
}

double sandwich_expectation(const SpinState& state, const SpinOperator& op) {
    const Complex value = inner(state.components, op.entries * state.components);
    if (std::abs(value.imag()) > kImagResidueTol) {
        throw std::logic_error("sandwich_expectation: imaginary residue exceeds 1e-12");
    }
    return value.real();
}

double expectation_sandwich(const MeasurementContext& ctx) {
    return sandwich_expectation(spin_state(ctx.projection, ctx.initial, ctx.basis),
                                spin_operator(ctx.final_axis, ctx.basis));
}

std::pair<SpinState, SpinOperator> case_configuration(CaseId id, Projection mi,
                                                      const Direction& a, const Direction& c,
                                                      std::optional<Direction> basis) {
    const auto require_basis = [&]() -> const Direction& {
        if (!basis) throw std::invalid_argument("case_configuration: this case requires a basis");
        return *basis;
    };
    const auto forbid_basis = [&] {
        if (basis) {
            throw std::invalid_argument(
                "case_configuration: this case fixes its own basis; supplying one is ambiguous");
        }
    };

    switch (id) {
        case CaseId::A: {
            const Direction& b = require_basis();
            return {spin_state(mi, a, b), spin_operator(c, b)};
        }
        case CaseId::B:
            forbid_basis();
            return {spin_state(mi, a, a), spin_operator(c, a)};
        case CaseId::C:
            forbid_basis();
            return {spin_state(mi, a, c), spin_operator(c, c)};
        case CaseId::D: {
            const Direction& b = require_basis();
            return {spin_state(mi, a, b), spin_operator(a, b)};
        }
        case CaseId::E:
            forbid_basis();
            return {spin_state(mi, a, a), spin_operator(a, a)};
    }
    throw std::invalid_argument("case_configuration: unknown case");
}

}  // namespace spinhalf
