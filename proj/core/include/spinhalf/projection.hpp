#pragma once

namespace spinhalf {

/// Binary spin-projection label. "up" is +1/2, "down" is -1/2; the matching
/// eigenvalues are +1 and -1 in units where spin is measured in halves of
/// the quantum of angular momentum.
enum class Projection : int { up = +1, down = -1 };

inline constexpr int sign(Projection p) { return static_cast<int>(p); }

inline constexpr double eigenvalue(Projection p) { return static_cast<double>(sign(p)); }

inline constexpr Projection flipped(Projection p) {
    return p == Projection::up ? Projection::down : Projection::up;
}

inline constexpr char symbol(Projection p) { return p == Projection::up ? '+' : '-'; }

}  // namespace spinhalf
