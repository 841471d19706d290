#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinhalf::cli {

/// Worst-case residual of one invariant over a random sweep, with the
/// inputs that produced it (canonical radians).
struct InvariantReport {
    std::string name;
    double worst = 0.0;
    std::string worst_tuple;
};

/// Sweeps the library's algebraic invariants over `trials` seeded-random
/// inputs each: amplitude normalization, the intermediate-axis composition
/// law, the eigen-equation, basis invariance of the sandwich, equivalence
/// with the textbook route, and agreement of the five case configurations.
std::vector<InvariantReport> run_verification(int trials, std::uint64_t seed);

}  // namespace spinhalf::cli
