#pragma once

#include <cstdint>
#include <vector>

#include "spinhalf/geometry.hpp"
#include "spinhalf/projection.hpp"

namespace spinhalf {

/// Sequential projective measurements: a spin prepared with
/// `initial_projection` along `initial_direction` is measured along each
/// stage direction in order. After every stage the spin is the stage's
/// (direction, sampled projection) pair; that is all the next stage sees.
struct MeasurementChain {
    Direction initial_direction;
    Projection initial_projection;
    std::vector<Direction> stages;  // must be non-empty
};

struct StageCounts {
    std::uint64_t n_up = 0;
    std::uint64_t n_down = 0;

    friend bool operator==(const StageCounts&, const StageCounts&) = default;
};

/// One full outcome sequence and its exact Born probability.
struct PathProbability {
    std::vector<Projection> outcomes;  // one per stage
    double probability = 0.0;
};

/// Aggregated sampling results. `path_counts` is indexed by the path
/// bitmask (bit s set = down at stage s, matching enumerate_paths order) and
/// is filled only when the chain is short enough to enumerate (<= 20
/// stages). estimate = (n_up - n_down) / shots at the last stage;
/// standard_error = sqrt((1 - estimate^2) / shots).
struct ChainResult {
    std::uint64_t shots = 0;
    std::vector<StageCounts> stage_counts;     // per stage
    std::vector<std::uint64_t> path_counts;    // per outcome sequence, may be empty
    double estimate = 0.0;
    double standard_error = 0.0;

    friend bool operator==(const ChainResult&, const ChainResult&) = default;
};

/// Longest chain enumerate_paths will expand (2^k outcome sequences).
inline constexpr std::size_t kMaxEnumeratedStages = 20;

/// Name of the sampling generator, for output metadata.
inline constexpr const char* kRngAlgorithm = "splitmix64";

/// splitmix64: a 64-bit golden-gamma counter stepped through an avalanche
/// finalizer. Tiny state, splittable, and the output for a given (seed,
/// counter) pair is a pure function of both, which is what makes per-shot
/// streams order-independent.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// The stream for shot `shot` under `seed`: every shot gets its own
/// generator, so results do not depend on the order shots are executed in.
SplitMix64 shot_stream(std::uint64_t seed, std::uint64_t shot);

/// Samples `shots` runs of the chain. At each stage the outcome is drawn
/// from the Born probability of the transition from the current
/// (direction, projection), and the current pair collapses to the stage
/// direction with the sampled projection. Deterministic for a fixed
/// (chain, shots, seed).
///
/// Throws std::invalid_argument for shots == 0 or an empty stage list.
ChainResult run_chain(const MeasurementChain& chain, std::uint64_t shots, std::uint64_t seed);

/// Exact probability of every outcome sequence (a product of stage
/// transition probabilities), in path-bitmask order: bit s of the index is 0
/// for up and 1 for down at stage s. The probabilities sum to 1 to 1e-12.
///
/// Throws std::invalid_argument for an empty stage list and
/// std::length_error for more than kMaxEnumeratedStages stages.
std::vector<PathProbability> enumerate_paths(const MeasurementChain& chain);

}  // namespace spinhalf
