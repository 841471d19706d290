#include "spinhalf/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "spinhalf/amplitudes.hpp"

namespace spinhalf {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Born probabilities at stage s, conditioned on the projection after stage
// s-1. The direction sequence of a chain is fixed; only projections are
// random, so four numbers per stage describe the whole process.
struct StageTable {
    double p[2][2];  // [from][to], index 0 = up, 1 = down

    static int idx(Projection m) { return m == Projection::up ? 0 : 1; }
    double p_up(Projection from) const { return p[idx(from)][0]; }
    double prob(Projection from, Projection to) const { return p[idx(from)][idx(to)]; }
};

std::vector<StageTable> stage_tables(const MeasurementChain& chain) {
    std::vector<StageTable> tables;
    tables.reserve(chain.stages.size());
    Direction prev = chain.initial_direction;
    for (const Direction& stage : chain.stages) {
        StageTable t;
        for (Projection from : {Projection::up, Projection::down}) {
            for (Projection to : {Projection::up, Projection::down}) {
                t.p[StageTable::idx(from)][StageTable::idx(to)] =
                    transition_probability(from, prev, to, stage);
            }
        }
        tables.push_back(t);
        prev = stage;
    }
    return tables;
}

void validate(const MeasurementChain& chain) {
    if (chain.stages.empty()) {
        throw std::invalid_argument("measurement chain needs at least one stage");
    }
}

}  // namespace

SplitMix64 shot_stream(std::uint64_t seed, std::uint64_t shot) {
    // Decorrelate (seed, shot) into a starting state with two finalizer
    // rounds; consecutive shots must not land on shifted copies of the same
    // golden-gamma orbit.
    return SplitMix64(mix64(seed ^ mix64(shot + 0x632BE59BD9B4E019ull)));
}

ChainResult run_chain(const MeasurementChain& chain, std::uint64_t shots, std::uint64_t seed) {
    validate(chain);
    if (shots == 0) throw std::invalid_argument("run_chain: shots must be >= 1");

    const std::vector<StageTable> tables = stage_tables(chain);
    const std::size_t n_stages = chain.stages.size();
    const bool track_paths = n_stages <= kMaxEnumeratedStages;

    ChainResult result;
    result.shots = shots;
    result.stage_counts.assign(n_stages, StageCounts{});
    if (track_paths) result.path_counts.assign(std::size_t{1} << n_stages, 0);

    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        SplitMix64 rng = shot_stream(seed, shot);
        Projection current = chain.initial_projection;
        std::size_t path = 0;
        for (std::size_t s = 0; s < n_stages; ++s) {
            const bool up = rng.next_unit() < tables[s].p_up(current);
            if (up) {
                ++result.stage_counts[s].n_up;
                current = Projection::up;
            } else {
                ++result.stage_counts[s].n_down;
                current = Projection::down;
                path |= std::size_t{1} << s;
            }
        }
        if (track_paths) ++result.path_counts[path];
    }

    const StageCounts& last = result.stage_counts.back();
    result.estimate = (static_cast<double>(last.n_up) - static_cast<double>(last.n_down)) /
                      static_cast<double>(shots);
    result.standard_error =
        std::sqrt((1.0 - result.estimate * result.estimate) / static_cast<double>(shots));
    return result;
}

std::vector<PathProbability> enumerate_paths(const MeasurementChain& chain) {
    validate(chain);
    const std::size_t n_stages = chain.stages.size();
    if (n_stages > kMaxEnumeratedStages) {
        throw std::length_error("enumerate_paths: more than 2^20 outcome sequences");
    }

    const std::vector<StageTable> tables = stage_tables(chain);
    std::vector<PathProbability> paths;
    paths.reserve(std::size_t{1} << n_stages);

    for (std::size_t mask = 0; mask < (std::size_t{1} << n_stages); ++mask) {
        PathProbability path;
        path.outcomes.reserve(n_stages);
        path.probability = 1.0;
        Projection current = chain.initial_projection;
        for (std::size_t s = 0; s < n_stages; ++s) {
            const Projection outcome = (mask >> s) & 1u ? Projection::down : Projection::up;
            path.probability *= tables[s].prob(current, outcome);
            current = outcome;
            path.outcomes.push_back(outcome);
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace spinhalf
