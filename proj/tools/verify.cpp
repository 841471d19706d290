#include "verify.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "common.hpp"
#include "spinhalf/amplitudes.hpp"
#include "spinhalf/expectation.hpp"
#include "spinhalf/oracle.hpp"
#include "spinhalf/states_operators.hpp"

namespace spinhalf::cli {

namespace {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    Direction direction() {
        const double u = unit();
        // Snap to the poles occasionally; the identities must hold there too.
        if (u < 0.05) return make_direction(0.0, 2.0 * std::numbers::pi * unit());
        if (u < 0.10) return make_direction(std::numbers::pi, 2.0 * std::numbers::pi * unit());
        return make_direction(std::acos(1.0 - 2.0 * unit()), 2.0 * std::numbers::pi * unit());
    }

    Projection projection() { return unit() < 0.5 ? Projection::up : Projection::down; }

    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

private:
    std::mt19937_64 rng_;
};

std::string direction_str(const Direction& d) {
    return "(" + fmt(d.theta()) + ";" + fmt(d.phi()) + ")";
}

struct Worst {
    double value = 0.0;
    std::string tuple = "-";

    void offer(double candidate, const std::string& inputs) {
        if (candidate > value) {
            value = candidate;
            tuple = inputs;
        }
    }
};

InvariantReport normalization_sweep(int trials, std::uint64_t seed) {
    Sampler s(seed);
    Worst w;
    for (int i = 0; i < trials; ++i) {
        const Projection mi = s.projection();
        const Direction a = s.direction();
        const Direction c = s.direction();
        const double total = transition_probability(mi, a, Projection::up, c) +
                             transition_probability(mi, a, Projection::down, c);
        w.offer(std::abs(total - 1.0), std::string("mi=") + symbol(mi) + " a=" +
                                           direction_str(a) + " c=" + direction_str(c));
    }
    return {"normalization", w.value, w.tuple};
}

InvariantReport composition_sweep(int trials, std::uint64_t seed) {
    Sampler s(seed);
    Worst w;
    for (int i = 0; i < trials; ++i) {
        const Projection mi = s.projection();
        const Projection mf = s.projection();
        const Direction a = s.direction();
        const Direction c = s.direction();
        const Direction b = s.direction();
        const double residual = std::abs(expand(mi, a, mf, c, b) - amplitude(mi, a, mf, c));
        w.offer(residual, std::string("mi=") + symbol(mi) + " mf=" + symbol(mf) + " a=" +
                              direction_str(a) + " c=" + direction_str(c) + " b=" +
                              direction_str(b));
    }
    return {"composition", w.value, w.tuple};
}

InvariantReport eigen_equation_sweep(int trials, std::uint64_t seed) {
    Sampler s(seed);
    Worst w;
    for (int i = 0; i < trials; ++i) {
        const Direction c = s.direction();
        const Direction b = s.direction();
        const Mat2c m = spin_operator(c, b).entries;
        const auto [plus, minus] = eigenvectors(c, b);
        const double residual =
            std::max(max_abs(m * plus.components - plus.components),
                     max_abs(m * minus.components - Complex(-1.0) * minus.components));
        w.offer(residual, "c=" + direction_str(c) + " b=" + direction_str(b));
    }
    return {"eigen_equation", w.value, w.tuple};
}

InvariantReport basis_invariance_sweep(int trials, std::uint64_t seed) {
    Sampler s(seed);
    Worst w;
    for (int i = 0; i < trials; ++i) {
        const Projection mi = s.projection();
        const Direction a = s.direction();
        const Direction c = s.direction();
        const double reference = expectation_direct(mi, a, c);
        for (int k = 0; k < 8; ++k) {
            const Direction b = s.direction();
            const double e = expectation_sandwich({a, c, b, mi});
            w.offer(std::abs(e - reference), std::string("mi=") + symbol(mi) + " a=" +
                                                 direction_str(a) + " c=" + direction_str(c) +
                                                 " b=" + direction_str(b));
        }
    }
    return {"basis_invariance", w.value, w.tuple};
}

InvariantReport oracle_equivalence_sweep(int trials, std::uint64_t seed) {
    Sampler s(seed);
    Worst w;
    for (int i = 0; i < trials; ++i) {
        const Direction a = s.direction();
        const Direction c = s.direction();
        const Direction b = s.direction();
        const std::string inputs =
            "a=" + direction_str(a) + " c=" + direction_str(c) + " b=" + direction_str(b);
        for (Projection mi : {Projection::up, Projection::down}) {
            for (Projection mf : {Projection::up, Projection::down}) {
                w.offer(std::abs(amplitude(mi, a, mf, c) - oracle::amplitude(mi, a, mf, c)),
                        inputs);
            }
        }
        w.offer(max_abs(spin_operator(c, b).entries - oracle::operator_in_basis(c, b)), inputs);
    }
    return {"oracle_equivalence", w.value, w.tuple};
}

InvariantReport case_coherence_sweep(int trials, std::uint64_t seed) {
    Sampler s(seed);
    Worst w;
    for (int i = 0; i < trials; ++i) {
        const Projection mi = s.projection();
        const Direction a = s.direction();
        const Direction c = s.direction();
        const Direction b = s.direction();
        const double expected = eigenvalue(mi) * std::cos(angle_between(a, c));
        const std::string inputs = std::string("mi=") + symbol(mi) + " a=" + direction_str(a) +
                                   " c=" + direction_str(c) + " b=" + direction_str(b);

        for (CaseId id : {CaseId::A, CaseId::B, CaseId::C}) {
            const auto [state, op] = case_configuration(
                id, mi, a, c, id == CaseId::A ? std::optional<Direction>(b) : std::nullopt);
            w.offer(std::abs(sandwich_expectation(state, op) - expected), inputs);
        }
        for (CaseId id : {CaseId::D, CaseId::E}) {
            const auto [state, op] = case_configuration(
                id, mi, a, c, id == CaseId::D ? std::optional<Direction>(b) : std::nullopt);
            w.offer(std::abs(sandwich_expectation(state, op) - eigenvalue(mi)), inputs);
        }
    }
    return {"case_coherence", w.value, w.tuple};
}

}  // namespace

std::vector<InvariantReport> run_verification(int trials, std::uint64_t seed) {
    return {
        normalization_sweep(trials, seed),
        composition_sweep(trials, seed + 1),
        eigen_equation_sweep(trials, seed + 2),
        basis_invariance_sweep(trials, seed + 3),
        oracle_equivalence_sweep(trials, seed + 4),
        case_coherence_sweep(trials, seed + 5),
    };
}

}  // namespace spinhalf::cli
