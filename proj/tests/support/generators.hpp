#pragma once

// Hand-rolled generators for property tests. Deterministic for a given seed.

#include <cstddef>
#include <cstdint>
#include <random>

#include "tri/formula.hpp"
#include "tri/interpretation.hpp"
#include "tri/ranking.hpp"

namespace tri::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t bound) {
        return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
    }

    /// Random formula over x0..x(vars-1) of depth at most `depth`. Covers
    /// every connective including bot.
    Formula formula(std::size_t vars, std::size_t depth) {
        if (depth <= 1 || below(4) == 0) {
            if (vars == 0 || below(8) == 0) return Formula::bot();
            return Formula::var(below(vars));
        }
        switch (below(8)) {
            case 0: return ~formula(vars, depth - 1);
            case 1: return dia1(formula(vars, depth - 1));
            case 2: return box1(formula(vars, depth - 1));
            case 3: return dia2(formula(vars, depth - 1));
            case 4: return box2(formula(vars, depth - 1));
            case 5: return formula(vars, depth - 1) & formula(vars, depth - 1);
            case 6: return formula(vars, depth - 1) | formula(vars, depth - 1);
            default: return implies(formula(vars, depth - 1), formula(vars, depth - 1));
        }
    }

    /// Random formula using only variables, ~, &, | and ->.
    Formula kleene_formula(std::size_t vars, std::size_t depth) {
        if (depth <= 1 || below(4) == 0) return Formula::var(below(vars));
        switch (below(4)) {
            case 0: return ~kleene_formula(vars, depth - 1);
            case 1: return kleene_formula(vars, depth - 1) & kleene_formula(vars, depth - 1);
            case 2: return kleene_formula(vars, depth - 1) | kleene_formula(vars, depth - 1);
            default: return implies(kleene_formula(vars, depth - 1), kleene_formula(vars, depth - 1));
        }
    }

    Interpretation interpretation(std::size_t n) {
        return Interpretation::from_index(below(world_count(n)), n);
    }

    Ranking ranking(std::size_t n) {
        TruthColumn values(world_count(n));
        for (auto& v : values) v = from_code(static_cast<std::uint8_t>(below(3)));
        return Ranking(n, std::move(values));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace tri::testing
