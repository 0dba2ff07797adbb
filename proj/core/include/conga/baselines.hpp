#pragma once

#include <cstdint>

#include "conga/knapsack.hpp"
#include "conga/rng.hpp"

namespace conga {

struct BaselineResult {
    double value;
    Packing packing;
};

// Deterministic density-ordered greedy: items by value/weight ratio
// descending (ties by index), take whatever still fits.
BaselineResult greedy_ratio(const KnapsackInstance& inst);

struct SaConfig {
    std::int64_t iterations = -1;  // < 0 means 50 * n
    double t0 = 0.0;               // <= 0 means max item value
    double cooling = 0.999;        // geometric factor applied every iteration
};

// Single-bit-flip annealing over feasible packings, started from greedy.
// Infeasible proposals are rejected outright; worsening feasible moves pass
// a Metropolis test on the value delta.
BaselineResult simulated_annealing(const KnapsackInstance& inst,
                                   const SaConfig& cfg, SplitMix64& rng);

struct GaConfig {
    int population = 100;
    int generations = 500;
    double crossover_rate = 0.9;
    double mutation_rate = -1.0;  // < 0 means 1/n per bit
    int tournament = 3;
    double init_density = 0.5;    // P(bit=1) in the initial population
};

// Generational GA with tournament selection, single-point crossover,
// per-bit mutation, one elite, and repair by dropping the worst-ratio item
// until feasible. Every individual ever scored is feasible.
BaselineResult genetic_algorithm(const KnapsackInstance& inst,
                                 const GaConfig& cfg, SplitMix64& rng);

struct BbConfig {
    std::uint64_t max_nodes = ~0ULL;  // search aborts once exhausted
};

struct BbResult {
    double value;
    Packing packing;
    bool proven_optimal;  // false iff the node budget ran out
};

// Depth-first branch and bound in density order with the fractional
// relaxation bound, seeded with the greedy incumbent.
BbResult branch_and_bound(const KnapsackInstance& inst,
                          const BbConfig& cfg = {});

}  // namespace conga
