#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "conga/knapsack.hpp"
#include "conga/optimizer.hpp"
#include "conga/relax.hpp"

namespace conga {

// One member of the population: its own logits, its own mu, its own EMA
// state, its own RNG stream root, and the best feasible packing it has
// sampled so far.
struct AgentState {
    std::vector<double> logits;
    double mu = 0.5;
    OptimizerState opt;
    double best_value = 0.0;
    Packing best_packing;
    std::uint64_t rng_seed = 0;
};

struct EvolutionConfig {
    int n_agents = 50;
    int epochs = 2000;
    int n_generations = 2;
    double mu_lo = 0.2;        // initial mu range
    double mu_hi = 8.0;
    double frac = 1.25;        // widening factor around the survivors' mus
    double top_fraction = 0.2; // survivor share per generation
    double mu_floor = 0.01;    // hard lower bound for the next range
    std::uint64_t seed = 0;
    int n_workers = 1;
    bool early_exit = false;   // stop once a known optimum is matched
};

// Both annealing schedules bundled, epoch-indexed.
struct Schedules {
    TemperatureSchedule tau;
    NoiseSchedule noise;
};

struct GenerationSummary {
    int generation = 0;
    double best_value = 0.0;
    double mu_lo = 0.0, mu_hi = 0.0;  // range this generation drew from
    int epochs_run = 0;
};

struct SolveReport {
    double best_value = 0.0;
    Packing best_packing;
    double best_mu = 0.0;  // mu of the agent that found best_packing
    std::vector<GenerationSummary> generations;
    double wall_time_s = 0.0;
    std::optional<bool> reached_optimum;  // set iff the optimum is known
};

// Fresh population: logits ~ N(0,1), mu ~ U(mu_range), zeroed EMAs.
// Derivation is per (gen_seed, agent index), so agents are independent of
// each other and of how the epoch loop is scheduled.
std::vector<AgentState> init_population(const KnapsackInstance& inst,
                                        const EvolutionConfig& cfg,
                                        std::pair<double, double> mu_range,
                                        std::uint64_t gen_seed);

// One optimizer step for every agent: sample relaxed gradients at the
// epoch's tau and s, take a conga step, and record the packing if it is
// feasible and beats the agent's best. Agents never interact here, so any
// worker count gives identical results.
void run_epoch(std::vector<AgentState>& agents, const KnapsackInstance& inst,
               int epoch, const Schedules& scheds,
               const OptimizerConfig& opt_cfg, int n_workers = 1);

// Mu range spanned by the top agents (by best_value, ties to the lower
// index), widened by frac on both sides and floored at mu_floor.
std::pair<double, double> select_mu_range(const std::vector<AgentState>& agents,
                                          double top_fraction, double frac,
                                          double mu_floor);

// Full directed-evolution run: n_generations rounds of (init, epochs,
// mu-range contraction). Logits and EMAs start fresh each generation; only
// the mu range is inherited. The returned packing is always feasible (the
// empty pack in the worst case).
SolveReport solve(const KnapsackInstance& inst, const EvolutionConfig& cfg,
                  const OptimizerConfig& opt_cfg, const Schedules& scheds);

}  // namespace conga
