#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conga/optimizer.hpp"
#include "conga/rng.hpp"

namespace conga {

// A selected subset of items, one 0/1 flag per item.
using Packing = std::vector<std::uint8_t>;

struct KnapsackInstance {
    std::string name;
    std::vector<double> values;   // all > 0
    std::vector<double> weights;  // all > 0
    double capacity = 0.0;
    std::optional<double> optimal_value;  // known optimum, if any

    std::size_t size() const { return values.size(); }
};

double pack_value(const KnapsackInstance& inst, const Packing& x);

// Overweight w(x) = sum(w_i x_i) - capacity; feasible iff <= 0.
double pack_overweight(const KnapsackInstance& inst, const Packing& x);

inline bool is_feasible(const KnapsackInstance& inst, const Packing& x) {
    return pack_overweight(inst, x) <= 0.0;
}

// One stochastic relaxed evaluation of the instance at the given logits:
// every bit goes through the hard hot sigmoid, and the (linear) objective
// and constraint are differentiated through the straight-through estimator,
// so grad_v_i = value_i * dxdt_i and grad_w_i = weight_i * dxdt_i.
struct RelaxedSample {
    GradSample grad;  // v, w and both gradients at this rounding
    Packing packing;  // the rounding itself
};
RelaxedSample relaxed_gradients(const KnapsackInstance& inst,
                                const std::vector<double>& logits, double tau,
                                double s, bool rand, SplitMix64& rng);

struct ExactSolution {
    double value;
    Packing packing;
};

// Exhaustive reference oracle, n <= 25. Ties resolve to the
// lexicographically smallest packing.
ExactSolution brute_force_optimal(const KnapsackInstance& inst);

// Classic O(n * capacity) table. Requires integral weights and capacity;
// refuses instances whose table would exceed cell_budget cells.
ExactSolution dp_optimal(const KnapsackInstance& inst,
                         std::uint64_t cell_budget = 1'000'000'000ULL);

}  // namespace conga
