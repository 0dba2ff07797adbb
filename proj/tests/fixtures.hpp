#pragma once

// Shared test fixtures: the seven-instance low-dimensional uncorrelated
// suite. f1 and f3 carry the classic published data (their optima re-proven
// by the exhaustive oracle in the tests); the other five are regenerated
// equivalents matching the published (n, capacity) shapes, with optima
// attached from brute force at construction time.

#include <stdexcept>
#include <vector>

#include "conga/data.hpp"
#include "conga/knapsack.hpp"

namespace fixtures {

inline conga::KnapsackInstance classic3() {
    conga::KnapsackInstance inst;
    inst.name = "classic3";
    inst.values = {60.0, 100.0, 120.0};
    inst.weights = {10.0, 20.0, 30.0};
    inst.capacity = 50.0;
    inst.optimal_value = 220.0;
    return inst;
}

inline conga::KnapsackInstance ld_f1() {
    conga::KnapsackInstance inst;
    inst.name = "f1_ld-uc_10_269";
    inst.values = {55, 10, 47, 5, 4, 50, 8, 61, 85, 87};
    inst.weights = {95, 4, 60, 32, 23, 72, 80, 62, 65, 46};
    inst.capacity = 269;
    inst.optimal_value = 295;
    return inst;
}

inline conga::KnapsackInstance ld_f3() {
    conga::KnapsackInstance inst;
    inst.name = "f3_ld-uc_4_20";
    inst.values = {9, 11, 13, 15};
    inst.weights = {6, 5, 9, 7};
    inst.capacity = 20;
    inst.optimal_value = 35;
    return inst;
}

// Deterministic regeneration: fixed dataset spec, capacity overridden to
// the published shape, optimum from the exhaustive oracle.
inline conga::KnapsackInstance regen(const std::string& name, int n, int range,
                                     double capacity, std::uint64_t seed,
                                     bool fractional_values = false) {
    conga::DatasetSpec spec;
    spec.cls = conga::DatasetClass::ld_uc;
    spec.n_items = n;
    spec.coefficient_range = range;
    spec.seed = seed;
    auto inst = conga::generate_instance(spec);
    inst.name = name;
    inst.capacity = capacity;
    if (fractional_values)
        for (std::size_t i = 0; i < inst.values.size(); ++i)
            inst.values[i] += static_cast<double>(i % 10) / 100.0;
    double total = 0.0;
    for (double w : inst.weights)
        total += w;
    if (!(capacity > 0.0) || capacity >= total)
        throw std::logic_error("fixture capacity not binding: " + name);
    inst.optimal_value = conga::brute_force_optimal(inst).value;
    return inst;
}

inline std::vector<conga::KnapsackInstance> ld_uc_suite() {
    return {
        ld_f1(),
        regen("f2_ld-uc_20_878", 20, 100, 878.0, 2002),
        ld_f3(),
        regen("f4_ld-uc_4_11", 4, 10, 11.0, 2004),
        regen("f5_ld-uc_15_375", 15, 100, 375.0, 2005, true),
        regen("f6_ld-uc_10_60", 10, 30, 60.0, 2006),
        regen("f7_ld-uc_7_50", 7, 20, 50.0, 2007),
    };
}

}  // namespace fixtures
