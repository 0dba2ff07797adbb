#include "conga/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace conga {

namespace {

// Item indices sorted by value/weight descending, ties by original index.
std::vector<std::size_t> density_order(const KnapsackInstance& inst) {
    std::vector<std::size_t> order(inst.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return inst.values[a] * inst.weights[b] >
                                inst.values[b] * inst.weights[a];
                     });
    return order;
}

}  // namespace

BaselineResult greedy_ratio(const KnapsackInstance& inst) {
    BaselineResult res;
    res.packing.assign(inst.size(), 0);
    res.value = 0.0;
    double room = inst.capacity;
    for (std::size_t i : density_order(inst)) {
        if (inst.weights[i] <= room) {
            res.packing[i] = 1;
            res.value += inst.values[i];
            room -= inst.weights[i];
        }
    }
    return res;
}

BaselineResult simulated_annealing(const KnapsackInstance& inst,
                                   const SaConfig& cfg, SplitMix64& rng) {
    const std::size_t n = inst.size();
    BaselineResult best = greedy_ratio(inst);
    Packing cur = best.packing;
    double cur_value = best.value;
    double cur_weight = pack_overweight(inst, cur) + inst.capacity;

    const std::int64_t iters =
        cfg.iterations >= 0 ? cfg.iterations : 50 * static_cast<std::int64_t>(n);
    double temp = cfg.t0 > 0.0
                      ? cfg.t0
                      : *std::max_element(inst.values.begin(), inst.values.end());
    for (std::int64_t it = 0; it < iters; ++it, temp *= cfg.cooling) {
        std::size_t i = rng.next_below(n);
        const double dw = cur[i] ? -inst.weights[i] : inst.weights[i];
        if (cur_weight + dw > inst.capacity)
            continue;  // infeasible proposal
        const double dv = cur[i] ? -inst.values[i] : inst.values[i];
        if (dv < 0.0 && rng.next_open01() >= std::exp(dv / temp))
            continue;
        cur[i] ^= 1;
        cur_value += dv;
        cur_weight += dw;
        if (cur_value > best.value) {
            best.value = cur_value;
            best.packing = cur;
        }
    }
    return best;
}

namespace {

// Drop lowest-density items until the packing fits.
void repair(const KnapsackInstance& inst,
            const std::vector<std::size_t>& order, Packing& x) {
    double over = pack_overweight(inst, x);
    for (std::size_t k = order.size(); over > 0.0 && k-- > 0;) {
        std::size_t i = order[k];
        if (x[i]) {
            x[i] = 0;
            over -= inst.weights[i];
        }
    }
}

}  // namespace

BaselineResult genetic_algorithm(const KnapsackInstance& inst,
                                 const GaConfig& cfg, SplitMix64& rng) {
    const std::size_t n = inst.size();
    const auto order = density_order(inst);
    const double mutation =
        cfg.mutation_rate >= 0.0 ? cfg.mutation_rate : 1.0 / n;

    std::vector<Packing> pop(cfg.population);
    std::vector<double> fitness(cfg.population);
    for (int p = 0; p < cfg.population; ++p) {
        Packing x(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = rng.next_open01() < cfg.init_density ? 1 : 0;
        repair(inst, order, x);
        fitness[p] = pack_value(inst, x);
        pop[p] = std::move(x);
    }

    auto best_of_pop = [&]() {
        return static_cast<std::size_t>(
            std::max_element(fitness.begin(), fitness.end()) -
            fitness.begin());
    };
    BaselineResult best{fitness[best_of_pop()], pop[best_of_pop()]};

    auto tournament = [&]() -> const Packing& {
        std::size_t winner = rng.next_below(cfg.population);
        for (int k = 1; k < cfg.tournament; ++k) {
            std::size_t c = rng.next_below(cfg.population);
            if (fitness[c] > fitness[winner])
                winner = c;
        }
        return pop[winner];
    };

    for (int gen = 0; gen < cfg.generations; ++gen) {
        std::vector<Packing> next;
        std::vector<double> next_fitness;
        next.reserve(cfg.population);
        next_fitness.reserve(cfg.population);
        next.push_back(best.packing);  // elite
        next_fitness.push_back(best.value);
        while (static_cast<int>(next.size()) < cfg.population) {
            Packing child = tournament();
            if (n >= 2 && rng.next_open01() < cfg.crossover_rate) {
                const Packing& other = tournament();
                std::size_t cut = 1 + rng.next_below(n - 1);
                std::copy(other.begin() + cut, other.end(),
                          child.begin() + cut);
            }
            if (mutation > 0.0)
                for (std::size_t i = 0; i < n; ++i)
                    if (rng.next_open01() < mutation)
                        child[i] ^= 1;
            repair(inst, order, child);
            double f = pack_value(inst, child);
            if (f > best.value)
                best = {f, child};
            next_fitness.push_back(f);
            next.push_back(std::move(child));
        }
        pop = std::move(next);
        fitness = std::move(next_fitness);
    }
    return best;
}

namespace {

struct BbSearch {
    const KnapsackInstance& inst;
    std::vector<std::size_t> order;
    std::uint64_t budget;
    std::uint64_t used = 0;
    bool aborted = false;
    double best_value;
    Packing best;     // in original index space
    Packing current;  // in density-order position space

    // Value of the fractional relaxation over positions [pos, n) with the
    // given remaining capacity; an upper bound on any completion.
    double bound(std::size_t pos, double room) const {
        double b = 0.0;
        for (; pos < order.size(); ++pos) {
            std::size_t i = order[pos];
            if (inst.weights[i] <= room) {
                b += inst.values[i];
                room -= inst.weights[i];
            } else {
                b += inst.values[i] / inst.weights[i] * room;
                break;
            }
        }
        return b;
    }

    void dfs(std::size_t pos, double value, double room) {
        if (aborted)
            return;
        if (used >= budget) {
            aborted = true;
            return;
        }
        ++used;
        if (value > best_value) {
            best_value = value;
            for (std::size_t k = 0; k < order.size(); ++k)
                best[order[k]] = k < pos ? current[k] : 0;
        }
        if (pos == order.size())
            return;
        if (value + bound(pos, room) <= best_value)
            return;
        std::size_t i = order[pos];
        if (inst.weights[i] <= room) {
            current[pos] = 1;
            dfs(pos + 1, value + inst.values[i], room - inst.weights[i]);
        }
        current[pos] = 0;
        dfs(pos + 1, value, room);
    }
};

}  // namespace

BbResult branch_and_bound(const KnapsackInstance& inst, const BbConfig& cfg) {
    BaselineResult incumbent = greedy_ratio(inst);
    BbSearch search{inst, density_order(inst), cfg.max_nodes};
    search.best_value = incumbent.value;
    search.best = incumbent.packing;
    search.current.assign(inst.size(), 0);
    search.dfs(0, 0.0, inst.capacity);
    return {search.best_value, search.best, !search.aborted};
}

}  // namespace conga
