#include "conga/knapsack.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "conga/relax.hpp"

namespace conga {

double pack_value(const KnapsackInstance& inst, const Packing& x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i])
            acc += inst.values[i];
    return acc;
}

double pack_overweight(const KnapsackInstance& inst, const Packing& x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i])
            acc += inst.weights[i];
    return acc - inst.capacity;
}

RelaxedSample relaxed_gradients(const KnapsackInstance& inst,
                                const std::vector<double>& logits, double tau,
                                double s, bool rand, SplitMix64& rng) {
    if (logits.size() != inst.size())
        throw std::invalid_argument("relaxed_gradients: logit count mismatch");
    const std::size_t n = logits.size();
    RelaxedSample out;
    out.packing.resize(n);
    out.grad.grad_v.resize(n);
    out.grad.grad_w.resize(n);
    double value = 0.0, weight = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        RelaxOutput r = hot_sigmoid(logits[i], tau, s, /*hard=*/true, rand, rng);
        out.packing[i] = r.x > 0.5 ? 1 : 0;
        value += inst.values[i] * r.x;
        weight += inst.weights[i] * r.x;
        out.grad.grad_v[i] = inst.values[i] * r.dxdt;
        out.grad.grad_w[i] = inst.weights[i] * r.dxdt;
    }
    out.grad.v = value;
    out.grad.w = weight - inst.capacity;
    return out;
}

ExactSolution brute_force_optimal(const KnapsackInstance& inst) {
    const std::size_t n = inst.size();
    if (n > 25)
        throw std::invalid_argument("brute_force_optimal: n > 25");
    const std::uint32_t count = 1u << n;
    double best_value = 0.0;
    std::uint32_t best_mask = 0;  // empty pack, always feasible
    for (std::uint32_t mask = 1; mask < count; ++mask) {
        double value = 0.0, weight = 0.0;
        for (std::uint32_t m = mask; m; m &= m - 1) {
            unsigned i = static_cast<unsigned>(std::countr_zero(m));
            value += inst.values[i];
            weight += inst.weights[i];
        }
        if (weight > inst.capacity)
            continue;
        if (value > best_value) {
            best_value = value;
            best_mask = mask;
        } else if (value == best_value) {
            // Lexicographic order on the bit vector: item 0 first.
            for (std::size_t i = 0; i < n; ++i) {
                bool a = (mask >> i) & 1u, b = (best_mask >> i) & 1u;
                if (a != b) {
                    if (!a)  // mask has 0 where best has 1 -> mask smaller
                        best_mask = mask;
                    break;
                }
            }
        }
    }
    ExactSolution sol;
    sol.value = best_value;
    sol.packing.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        sol.packing[i] = (best_mask >> i) & 1u;
    return sol;
}

ExactSolution dp_optimal(const KnapsackInstance& inst,
                         std::uint64_t cell_budget) {
    const std::size_t n = inst.size();
    if (inst.capacity < 0.0 || inst.capacity != std::floor(inst.capacity))
        throw std::invalid_argument("dp_optimal: capacity not integral");
    for (double w : inst.weights)
        if (w != std::floor(w))
            throw std::invalid_argument("dp_optimal: weights not integral");
    const std::uint64_t cap = static_cast<std::uint64_t>(inst.capacity);
    if (n * (cap + 1) > cell_budget)
        throw std::invalid_argument("dp_optimal: table exceeds cell budget");

    std::vector<double> best(cap + 1, 0.0);
    std::vector<bool> take(n * (cap + 1), false);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t wi = static_cast<std::uint64_t>(inst.weights[i]);
        if (wi > cap)
            continue;
        const double vi = inst.values[i];
        for (std::uint64_t c = cap; c >= wi; --c) {
            if (best[c - wi] + vi > best[c]) {
                best[c] = best[c - wi] + vi;
                take[i * (cap + 1) + c] = true;
            }
            if (c == wi)
                break;
        }
    }
    ExactSolution sol;
    sol.value = best[cap];
    sol.packing.assign(n, 0);
    std::uint64_t c = cap;
    for (std::size_t i = n; i-- > 0;) {
        if (take[i * (cap + 1) + c]) {
            sol.packing[i] = 1;
            c -= static_cast<std::uint64_t>(inst.weights[i]);
        }
    }
    return sol;
}

}  // namespace conga
