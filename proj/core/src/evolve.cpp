#include "conga/evolve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "conga/data.hpp"
#include "conga/parallel.hpp"

namespace conga {

namespace {

// Stream layout per agent root seed: sub-stream 0 initializes the agent,
// sub-stream 1+e drives epoch e. Keeping them disjoint makes every epoch's
// noise independent of how many epochs ran before.
constexpr std::uint64_t kInitStream = 0;

std::uint64_t epoch_stream(std::uint64_t root, int epoch) {
    return mix_seed({root, static_cast<std::uint64_t>(epoch) + 1});
}

}  // namespace

std::vector<AgentState> init_population(const KnapsackInstance& inst,
                                        const EvolutionConfig& cfg,
                                        std::pair<double, double> mu_range,
                                        std::uint64_t gen_seed) {
    if (cfg.n_agents < 1)
        throw std::invalid_argument("init_population: n_agents < 1");
    if (!(mu_range.first > 0.0) || mu_range.second < mu_range.first)
        throw std::invalid_argument("init_population: bad mu range");
    const std::size_t n = inst.size();
    std::vector<AgentState> agents(cfg.n_agents);
    for (int a = 0; a < cfg.n_agents; ++a) {
        AgentState& ag = agents[a];
        ag.rng_seed = mix_seed({gen_seed, static_cast<std::uint64_t>(a)});
        SplitMix64 rng(mix_seed({ag.rng_seed, kInitStream}));
        ag.logits.resize(n);
        for (double& t : ag.logits)
            t = rng.next_normal();
        ag.mu = rng.next_uniform(mu_range.first, mu_range.second);
        ag.opt = make_state(n);
        ag.best_value = 0.0;
        ag.best_packing.assign(n, 0);  // empty pack, always feasible
    }
    return agents;
}

void run_epoch(std::vector<AgentState>& agents, const KnapsackInstance& inst,
               int epoch, const Schedules& scheds,
               const OptimizerConfig& opt_cfg, int n_workers) {
    const double tau = tau_at(epoch, scheds.tau);
    const double s = s_at(epoch, scheds.noise);
    parallel_for(agents.size(), n_workers, [&](std::size_t i) {
        AgentState& ag = agents[i];
        SplitMix64 rng(epoch_stream(ag.rng_seed, epoch));
        RelaxedSample sample =
            relaxed_gradients(inst, ag.logits, tau, s, /*rand=*/true, rng);
        OptimizerConfig cfg = opt_cfg;
        cfg.mu = ag.mu;
        StepResult step =
            conga_step(ag.logits, sample.grad, ag.opt, cfg, GammaMode::conga);
        ag.logits = std::move(step.params);
        ag.opt = std::move(step.state);
        if (sample.grad.w <= 0.0 && sample.grad.v > ag.best_value) {
            ag.best_value = sample.grad.v;
            ag.best_packing = std::move(sample.packing);
        }
    });
}

std::pair<double, double> select_mu_range(const std::vector<AgentState>& agents,
                                          double top_fraction, double frac,
                                          double mu_floor) {
    if (agents.empty())
        throw std::invalid_argument("select_mu_range: no agents");
    std::vector<std::size_t> order(agents.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return agents[a].best_value > agents[b].best_value;
                     });
    std::size_t k = static_cast<std::size_t>(
        std::ceil(top_fraction * static_cast<double>(agents.size())));
    k = std::clamp<std::size_t>(k, 1, agents.size());
    double lo = agents[order[0]].mu, hi = lo;
    for (std::size_t j = 1; j < k; ++j) {
        lo = std::min(lo, agents[order[j]].mu);
        hi = std::max(hi, agents[order[j]].mu);
    }
    return {std::max(mu_floor, lo / frac), hi * frac};
}

SolveReport solve(const KnapsackInstance& inst, const EvolutionConfig& cfg,
                  const OptimizerConfig& opt_cfg, const Schedules& scheds) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveReport rep;
    rep.best_packing.assign(inst.size(), 0);

    std::pair<double, double> mu_range{cfg.mu_lo, cfg.mu_hi};
    bool done = false;
    for (int gen = 0; gen < cfg.n_generations && !done; ++gen) {
        std::uint64_t gen_seed =
            mix_seed({cfg.seed, static_cast<std::uint64_t>(gen)});
        auto agents = init_population(inst, cfg, mu_range, gen_seed);
        int epochs_run = 0;
        for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
            run_epoch(agents, inst, epoch, scheds, opt_cfg, cfg.n_workers);
            ++epochs_run;
            if (cfg.early_exit && inst.optimal_value) {
                for (const auto& ag : agents)
                    if (reached_optimum(ag.best_value, *inst.optimal_value)) {
                        done = true;
                        break;
                    }
                if (done)
                    break;
            }
        }

        const AgentState* gen_best = &agents[0];
        for (const auto& ag : agents)
            if (ag.best_value > gen_best->best_value)
                gen_best = &ag;
        if (gen_best->best_value > rep.best_value) {
            rep.best_value = gen_best->best_value;
            rep.best_packing = gen_best->best_packing;
            rep.best_mu = gen_best->mu;
        }
        rep.generations.push_back({gen, gen_best->best_value, mu_range.first,
                                   mu_range.second, epochs_run});
        mu_range = select_mu_range(agents, cfg.top_fraction, cfg.frac,
                                   cfg.mu_floor);
    }

    if (inst.optimal_value)
        rep.reached_optimum =
            reached_optimum(rep.best_value, *inst.optimal_value);
    rep.wall_time_s = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    return rep;
}

}  // namespace conga
