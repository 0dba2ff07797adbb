// Command-line front end: solve single instances, benchmark algorithm
// suites over instance directories, generate datasets, and run the 2-d
// diagnostic scenarios.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conga/baselines.hpp"
#include "conga/data.hpp"
#include "conga/evolve.hpp"
#include "conga/knapsack.hpp"
#include "conga/parallel.hpp"
#include "conga/relax.hpp"
#include "conga/toy2d.hpp"

namespace fs = std::filesystem;
using namespace conga;

namespace {

// Everything tunable on the solver, defaulted to the reference
// hyperparameter table. mu1/mu2 defaults come from the active preset:
// "wide" (0.2, 8.0) or "table" (0.2, 0.8).
struct SolverOptions {
    int n_generations = 2;
    int epochs = 2000;
    int n_agents = 50;
    double lr = 0.1;
    double nu = 1.0;
    std::string mu_preset = "wide";
    double mu1 = 0.2;
    double mu2 = 8.0;
    bool mu2_explicit = false;
    double beta_v = 0.5;
    double beta_w = 0.5;
    double eps = 1e-6;
    double tau1 = 30.0;
    double tau_hot = 30.0;
    double tau2 = 0.01;
    int tau_warmup_epochs = 1;
    int tau_max_epochs = 0;  // 0 -> epochs
    std::string s_mode = "constant";
    double s_base = 1.0;
    double s_peak = 0.0;
    int s_peak_epoch = 0;
    double frac = 1.25;
    double top_fraction = 0.2;
    double mu_floor = 0.01;
    std::uint64_t seed = 0;
    int workers = 1;
    bool early_exit = false;

    // Baseline knobs.
    std::int64_t sa_iterations = -1;
    double sa_t0 = 0.0;
    double sa_cooling = 0.999;
    int ga_population = 100;
    int ga_generations = 500;
    std::uint64_t bb_max_nodes = 10'000'000;

    EvolutionConfig evolution() const {
        EvolutionConfig cfg;
        cfg.n_agents = n_agents;
        cfg.epochs = epochs;
        cfg.n_generations = n_generations;
        if (mu_preset == "table" && !mu2_explicit) {
            cfg.mu_lo = 0.2;
            cfg.mu_hi = 0.8;
        } else {
            cfg.mu_lo = mu1;
            cfg.mu_hi = mu2;
        }
        cfg.frac = frac;
        cfg.top_fraction = top_fraction;
        cfg.mu_floor = mu_floor;
        cfg.seed = seed;
        cfg.early_exit = early_exit;
        return cfg;
    }

    OptimizerConfig optimizer() const {
        OptimizerConfig cfg;
        cfg.lambda = lr;
        cfg.nu = nu;
        cfg.beta_v = beta_v;
        cfg.beta_w = beta_w;
        cfg.eps = eps;
        return cfg;
    }

    Schedules schedules() const {
        Schedules s;
        s.tau.tau1 = tau1;
        s.tau.tau_hot = tau_hot;
        s.tau.tau2 = tau2;
        s.tau.warmup_epochs = tau_warmup_epochs;
        s.tau.max_epochs = tau_max_epochs > 0 ? tau_max_epochs : epochs;
        s.noise.mode = s_mode == "heat" ? NoiseSchedule::Mode::heat
                                        : NoiseSchedule::Mode::constant;
        s.noise.s_base = s_base;
        s.noise.s_peak = s_peak;
        s.noise.peak_epoch = s_peak_epoch;
        s.noise.max_epochs = s.tau.max_epochs;
        return s;
    }
};

// Solver flags live on the root app: a flat key=value --config file can
// then set any of them, and solve/bench reach them via fallthrough().
// Returns the --mu2 option so callers can tell an explicit value from the
// preset default.
CLI::Option* add_solver_flags(CLI::App* cmd, SolverOptions& o) {
    cmd->add_option("--n-generations", o.n_generations,
                    "directed-evolution generations")
        ->capture_default_str();
    cmd->add_option("--epochs", o.epochs, "maximum epochs per generation")
        ->capture_default_str();
    cmd->add_option("--n-agents", o.n_agents, "agents per generation")
        ->capture_default_str();
    cmd->add_option("--lr", o.lr, "learning rate lambda")
        ->capture_default_str();
    cmd->add_option("--nu", o.nu, "penalty exponent")->capture_default_str();
    cmd->add_option("--mu-preset", o.mu_preset,
                    "initial mu range preset: wide=(0.2,8.0), table=(0.2,0.8)")
        ->check(CLI::IsMember({"wide", "table"}))
        ->capture_default_str();
    cmd->add_option("--mu1", o.mu1, "mu range lower bound")
        ->capture_default_str();
    auto* mu2_opt = cmd->add_option("--mu2", o.mu2, "mu range upper bound")
                        ->capture_default_str();
    cmd->add_option("--beta-v", o.beta_v, "EMA factor for grad v")
        ->capture_default_str();
    cmd->add_option("--beta-w", o.beta_w, "EMA factor for grad w")
        ->capture_default_str();
    cmd->add_option("--eps", o.eps, "division guard epsilon")
        ->capture_default_str();
    cmd->add_option("--tau1", o.tau1, "initial temperature")
        ->capture_default_str();
    cmd->add_option("--tau-hot", o.tau_hot, "post-warmup temperature")
        ->capture_default_str();
    cmd->add_option("--tau2", o.tau2, "final temperature")
        ->capture_default_str();
    cmd->add_option("--tau-warmup-epochs", o.tau_warmup_epochs,
                    "linear warmup epochs")
        ->capture_default_str();
    cmd->add_option("--tau-max-epochs", o.tau_max_epochs,
                    "annealing horizon (0 = --epochs)")
        ->capture_default_str();
    cmd->add_option("--s-mode", o.s_mode, "noise schedule: constant or heat")
        ->check(CLI::IsMember({"constant", "heat"}))
        ->capture_default_str();
    cmd->add_option("--s-base", o.s_base, "logistic noise scale")
        ->capture_default_str();
    cmd->add_option("--s-peak", o.s_peak, "heat-mode peak noise scale")
        ->capture_default_str();
    cmd->add_option("--s-peak-epoch", o.s_peak_epoch, "heat-mode peak epoch")
        ->capture_default_str();
    cmd->add_option("--frac", o.frac, "mu-range expansion factor")
        ->capture_default_str();
    cmd->add_option("--top-fraction", o.top_fraction,
                    "survivor share per generation")
        ->capture_default_str();
    cmd->add_option("--mu-floor", o.mu_floor, "hard lower bound for mu")
        ->capture_default_str();
    cmd->add_option("--seed", o.seed, "global random seed")
        ->capture_default_str();
    cmd->add_option("--workers", o.workers, "worker threads")
        ->capture_default_str();
    cmd->add_flag("--early-exit", o.early_exit,
                  "stop once a known optimum is reached");

    cmd->add_option("--sa-iterations", o.sa_iterations,
                    "SA iterations (-1 = 50*n)")
        ->capture_default_str();
    cmd->add_option("--sa-t0", o.sa_t0, "SA initial temperature (0 = max value)")
        ->capture_default_str();
    cmd->add_option("--sa-cooling", o.sa_cooling, "SA geometric cooling factor")
        ->capture_default_str();
    cmd->add_option("--ga-population", o.ga_population, "GA population size")
        ->capture_default_str();
    cmd->add_option("--ga-generations", o.ga_generations, "GA generations")
        ->capture_default_str();
    cmd->add_option("--bb-max-nodes", o.bb_max_nodes,
                    "branch-and-bound node budget")
        ->capture_default_str();
    return mu2_opt;
}

const std::vector<std::string> kAlgorithms = {"conga", "greedy", "sa",
                                              "ga",    "bb",     "dp"};

struct RunOutcome {
    double value = 0.0;
    Packing packing;
    double time_s = 0.0;
    std::optional<double> best_mu;  // conga only
    std::optional<bool> proven;     // bb only
};

// One algorithm on one instance, timed. stream_seed folds in the algorithm
// and task indices so benchmark jobs are independent of scheduling.
RunOutcome run_algorithm(const std::string& algo, const KnapsackInstance& inst,
                         const SolverOptions& so, std::uint64_t stream_seed,
                         int solver_workers) {
    RunOutcome out;
    const auto t0 = std::chrono::steady_clock::now();
    if (algo == "conga") {
        EvolutionConfig cfg = so.evolution();
        cfg.seed = stream_seed;
        cfg.n_workers = solver_workers;
        SolveReport rep = solve(inst, cfg, so.optimizer(), so.schedules());
        out.value = rep.best_value;
        out.packing = rep.best_packing;
        out.best_mu = rep.best_mu;
    } else if (algo == "greedy") {
        auto r = greedy_ratio(inst);
        out.value = r.value;
        out.packing = std::move(r.packing);
    } else if (algo == "sa") {
        SaConfig cfg;
        cfg.iterations = so.sa_iterations;
        cfg.t0 = so.sa_t0;
        cfg.cooling = so.sa_cooling;
        SplitMix64 rng(stream_seed);
        auto r = simulated_annealing(inst, cfg, rng);
        out.value = r.value;
        out.packing = std::move(r.packing);
    } else if (algo == "ga") {
        GaConfig cfg;
        cfg.population = so.ga_population;
        cfg.generations = so.ga_generations;
        SplitMix64 rng(stream_seed);
        auto r = genetic_algorithm(inst, cfg, rng);
        out.value = r.value;
        out.packing = std::move(r.packing);
    } else if (algo == "bb") {
        BbConfig cfg;
        cfg.max_nodes = so.bb_max_nodes;
        auto r = branch_and_bound(inst, cfg);
        out.value = r.value;
        out.packing = std::move(r.packing);
        out.proven = r.proven_optimal;
    } else if (algo == "dp") {
        auto r = dp_optimal(inst);
        out.value = r.value;
        out.packing = std::move(r.packing);
    } else {
        throw std::invalid_argument("unknown algorithm: " + algo);
    }
    out.time_s = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - t0)
                     .count();

    if (!is_feasible(inst, out.packing) ||
        std::abs(pack_value(inst, out.packing) - out.value) > 1e-9)
        throw std::logic_error(algo + " returned an inconsistent packing on " +
                               inst.name);
    return out;
}

int cmd_solve(const std::string& path, const SolverOptions& so,
              const std::string& algo, const std::string& report_path) {
    KnapsackInstance inst = load_instance(path);
    RunOutcome out = run_algorithm(algo, inst, so,
                                   mix_seed({so.seed, 0}), so.workers);

    std::cout << "instance      " << inst.name << " (n=" << inst.size()
              << ", capacity=" << format_double(inst.capacity) << ")\n";
    std::cout << "algorithm     " << algo << "\n";
    std::cout << "best_value    " << format_double(out.value) << "\n";
    if (out.best_mu)
        std::cout << "best_mu       " << format_double(*out.best_mu) << "\n";
    if (out.proven)
        std::cout << "proven        " << (*out.proven ? "yes" : "no") << "\n";
    bool reached = false;
    if (inst.optimal_value) {
        reached = reached_optimum(out.value, *inst.optimal_value);
        std::cout << "optimal_value " << format_double(*inst.optimal_value)
                  << "\n";
        std::cout << "shortfall     "
                  << format_double(*inst.optimal_value - out.value) << "\n";
        std::cout << "reached       " << (reached ? "yes" : "no") << "\n";
    }
    std::cout << "feasible      yes\n";
    std::cout << "time_s        " << format_double(out.time_s) << "\n";

    if (!report_path.empty()) {
        if (!inst.optimal_value)
            throw std::runtime_error(
                "--report needs a known optimum; add an 'opt' trailer to the "
                "instance (see gen --with-opt)");
        BenchRecord rec;
        rec.algorithm = algo;
        rec.dataset = inst.name;
        rec.items = static_cast<int>(inst.size());
        rec.best_value = out.value;
        rec.optimal_value = *inst.optimal_value;
        rec.shortfall = rec.optimal_value - rec.best_value;
        rec.time_s = out.time_s;
        std::ofstream f(report_path, std::ios::app);
        if (!f)
            throw std::runtime_error("cannot open report file: " + report_path);
        write_records_jsonl({rec}, f);
    }
    return inst.optimal_value && !reached ? 2 : 0;
}

int cmd_bench(const std::string& dir, const SolverOptions& so,
              const std::string& algorithms_csv, const std::string& out_csv,
              const std::string& out_jsonl, const std::string& mu_hist_path,
              bool zero_times) {
    std::vector<std::string> algos;
    {
        std::stringstream ss(algorithms_csv);
        std::string a;
        while (std::getline(ss, a, ',')) {
            if (a.empty())
                continue;
            if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) ==
                kAlgorithms.end())
                throw std::invalid_argument("unknown algorithm: " + a);
            algos.push_back(a);
        }
    }
    if (algos.empty())
        throw std::invalid_argument("no algorithms selected");

    std::vector<fs::path> files;
    if (!fs::is_directory(dir))
        throw std::runtime_error("not a directory: " + dir);
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw std::runtime_error("no .txt instances in " + dir);

    std::vector<KnapsackInstance> instances;
    instances.reserve(files.size());
    for (const auto& f : files) {
        KnapsackInstance inst = load_instance(f.string());
        if (!inst.optimal_value) {
            try {
                inst.optimal_value = dp_optimal(inst).value;
            } catch (const std::invalid_argument&) {
                throw std::runtime_error(
                    "no known optimum for " + f.string() +
                    " and the exact oracle cannot certify it; regenerate "
                    "with gen --with-opt");
            }
        }
        instances.push_back(std::move(inst));
    }

    // Algorithm-major, filename-sorted job grid; results land by index so
    // output order never depends on scheduling.
    struct Job {
        std::size_t algo;
        std::size_t task;
    };
    std::vector<Job> jobs;
    for (std::size_t a = 0; a < algos.size(); ++a)
        for (std::size_t t = 0; t < instances.size(); ++t)
            jobs.push_back({a, t});

    std::vector<RunOutcome> outcomes(jobs.size());
    parallel_for(jobs.size(), so.workers, [&](std::size_t j) {
        const Job& job = jobs[j];
        outcomes[j] = run_algorithm(
            algos[job.algo], instances[job.task], so,
            mix_seed({so.seed, static_cast<std::uint64_t>(job.algo),
                      static_cast<std::uint64_t>(job.task)}),
            /*solver_workers=*/1);
    });

    std::vector<BenchRecord> records;
    records.reserve(jobs.size());
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        const KnapsackInstance& inst = instances[jobs[j].task];
        BenchRecord rec;
        rec.algorithm = algos[jobs[j].algo];
        rec.dataset = inst.name;
        rec.items = static_cast<int>(inst.size());
        rec.best_value = outcomes[j].value;
        rec.optimal_value = *inst.optimal_value;
        rec.shortfall = rec.optimal_value - rec.best_value;
        rec.time_s = zero_times ? 0.0 : outcomes[j].time_s;
        records.push_back(std::move(rec));
    }

    if (!out_csv.empty()) {
        std::ofstream f(out_csv);
        if (!f)
            throw std::runtime_error("cannot open " + out_csv);
        write_records_csv(records, f);
    }
    if (!out_jsonl.empty()) {
        std::ofstream f(out_jsonl);
        if (!f)
            throw std::runtime_error("cannot open " + out_jsonl);
        write_records_jsonl(records, f);
    }

    for (std::size_t a = 0; a < algos.size(); ++a) {
        std::vector<BenchRecord> rows(records.begin() + a * instances.size(),
                                      records.begin() +
                                          (a + 1) * instances.size());
        Metrics m = compute_metrics(rows);
        std::cout << algos[a] << ": acc=" << format_double(m.acc)
                  << " mean_time_s=" << format_double(m.mean_time_s) << " ("
                  << rows.size() << " tasks)\n";
    }

    if (!mu_hist_path.empty()) {
        std::vector<double> mus;
        for (std::size_t j = 0; j < jobs.size(); ++j)
            if (outcomes[j].best_mu)
                mus.push_back(*outcomes[j].best_mu);
        if (mus.empty())
            throw std::runtime_error(
                "--mu-hist needs conga among the algorithms");
        const int bins = 10;
        double lo = *std::min_element(mus.begin(), mus.end());
        double hi = *std::max_element(mus.begin(), mus.end());
        if (hi <= lo)
            hi = lo + 1.0;
        std::vector<int> counts(bins, 0);
        for (double m : mus) {
            int b = static_cast<int>((m - lo) / (hi - lo) * bins);
            counts[std::clamp(b, 0, bins - 1)]++;
        }
        std::ofstream f(mu_hist_path);
        if (!f)
            throw std::runtime_error("cannot open " + mu_hist_path);
        f << "bin_lo,bin_hi,count\n";
        for (int b = 0; b < bins; ++b) {
            double blo = lo + (hi - lo) * b / bins;
            double bhi = lo + (hi - lo) * (b + 1) / bins;
            f << format_double(blo) << ',' << format_double(bhi) << ','
              << counts[b] << '\n';
        }
    }
    return 0;
}

int cmd_gen(const std::string& cls_name, int n, int count, int range,
            double ratio, std::uint64_t seed, const std::string& out_dir,
            bool with_opt) {
    DatasetClass cls = dataset_class_from_string(cls_name);
    fs::create_directories(out_dir);
    for (int i = 0; i < count; ++i) {
        DatasetSpec spec;
        spec.cls = cls;
        spec.n_items = n;
        spec.coefficient_range = range;
        spec.capacity_ratio = ratio;
        spec.seed = seed + static_cast<std::uint64_t>(i);
        KnapsackInstance inst = generate_instance(spec);
        if (with_opt) {
            try {
                inst.optimal_value = dp_optimal(inst).value;
            } catch (const std::invalid_argument&) {
                if (inst.size() <= 25)
                    inst.optimal_value = brute_force_optimal(inst).value;
                else
                    throw std::runtime_error(
                        "--with-opt: instance too large for the exact "
                        "oracles (n=" + std::to_string(n) + ")");
            }
        }
        fs::path out = fs::path(out_dir) / (inst.name + ".txt");
        save_instance(inst, out.string());
        std::cout << out.string() << "\n";
    }
    return 0;
}

struct ToyOptions {
    std::string scenario;
    std::string lambdas = "0.01,0.03,0.1";
    std::vector<double> start;
    double lr = 0.1;
    double mu = -1.0;  // scenario default
    double beta_v = -1.0;
    double beta_w = -1.0;
    int steps = 0;     // scenario default
    std::string out_dir = ".";
};

void write_toy_csv(const fs::path& path, const std::vector<TrajectoryRow>& rows) {
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open " + path.string());
    write_trajectory_csv(rows, f);
    std::cout << path.string() << " (final v="
              << format_double(rows.back().v) << ")\n";
}

int cmd_toy2d(const ToyOptions& to) {
    fs::create_directories(to.out_dir);
    auto pick = [](double v, double fallback) { return v < 0 ? fallback : v; };

    if (to.scenario == "lambda-sweep") {
        double x0 = to.start.empty() ? 0.5 : to.start[0];
        double y0 = to.start.empty() ? 0.5 : to.start[1];
        std::stringstream ss(to.lambdas);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            OptimizerConfig cfg;
            cfg.lambda = std::stod(tok);
            cfg.mu = pick(to.mu, 0.5);
            cfg.beta_v = pick(to.beta_v, 0.5);
            cfg.beta_w = pick(to.beta_w, 0.5);
            auto rows = run_trajectory(x0, y0, unit_circle_problem(),
                                       GammaMode::conga, cfg,
                                       to.steps > 0 ? to.steps : 2000);
            write_toy_csv(fs::path(to.out_dir) /
                              ("lambda-sweep_l" + format_double(cfg.lambda) +
                               ".csv"),
                          rows);
        }
        return 0;
    }
    if (to.scenario == "forbidden-start") {
        double x0 = to.start.empty() ? 2.5 : to.start[0];
        double y0 = to.start.empty() ? 2.5 : to.start[1];
        OptimizerConfig cfg;
        cfg.lambda = to.lr;
        cfg.mu = pick(to.mu, 0.9);
        cfg.beta_v = pick(to.beta_v, 0.5);
        cfg.beta_w = pick(to.beta_w, 0.5);
        auto rows = run_trajectory(x0, y0, unit_circle_problem(),
                                   GammaMode::conga, cfg,
                                   to.steps > 0 ? to.steps : 2000);
        write_toy_csv(fs::path(to.out_dir) / "forbidden-start.csv", rows);
        return 0;
    }
    if (to.scenario == "ema") {
        // The fixed two-disc crossing scenario: only beta-w is meant to
        // vary; 0.9 crosses the gap, 0 parks on the first circle.
        double x0 = to.start.empty() ? 0.8 : to.start[0];
        double y0 = to.start.empty() ? 0.8 : to.start[1];
        OptimizerConfig cfg;
        cfg.lambda = to.lr == 0.1 ? 0.2 : to.lr;
        cfg.mu = pick(to.mu, 0.5);
        cfg.beta_v = pick(to.beta_v, 0.9);
        cfg.beta_w = pick(to.beta_w, 0.9);
        auto rows = run_trajectory(x0, y0, two_circle_problem(),
                                   GammaMode::conga, cfg,
                                   to.steps > 0 ? to.steps : 4000);
        write_toy_csv(fs::path(to.out_dir) /
                          ("ema_bw" + format_double(cfg.beta_w) + ".csv"),
                      rows);
        return 0;
    }
    if (to.scenario == "aga-vs-conga") {
        double x0 = to.start.empty() ? 2.5 : to.start[0];
        double y0 = to.start.empty() ? 2.5 : to.start[1];
        for (GammaMode mode : {GammaMode::aga, GammaMode::conga}) {
            OptimizerConfig cfg;
            cfg.lambda = to.lr;
            cfg.mu = pick(to.mu, 0.5);
            cfg.beta_v = pick(to.beta_v, 0.5);
            cfg.beta_w = pick(to.beta_w, 0.5);
            auto rows = run_trajectory(x0, y0, unit_circle_problem(), mode,
                                       cfg, to.steps > 0 ? to.steps : 2000);
            write_toy_csv(fs::path(to.out_dir) /
                              (std::string("aga-vs-conga_") +
                               (mode == GammaMode::aga ? "aga" : "conga") +
                               ".csv"),
                          rows);
        }
        return 0;
    }
    throw std::invalid_argument("unknown scenario: " + to.scenario);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constrained 0-1 knapsack optimization toolkit\n"
                 "(solver flags listed here apply to solve and bench)"};
    app.require_subcommand(1);

    SolverOptions so;
    CLI::Option* mu2_opt = add_solver_flags(&app, so);
    app.set_config("--config", "", "key=value options file");
    int rc = 0;

    auto* solve_cmd =
        app.add_subcommand("solve", "solve a single instance file");
    solve_cmd->fallthrough();
    std::string solve_path, solve_algo = "conga", solve_report;
    solve_cmd->add_option("instance", solve_path, "instance file")->required();
    solve_cmd->add_option("--algorithm", solve_algo, "solver to run")
        ->check(CLI::IsMember(kAlgorithms))
        ->capture_default_str();
    solve_cmd->add_option("--report", solve_report,
                          "append a JSONL benchmark record here");
    solve_cmd->callback([&]() {
        so.mu2_explicit = mu2_opt->count() > 0;
        rc = cmd_solve(solve_path, so, solve_algo, solve_report);
    });

    auto* bench_cmd =
        app.add_subcommand("bench", "run algorithms over an instance directory");
    bench_cmd->fallthrough();
    std::string bench_dir, bench_algos = "conga", bench_csv, bench_jsonl,
                bench_mu_hist;
    bool bench_zero_times = false;
    bench_cmd->add_option("dir", bench_dir, "directory of .txt instances")
        ->required();
    bench_cmd->add_option("--algorithms", bench_algos,
                          "comma-separated: conga,greedy,sa,ga,bb,dp")
        ->capture_default_str();
    bench_cmd->add_option("--out-csv", bench_csv, "write records CSV here");
    bench_cmd->add_option("--out-jsonl", bench_jsonl,
                          "write records JSONL here");
    bench_cmd->add_option("--mu-hist", bench_mu_hist,
                          "write the per-task best-mu histogram CSV here");
    bench_cmd->add_flag("--zero-times", bench_zero_times,
                        "report time_s=0 for byte-stable output");
    bench_cmd->callback([&]() {
        so.mu2_explicit = mu2_opt->count() > 0;
        rc = cmd_bench(bench_dir, so, bench_algos, bench_csv, bench_jsonl,
                       bench_mu_hist, bench_zero_times);
    });

    auto* gen_cmd = app.add_subcommand("gen", "generate instance files");
    std::string gen_class, gen_out_dir = ".";
    int gen_n = 10, gen_count = 1, gen_range = 1000;
    double gen_ratio = 0.75;
    std::uint64_t gen_seed = 0;
    bool gen_with_opt = false;
    gen_cmd->add_option("--class", gen_class,
                        "dataset class: ld-uc, hd-uc, hd-wc, hd-sc")
        ->required();
    gen_cmd->add_option("--n", gen_n, "items per instance")
        ->capture_default_str();
    gen_cmd->add_option("--count", gen_count, "number of instances")
        ->capture_default_str();
    gen_cmd->add_option("--r", gen_range, "coefficient range R")
        ->capture_default_str();
    gen_cmd->add_option("--capacity-ratio", gen_ratio,
                        "capacity as a fraction of total weight")
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen_seed, "base seed (instance i uses seed+i)")
        ->capture_default_str();
    gen_cmd->add_option("--out-dir", gen_out_dir, "output directory")
        ->capture_default_str();
    gen_cmd->add_flag("--with-opt", gen_with_opt,
                      "attach the exact optimum as an 'opt' trailer");
    gen_cmd->callback([&]() {
        rc = cmd_gen(gen_class, gen_n, gen_count, gen_range, gen_ratio,
                     gen_seed, gen_out_dir, gen_with_opt);
    });

    auto* toy_cmd =
        app.add_subcommand("toy2d", "2-d continuous diagnostic scenarios");
    ToyOptions to;
    toy_cmd->add_option("--scenario", to.scenario,
                        "lambda-sweep, forbidden-start, ema, aga-vs-conga")
        ->required();
    toy_cmd->add_option("--lambdas", to.lambdas,
                        "comma-separated learning rates (lambda-sweep)")
        ->capture_default_str();
    toy_cmd->add_option("--start", to.start, "start point x,y")
        ->delimiter(',')
        ->expected(2);
    toy_cmd->add_option("--lr", to.lr, "learning rate lambda")
        ->capture_default_str();
    toy_cmd->add_option("--mu", to.mu, "target violation reduction (scenario default)");
    toy_cmd->add_option("--beta-v", to.beta_v, "EMA factor for grad v (scenario default)");
    toy_cmd->add_option("--beta-w", to.beta_w, "EMA factor for grad w (scenario default)");
    toy_cmd->add_option("--steps", to.steps, "steps (0 = scenario default)")
        ->capture_default_str();
    toy_cmd->add_option("--out-dir", to.out_dir, "output directory")
        ->capture_default_str();
    toy_cmd->callback([&]() { rc = cmd_toy2d(to); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
