#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "conga/knapsack.hpp"

namespace conga {

// Plain-text instance format:
//   line 1: "n capacity"            (or "n" alone with capacity on line 2)
//   then n lines "value weight"
//   optional trailer "opt V" with the known optimal value
// Parse errors throw std::runtime_error naming the offending line.
KnapsackInstance parse_instance(std::istream& in, const std::string& name = "");
KnapsackInstance load_instance(const std::string& path);
void serialize_instance(const KnapsackInstance& inst, std::ostream& out);
void save_instance(const KnapsackInstance& inst, const std::string& path);

// Dataset classes: low-dimensional / high-dimensional, with uncorrelated,
// weakly correlated or strongly correlated value-weight pairs.
enum class DatasetClass { ld_uc, hd_uc, hd_wc, hd_sc };
DatasetClass dataset_class_from_string(const std::string& s);
std::string to_string(DatasetClass cls);

struct DatasetSpec {
    std::string name;  // defaults to "<class>_<n>_<R>_<seed>"
    DatasetClass cls = DatasetClass::ld_uc;
    int n_items = 10;
    int coefficient_range = 1000;  // R: weights drawn from [1, R]
    double capacity_ratio = 0.75;  // capacity = round(ratio * total weight)
    std::uint64_t seed = 0;
};

// Deterministic instance synthesis. Same spec in, same instance out.
//   uc: value ~ U[1, R] independent of weight
//   wc: value = clamp(weight + U[-R/10, R/10], >= 1)
//   sc: value = weight + R/10
KnapsackInstance generate_instance(const DatasetSpec& spec);

// One benchmark measurement; shortfall = optimal_value - best_value.
struct BenchRecord {
    std::string algorithm;
    std::string dataset;
    int items = 0;
    double best_value = 0.0;
    double optimal_value = 0.0;
    double shortfall = 0.0;
    double time_s = 0.0;
};

struct Metrics {
    double acc;          // fraction of records whose shortfall is ~zero
    double mean_time_s;
};
Metrics compute_metrics(const std::vector<BenchRecord>& records);

// best matches optimal up to a 1e-6 relative tolerance.
bool reached_optimum(double best_value, double optimal_value);

void write_records_csv(const std::vector<BenchRecord>& records,
                       std::ostream& out);
std::vector<BenchRecord> read_records_csv(std::istream& in);
void write_records_jsonl(const std::vector<BenchRecord>& records,
                         std::ostream& out);
std::vector<BenchRecord> read_records_jsonl(std::istream& in);

// One row of a 2-d optimizer trace.
struct TrajectoryRow {
    int step = 0;
    double x = 0.0, y = 0.0;
    double v = 0.0, w = 0.0;
    double gamma = 0.0;
    int case_id = 0;  // 0 = feasible, otherwise the gamma-rule case
};
void write_trajectory_csv(const std::vector<TrajectoryRow>& rows,
                          std::ostream& out);

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double x);

}  // namespace conga
