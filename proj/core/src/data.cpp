#include "conga/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "conga/rng.hpp"

namespace conga {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw std::runtime_error("instance parse error: " + what + " on line " +
                             std::to_string(line_no));
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t)
        toks.push_back(t);
    return toks;
}

double parse_number(const std::string& tok, int line_no) {
    try {
        std::size_t pos = 0;
        double x = std::stod(tok, &pos);
        if (pos != tok.size() || !std::isfinite(x))
            parse_fail(line_no, "bad number '" + tok + "'");
        return x;
    } catch (const std::logic_error&) {
        parse_fail(line_no, "bad number '" + tok + "'");
    }
}

// Reads the next line, stripping a trailing CR; returns false at EOF.
bool next_line(std::istream& in, std::string& line, int& line_no) {
    if (!std::getline(in, line))
        return false;
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    ++line_no;
    return true;
}

}  // namespace

KnapsackInstance parse_instance(std::istream& in, const std::string& name) {
    KnapsackInstance inst;
    inst.name = name;
    std::string line;
    int line_no = 0;

    if (!next_line(in, line, line_no))
        parse_fail(1, "empty input");
    auto head = tokenize(line);
    double n_raw = 0.0;
    if (head.size() == 2) {
        n_raw = parse_number(head[0], line_no);
        inst.capacity = parse_number(head[1], line_no);
    } else if (head.size() == 1) {
        n_raw = parse_number(head[0], line_no);
        if (!next_line(in, line, line_no))
            parse_fail(line_no + 1, "missing capacity");
        auto cap_toks = tokenize(line);
        if (cap_toks.size() != 1)
            parse_fail(line_no, "expected capacity alone");
        inst.capacity = parse_number(cap_toks[0], line_no);
    } else {
        parse_fail(line_no, "expected 'n capacity'");
    }
    if (n_raw < 1.0 || n_raw != std::floor(n_raw))
        parse_fail(1, "bad item count");
    if (inst.capacity <= 0.0)
        parse_fail(line_no, "non-positive capacity");

    const std::size_t n = static_cast<std::size_t>(n_raw);
    inst.values.reserve(n);
    inst.weights.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_line(in, line, line_no))
            parse_fail(line_no + 1, "missing item");
        auto toks = tokenize(line);
        if (toks.size() != 2)
            parse_fail(line_no, "expected 'value weight'");
        double v = parse_number(toks[0], line_no);
        double w = parse_number(toks[1], line_no);
        if (v <= 0.0)
            parse_fail(line_no, "non-positive value");
        if (w <= 0.0)
            parse_fail(line_no, "non-positive weight");
        inst.values.push_back(v);
        inst.weights.push_back(w);
    }

    while (next_line(in, line, line_no)) {
        auto toks = tokenize(line);
        if (toks.empty())
            continue;
        if (toks[0] == "opt" && toks.size() == 2 && !inst.optimal_value) {
            inst.optimal_value = parse_number(toks[1], line_no);
        } else {
            parse_fail(line_no, "unexpected trailing content");
        }
    }
    return inst;
}

KnapsackInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open instance file: " + path);
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (name.size() > 4 && name.ends_with(".txt"))
        name = name.substr(0, name.size() - 4);
    return parse_instance(in, name);
}

void serialize_instance(const KnapsackInstance& inst, std::ostream& out) {
    out << inst.size() << ' ' << format_double(inst.capacity) << '\n';
    for (std::size_t i = 0; i < inst.size(); ++i)
        out << format_double(inst.values[i]) << ' '
            << format_double(inst.weights[i]) << '\n';
    if (inst.optimal_value)
        out << "opt " << format_double(*inst.optimal_value) << '\n';
}

void save_instance(const KnapsackInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write instance file: " + path);
    serialize_instance(inst, out);
}

DatasetClass dataset_class_from_string(const std::string& s) {
    if (s == "ld-uc")
        return DatasetClass::ld_uc;
    if (s == "hd-uc")
        return DatasetClass::hd_uc;
    if (s == "hd-wc")
        return DatasetClass::hd_wc;
    if (s == "hd-sc")
        return DatasetClass::hd_sc;
    throw std::invalid_argument("unknown dataset class: " + s);
}

std::string to_string(DatasetClass cls) {
    switch (cls) {
    case DatasetClass::ld_uc: return "ld-uc";
    case DatasetClass::hd_uc: return "hd-uc";
    case DatasetClass::hd_wc: return "hd-wc";
    case DatasetClass::hd_sc: return "hd-sc";
    }
    return "?";
}

KnapsackInstance generate_instance(const DatasetSpec& spec) {
    const bool low = spec.cls == DatasetClass::ld_uc;
    const int n_lo = low ? 4 : 100;
    const int n_hi = low ? 20 : 10000;
    if (spec.n_items < n_lo || spec.n_items > n_hi)
        throw std::invalid_argument("generate_instance: n_items out of range for " +
                                    to_string(spec.cls));
    if (spec.coefficient_range < 1)
        throw std::invalid_argument("generate_instance: coefficient_range < 1");
    if (spec.capacity_ratio <= 0.0 || spec.capacity_ratio >= 1.0)
        throw std::invalid_argument("generate_instance: capacity_ratio not in (0,1)");

    SplitMix64 rng(mix_seed({spec.seed, static_cast<std::uint64_t>(spec.cls),
                             static_cast<std::uint64_t>(spec.n_items)}));
    const double R = spec.coefficient_range;
    const double d = std::max(1.0, std::floor(R / 10.0));

    KnapsackInstance inst;
    inst.values.resize(spec.n_items);
    inst.weights.resize(spec.n_items);
    double total_weight = 0.0;
    for (int i = 0; i < spec.n_items; ++i) {
        double w = 1.0 + static_cast<double>(
                             rng.next_below(spec.coefficient_range));
        double v = 0.0;
        switch (spec.cls) {
        case DatasetClass::ld_uc:
        case DatasetClass::hd_uc:
            v = 1.0 + static_cast<double>(
                          rng.next_below(spec.coefficient_range));
            break;
        case DatasetClass::hd_wc:
            v = std::max(1.0, w + static_cast<double>(rng.next_below(
                                      2 * static_cast<std::uint64_t>(d) + 1)) -
                                  d);
            break;
        case DatasetClass::hd_sc:
            v = w + d;
            break;
        }
        inst.values[i] = v;
        inst.weights[i] = w;
        total_weight += w;
    }
    inst.capacity = std::round(spec.capacity_ratio * total_weight);
    inst.name = spec.name.empty()
                    ? to_string(spec.cls) + "_" + std::to_string(spec.n_items) +
                          "_" + std::to_string(spec.coefficient_range) + "_" +
                          std::to_string(spec.seed)
                    : spec.name;
    return inst;
}

bool reached_optimum(double best_value, double optimal_value) {
    return std::abs(optimal_value - best_value) <=
           1e-6 * std::max(1.0, std::abs(optimal_value));
}

Metrics compute_metrics(const std::vector<BenchRecord>& records) {
    if (records.empty())
        throw std::invalid_argument("compute_metrics: no records");
    std::size_t hits = 0;
    double time_total = 0.0;
    for (const auto& r : records) {
        if (reached_optimum(r.best_value, r.optimal_value))
            ++hits;
        time_total += r.time_s;
    }
    Metrics m;
    m.acc = static_cast<double>(hits) / records.size();
    m.mean_time_s = time_total / records.size();
    return m;
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

namespace {

constexpr const char* kRecordHeader =
    "algorithm,dataset,items,best_value,optimal_value,shortfall,time_s";

double parse_record_number(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        double x = std::stod(tok, &pos);
        if (pos != tok.size() || !std::isfinite(x))
            throw std::invalid_argument(tok);
        return x;
    } catch (const std::logic_error&) {
        throw std::runtime_error("records parse error: bad number '" + tok +
                                 "' on line " + std::to_string(line_no));
    }
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

void write_records_csv(const std::vector<BenchRecord>& records,
                       std::ostream& out) {
    out << kRecordHeader << '\n';
    for (const auto& r : records) {
        out << r.algorithm << ',' << r.dataset << ',' << r.items << ','
            << format_double(r.best_value) << ','
            << format_double(r.optimal_value) << ','
            << format_double(r.shortfall) << ',' << format_double(r.time_s)
            << '\n';
    }
}

std::vector<BenchRecord> read_records_csv(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_line(in, line, line_no) || line != kRecordHeader)
        throw std::runtime_error("records parse error: bad header");
    std::vector<BenchRecord> records;
    while (next_line(in, line, line_no)) {
        if (line.empty())
            continue;
        auto fields = split_csv(line);
        if (fields.size() != 7)
            throw std::runtime_error("records parse error: expected 7 fields on line " +
                                     std::to_string(line_no));
        BenchRecord r;
        r.algorithm = fields[0];
        r.dataset = fields[1];
        r.items = static_cast<int>(parse_record_number(fields[2], line_no));
        r.best_value = parse_record_number(fields[3], line_no);
        r.optimal_value = parse_record_number(fields[4], line_no);
        r.shortfall = parse_record_number(fields[5], line_no);
        r.time_s = parse_record_number(fields[6], line_no);
        records.push_back(std::move(r));
    }
    return records;
}

void write_records_jsonl(const std::vector<BenchRecord>& records,
                         std::ostream& out) {
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["algorithm"] = r.algorithm;
        j["dataset"] = r.dataset;
        j["items"] = r.items;
        j["best_value"] = r.best_value;
        j["optimal_value"] = r.optimal_value;
        j["shortfall"] = r.shortfall;
        j["time_s"] = r.time_s;
        out << j.dump() << '\n';
    }
}

std::vector<BenchRecord> read_records_jsonl(std::istream& in) {
    std::vector<BenchRecord> records;
    std::string line;
    int line_no = 0;
    while (next_line(in, line, line_no)) {
        if (line.empty())
            continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::runtime_error("records parse error: line " +
                                     std::to_string(line_no) + ": " + e.what());
        }
        const char* keys[] = {"algorithm", "dataset",   "items", "best_value",
                              "optimal_value", "shortfall", "time_s"};
        if (!j.is_object() || j.size() != 7)
            throw std::runtime_error("records parse error: schema mismatch on line " +
                                     std::to_string(line_no));
        for (const char* k : keys)
            if (!j.contains(k))
                throw std::runtime_error(
                    "records parse error: missing key '" + std::string(k) +
                    "' on line " + std::to_string(line_no));
        BenchRecord r;
        r.algorithm = j["algorithm"].get<std::string>();
        r.dataset = j["dataset"].get<std::string>();
        r.items = j["items"].get<int>();
        r.best_value = j["best_value"].get<double>();
        r.optimal_value = j["optimal_value"].get<double>();
        r.shortfall = j["shortfall"].get<double>();
        r.time_s = j["time_s"].get<double>();
        records.push_back(std::move(r));
    }
    return records;
}

void write_trajectory_csv(const std::vector<TrajectoryRow>& rows,
                          std::ostream& out) {
    out << "step,x,y,v,w,gamma,case\n";
    for (const auto& r : rows) {
        out << r.step << ',' << format_double(r.x) << ',' << format_double(r.y)
            << ',' << format_double(r.v) << ',' << format_double(r.w) << ','
            << format_double(r.gamma) << ',' << r.case_id << '\n';
    }
}

}  // namespace conga
