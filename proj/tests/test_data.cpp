#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "conga/data.hpp"

using namespace conga;

TEST_CASE("parse_instance canonical format with trailer") {
    std::istringstream in("3 50\n60 10\n100 20\n120 30\nopt 220\n");
    auto inst = parse_instance(in, "classic");
    CHECK(inst.size() == 3);
    CHECK(inst.capacity == 50.0);
    CHECK(inst.values == std::vector<double>{60.0, 100.0, 120.0});
    CHECK(inst.weights == std::vector<double>{10.0, 20.0, 30.0});
    REQUIRE(inst.optimal_value.has_value());
    CHECK(*inst.optimal_value == 220.0);
    CHECK(inst.name == "classic");
}

TEST_CASE("parse_instance single item, no trailer") {
    std::istringstream in("1 5\n7 5\n");
    auto inst = parse_instance(in);
    CHECK(inst.size() == 1);
    CHECK_FALSE(inst.optimal_value.has_value());
}

TEST_CASE("parse_instance two-line header variant") {
    std::istringstream in("2\n10\n6 3\n5 4\n");
    auto inst = parse_instance(in);
    CHECK(inst.size() == 2);
    CHECK(inst.capacity == 10.0);
    CHECK(inst.weights == std::vector<double>{3.0, 4.0});
}

TEST_CASE("parse_instance tolerates CRLF and blank trailing lines") {
    std::istringstream in("2 10\r\n6 3\r\n5 4\r\n\r\nopt 11\r\n\r\n");
    auto inst = parse_instance(in);
    CHECK(inst.capacity == 10.0);
    CHECK(*inst.optimal_value == 11.0);
}

TEST_CASE("parse_instance reports the offending line") {
    std::istringstream bad_weight("2 10\n5 0\n3 4\n");
    try {
        (void)parse_instance(bad_weight);
        FAIL("expected parse error");
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("non-positive weight") != std::string::npos);
        CHECK(msg.find("line 2") != std::string::npos);
    }

    std::istringstream truncated("3 50\n60 10\n");
    CHECK_THROWS_AS((void)parse_instance(truncated), std::runtime_error);
    std::istringstream garbage_trailer("1 5\n7 5\nbogus\n");
    CHECK_THROWS_AS((void)parse_instance(garbage_trailer), std::runtime_error);
    std::istringstream bad_header("x 50\n");
    CHECK_THROWS_AS((void)parse_instance(bad_header), std::runtime_error);
    std::istringstream neg_cap("1 -4\n7 5\n");
    CHECK_THROWS_AS((void)parse_instance(neg_cap), std::runtime_error);
    std::istringstream empty("");
    CHECK_THROWS_AS((void)parse_instance(empty), std::runtime_error);
}

TEST_CASE("serialize then parse is the identity") {
    SplitMix64 rng(5);
    for (int rep = 0; rep < 25; ++rep) {
        DatasetSpec spec;
        spec.cls = DatasetClass::ld_uc;
        spec.n_items = 4 + static_cast<int>(rng.next_below(17));
        spec.coefficient_range = 1000;
        spec.seed = rng.next_u64();
        auto inst = generate_instance(spec);
        if (rep % 2 == 0)
            inst.optimal_value = 123.5 + rep;
        std::ostringstream out;
        serialize_instance(inst, out);
        std::istringstream in(out.str());
        auto back = parse_instance(in, inst.name);
        CHECK(back.values == inst.values);
        CHECK(back.weights == inst.weights);
        CHECK(back.capacity == inst.capacity);
        CHECK(back.optimal_value == inst.optimal_value);
    }
}

TEST_CASE("generate_instance class formulas") {
    DatasetSpec spec;
    spec.cls = DatasetClass::hd_sc;
    spec.n_items = 100;
    spec.coefficient_range = 1000;
    spec.seed = 1;
    auto sc = generate_instance(spec);
    double total = 0.0;
    for (std::size_t i = 0; i < sc.size(); ++i) {
        CHECK(sc.values[i] == sc.weights[i] + 100.0);
        CHECK(sc.weights[i] >= 1.0);
        CHECK(sc.weights[i] <= 1000.0);
        total += sc.weights[i];
    }
    CHECK(sc.capacity == std::round(0.75 * total));
    CHECK(sc.name == "hd-sc_100_1000_1");

    spec.cls = DatasetClass::hd_wc;
    auto wc = generate_instance(spec);
    for (std::size_t i = 0; i < wc.size(); ++i) {
        CHECK(std::abs(wc.values[i] - wc.weights[i]) <= 100.0);
        CHECK(wc.values[i] >= 1.0);
    }

    spec.cls = DatasetClass::hd_uc;
    auto uc = generate_instance(spec);
    for (double v : uc.values) {
        CHECK(v >= 1.0);
        CHECK(v <= 1000.0);
    }
}

TEST_CASE("generate_instance is deterministic and validates the spec") {
    DatasetSpec spec;
    spec.cls = DatasetClass::ld_uc;
    spec.n_items = 10;
    spec.seed = 42;
    auto a = generate_instance(spec);
    auto b = generate_instance(spec);
    CHECK(a.values == b.values);
    CHECK(a.weights == b.weights);
    CHECK(a.capacity == b.capacity);

    spec.seed = 43;
    auto c = generate_instance(spec);
    CHECK(a.values != c.values);

    spec.n_items = 50;  // outside LD range
    CHECK_THROWS_AS((void)generate_instance(spec), std::invalid_argument);
    spec.n_items = 10;
    spec.capacity_ratio = 1.5;
    CHECK_THROWS_AS((void)generate_instance(spec), std::invalid_argument);
}

TEST_CASE("dataset class names round-trip") {
    for (auto cls : {DatasetClass::ld_uc, DatasetClass::hd_uc,
                     DatasetClass::hd_wc, DatasetClass::hd_sc})
        CHECK(dataset_class_from_string(to_string(cls)) == cls);
    CHECK_THROWS_AS((void)dataset_class_from_string("hd-xx"),
                    std::invalid_argument);
}

TEST_CASE("compute_metrics") {
    std::vector<BenchRecord> records;
    for (int i = 0; i < 31; ++i) {
        BenchRecord r;
        r.algorithm = "conga";
        r.dataset = "t" + std::to_string(i);
        r.items = 10;
        r.optimal_value = 100.0;
        r.best_value = i < 15 ? 100.0 : 90.0;
        r.shortfall = r.optimal_value - r.best_value;
        r.time_s = 2.0;
        records.push_back(r);
    }
    Metrics m = compute_metrics(records);
    CHECK(m.acc == doctest::Approx(15.0 / 31.0).epsilon(1e-12));
    CHECK(m.acc == doctest::Approx(0.483870967741935484).epsilon(1e-12));
    CHECK(m.mean_time_s == doctest::Approx(2.0));

    // Order-invariant.
    std::vector<BenchRecord> reversed(records.rbegin(), records.rend());
    CHECK(compute_metrics(reversed).acc == doctest::Approx(m.acc));

    records[0].time_s = 1.0;
    records[1].time_s = 2.0;
    records[2].time_s = 3.0;
    Metrics m3 = compute_metrics({records.begin(), records.begin() + 3});
    CHECK(m3.mean_time_s == doctest::Approx(2.0));
    CHECK(m3.acc == 1.0);

    CHECK_THROWS_AS((void)compute_metrics({}), std::invalid_argument);
}

TEST_CASE("reached_optimum tolerance") {
    CHECK(reached_optimum(481.07, 481.07));
    CHECK(reached_optimum(481.0699999, 481.07));
    CHECK_FALSE(reached_optimum(481.0, 481.07));
    CHECK(reached_optimum(0.0, 0.0));
}

TEST_CASE("records CSV round-trip with exact header") {
    std::vector<BenchRecord> records;
    BenchRecord r;
    r.algorithm = "conga";
    r.dataset = "f5_15_375";
    r.items = 15;
    r.best_value = 481.07;
    r.optimal_value = 481.07;
    r.shortfall = 0.0;
    r.time_s = 0.125;
    records.push_back(r);
    r.algorithm = "greedy";
    r.best_value = 442.5;
    r.shortfall = 38.57;
    r.time_s = 0.0001;
    records.push_back(r);

    std::ostringstream out;
    write_records_csv(records, out);
    std::string text = out.str();
    CHECK(text.rfind("algorithm,dataset,items,best_value,optimal_value,"
                     "shortfall,time_s\n",
                     0) == 0);

    std::istringstream in(text);
    auto back = read_records_csv(in);
    REQUIRE(back.size() == 2);
    CHECK(back[0].algorithm == "conga");
    CHECK(back[0].best_value == 481.07);
    CHECK(back[1].shortfall == 38.57);
    CHECK(back[1].time_s == 0.0001);

    std::istringstream bad("wrong,header\n");
    CHECK_THROWS_AS((void)read_records_csv(bad), std::runtime_error);
}

TEST_CASE("records JSONL round-trip and schema check") {
    std::vector<BenchRecord> records;
    BenchRecord r;
    r.algorithm = "sa";
    r.dataset = "hd-uc_100_1000_1";
    r.items = 100;
    r.best_value = 40675.0;
    r.optimal_value = 40675.0;
    r.shortfall = 0.0;
    r.time_s = 1.5;
    records.push_back(r);

    std::ostringstream out;
    write_records_jsonl(records, out);
    std::string line = out.str();
    CHECK(line.find("\"algorithm\":\"sa\"") != std::string::npos);
    // Keys appear in schema order.
    CHECK(line.find("\"algorithm\"") < line.find("\"dataset\""));
    CHECK(line.find("\"dataset\"") < line.find("\"items\""));

    std::istringstream in(line);
    auto back = read_records_jsonl(in);
    REQUIRE(back.size() == 1);
    CHECK(back[0].algorithm == "sa");
    CHECK(back[0].best_value == 40675.0);

    std::istringstream missing(R"({"algorithm":"sa","dataset":"d"})");
    CHECK_THROWS_AS((void)read_records_jsonl(missing), std::runtime_error);
    std::istringstream extra(
        R"({"algorithm":"a","dataset":"d","items":1,"best_value":1,"optimal_value":1,"shortfall":0,"time_s":0,"extra":1})");
    CHECK_THROWS_AS((void)read_records_jsonl(extra), std::runtime_error);
    std::istringstream junk("not json\n");
    CHECK_THROWS_AS((void)read_records_jsonl(junk), std::runtime_error);
}

TEST_CASE("trajectory CSV schema") {
    std::vector<TrajectoryRow> rows;
    rows.push_back({0, 0.5, 0.5, 0.5, -0.5, 0.0, 0});
    rows.push_back({1, 0.625, 0.625, 0.78125, -0.21875, 1.25, 3});
    std::ostringstream out;
    write_trajectory_csv(rows, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "step,x,y,v,w,gamma,case");
    std::getline(in, line);
    CHECK(line == "0,0.5,0.5,0.5,-0.5,0,0");
    std::getline(in, line);
    CHECK(line == "1,0.625,0.625,0.78125,-0.21875,1.25,3");
}

TEST_CASE("format_double round-trips") {
    for (double x : {0.0, 1.0, -2.5, 481.07, 0.1, 1e-9, 12345.6789}) {
        CHECK(std::stod(format_double(x)) == x);
    }
    CHECK(format_double(220.0) == "220");
    CHECK(format_double(0.1) == "0.1");
}
