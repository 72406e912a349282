#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "benchkit.hpp"
#include "json.hpp"

using namespace nkecc;
using nlohmann::json;

namespace {

Natural nat(std::uint64_t v) { return Natural::from_u64(v, 10); }

BenchConfig base_config() {
    BenchConfig cfg;
    cfg.radix = 10;
    cfg.min_len = 1;
    cfg.max_len = 4;
    cfg.step = 1;
    cfg.trials = 5;
    cfg.seed = 99;
    return cfg;
}

} // namespace

TEST_CASE("repro tables render and self-check") {
    const std::string report = repro_tables();
    CHECK(report.find("11663") != std::string::npos);
    CHECK(report.find("1001") != std::string::npos);
    CHECK(report.find("11110") != std::string::npos);
    CHECK(report.find("(100-107)= -7") != std::string::npos);
    CHECK(report.find("nikhilam mul1=1") != std::string::npos);
    CHECK(report.find("nikhilam mul1=2") != std::string::npos);
    CHECK(report.find("schoolbook mul1=9") != std::string::npos);
}

TEST_CASE("sweep is deterministic for a fixed seed") {
    const BenchConfig cfg = base_config();
    const auto a = run_sweep(cfg);
    const auto b = run_sweep(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].strategy == b[i].strategy);
        CHECK(a[i].digit_len == b[i].digit_len);
        CHECK(a[i].trial == b[i].trial);
        CHECK(a[i].count == b[i].count); // ns may differ
    }
}

TEST_CASE("sweep covers sizes x trials x strategies") {
    const BenchConfig cfg = base_config();
    const auto records = run_sweep(cfg);
    CHECK(records.size() == 4 * 5 * 3);
}

TEST_CASE("single-digit operands cost one multiplication everywhere") {
    BenchConfig cfg = base_config();
    cfg.min_len = cfg.max_len = 1;
    cfg.trials = 1;
    for (const auto& r : run_sweep(cfg)) CHECK(r.count.mul1 == 1);
}

TEST_CASE("near-base sweep keeps nikhilam under schoolbook's count") {
    BenchConfig cfg = base_config();
    cfg.sampler = Sampler::NearBase;
    cfg.nearbase_distance = 9;
    cfg.min_len = cfg.max_len = 3;
    cfg.trials = 50;
    for (const auto& r : run_sweep(cfg)) {
        if (r.strategy == StrategyKind::Nikhilam) CHECK(r.count.mul1 < 9);
    }
}

TEST_CASE("config validation") {
    BenchConfig cfg = base_config();
    cfg.min_len = 5;
    cfg.max_len = 4;
    CHECK_THROWS_AS(run_sweep(cfg), Error);

    cfg = base_config();
    cfg.trials = 0;
    CHECK_THROWS_AS(run_sweep(cfg), Error);

    cfg = base_config();
    cfg.sampler = Sampler::NearBase;
    cfg.nearbase_distance = 10; // not below 10^(min_len-1) = 1
    CHECK_THROWS_AS(run_sweep(cfg), Error);

    cfg = base_config();
    cfg.strategies.clear();
    CHECK_THROWS_AS(run_sweep(cfg), Error);
}

TEST_CASE("csv format") {
    BenchConfig cfg = base_config();
    cfg.max_len = 2;
    cfg.trials = 1;
    const auto records = run_sweep(cfg);
    const std::string csv = bench_csv(records);
    CHECK(csv.rfind("strategy,radix,digit_len,trial,mul1,addsub,shifts,ns\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 3);
    CHECK(csv.find("schoolbook,10,1,0,1,") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("table header carries the seed") {
    BenchConfig cfg = base_config();
    cfg.max_len = 2;
    const auto records = run_sweep(cfg);
    CHECK(bench_table(records, cfg).find("seed=99") != std::string::npos);
}

TEST_CASE("crossover requires three sizes") {
    BenchConfig cfg = base_config();
    cfg.min_len = cfg.max_len = 4;
    CHECK_THROWS_AS(crossover(cfg), Error);
}

TEST_CASE("near-base crossover favors nikhilam by the third size") {
    BenchConfig cfg = base_config();
    cfg.sampler = Sampler::NearBase;
    cfg.nearbase_distance = 9;
    cfg.min_len = 2;
    cfg.max_len = 5;
    cfg.trials = 10;
    const CrossoverReport report = crossover(cfg);
    const json j = json::parse(report.json);
    bool found = false;
    for (const auto& entry : j["crossovers"]) {
        if (entry["metric"] == "mul1" && entry["strategy"] == "nikhilam" &&
            entry["baseline"] == "schoolbook") {
            REQUIRE_FALSE(entry["size"].is_null());
            CHECK(entry["size"].get<std::size_t>() <= 3);
            found = true;
        }
    }
    CHECK(found);
    CHECK(report.text.find("nikhilam beats schoolbook") != std::string::npos);
}

TEST_CASE("binary karatsuba-vs-schoolbook crossover exists in range") {
    BenchConfig cfg = base_config();
    cfg.radix = 2;
    cfg.min_len = 2;
    cfg.max_len = 512;
    cfg.step = 255; // sizes 2, 257, 512
    cfg.trials = 3;
    const json j = json::parse(crossover(cfg).json);
    bool found = false;
    for (const auto& entry : j["crossovers"]) {
        if (entry["metric"] == "mul1" && entry["strategy"] == "karatsuba" &&
            entry["baseline"] == "schoolbook") {
            CHECK_FALSE(entry["size"].is_null());
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("scalar-mult cost report on the small curve") {
    const CurveParams c(nat(17), nat(2), nat(2));
    const Point P = Point::affine(fe_new(nat(5), c.p), fe_new(nat(1), c.p));
    const BenchConfig cfg = base_config();

    std::string j_text;
    const std::string report = ecc_count_report(c, P, nat(100), cfg, &j_text);
    const json j = json::parse(j_text);
    CHECK(j["strategies"].size() == 3);
    for (const auto& row : j["strategies"]) {
        CHECK(row["doublings"] == 7);
        CHECK(row["additions"] == 3);
        CHECK(row["mul1"].get<std::uint64_t>() > 0);
    }
    CHECK(report.find("schoolbook") != std::string::npos);
    CHECK(report.find("nikhilam") != std::string::npos);

    // zero scalar: infinity, no field multiplications
    std::string j0_text;
    ecc_count_report(c, P, Natural::zero(10), cfg, &j0_text);
    const json j0 = json::parse(j0_text);
    CHECK(j0["result"] == "inf");
    for (const auto& row : j0["strategies"])
        CHECK(row["mul1"].get<std::uint64_t>() == 0);

    // off-curve point is rejected
    const Point bad = Point::affine(fe_new(nat(5), c.p), fe_new(nat(2), c.p));
    CHECK_THROWS_AS(ecc_count_report(c, bad, nat(5), cfg, nullptr), Error);
}

TEST_CASE("192-bit curve: strategies agree on the scalar multiple") {
    // NIST P-192 parameters, entered in hex and checked on-curve below.
    const Natural p = Natural::from_text(
        "6277101735386680763835789423207666416083908700390324961279", 10);
    const Natural a = Natural::from_text(
        "6277101735386680763835789423207666416083908700390324961276", 10);
    const Natural b = parse_prefixed(
        "0x64210519e59c80e70fa7e9ab72243049feb8deecc146b9b1", 0);
    const CurveParams c(p, a, b);

    const Natural gx = parse_prefixed(
        "0x188da80eb03090f67cbf20eb43a18800f4ff0afd82ff1012", 0);
    const Natural gy = parse_prefixed(
        "0x07192b95ffc8da78631011ed6b24cdd573f977a11e794811", 0);
    const Point G = Point::affine(fe_new(gx, p), fe_new(gy, p));
    REQUIRE(is_on_curve(G, c));

    const Natural n = parse_prefixed(
        "0x1b2c3d4e5f60718293a4b5c6d7e8f9010203040506070809", 0);
    BenchConfig cfg = base_config();
    std::string j_text;
    ecc_count_report(c, G, n, cfg, &j_text); // throws if strategies disagree
    const json j = json::parse(j_text);
    CHECK(j["strategies"].size() == 3);
    CHECK(j["result"] != "inf");
}
