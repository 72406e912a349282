#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "natural.hpp"
#include "opcount.hpp"
#include "strategy.hpp"
#include "weierstrass.hpp"

namespace nkecc {

enum class Sampler { Uniform, NearBase };

// Sweep configuration. Operand pairs are drawn per (digit length, trial)
// from a generator seeded with `seed`, so counts are reproducible run to
// run; wall times are not. The near-base sampler draws operands within
// `nearbase_distance` of radix^(L-1) and requires the distance to stay below
// that base for every swept length.
struct BenchConfig {
    std::uint32_t radix = 10;
    std::size_t min_len = 1;
    std::size_t max_len = 8;
    std::size_t step = 1;
    std::size_t trials = 10;
    Sampler sampler = Sampler::Uniform;
    std::uint64_t nearbase_distance = 9;
    std::uint64_t seed = 42;
    std::vector<StrategyKind> strategies = {
        StrategyKind::Schoolbook, StrategyKind::Karatsuba, StrategyKind::Nikhilam};
    std::size_t karatsuba_threshold = 2;
    std::size_t nikhilam_threshold = 2;
    StrategyKind nikhilam_fallback = StrategyKind::Schoolbook;

    void validate() const;
    StrategySpec spec_for(StrategyKind kind) const;
};

struct BenchRecord {
    StrategyKind strategy;
    std::uint32_t radix;
    std::size_t digit_len;
    std::size_t trial;
    OpCount count;
    std::uint64_t ns;
};

// Renders and checks the three worked multiplication tables (107*109 in
// base 10; 11*11 and 101*110 in base 2), including the expected products
// and primitive-multiplication counts. Throws with a diagnostic if any
// check fails.
std::string repro_tables();

// Runs the sweep; every product is checked against long multiplication
// before its record is emitted.
std::vector<BenchRecord> run_sweep(const BenchConfig& cfg);

// CSV with header strategy,radix,digit_len,trial,mul1,addsub,shifts,ns.
std::string bench_csv(std::span<const BenchRecord> records);

// Per-strategy, per-size mean counts and times, seed in the header.
std::string bench_table(std::span<const BenchRecord> records, const BenchConfig& cfg);

struct CrossoverReport {
    std::string text;
    std::string json;
};

// For each ordered strategy pair, the smallest swept size at which one
// strategy's mean mul1 (and separately mean wall time) beats the other's.
// Requires at least three sizes in the sweep.
CrossoverReport crossover(const BenchConfig& cfg);

// Scalar-multiplication cost comparison: runs n*P once per strategy,
// asserts the resulting points agree, and reports per-strategy totals.
std::string ecc_count_report(const CurveParams& curve, const Point& P,
                             const Natural& n, const BenchConfig& cfg,
                             std::string* json_out = nullptr);

} // namespace nkecc
