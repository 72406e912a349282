// Command-line frontend for the nkecc shared library. Talks to the library
// exclusively through the C interface in nkecc.h.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nkecc.h"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 computation error, 2 usage error.
struct ComputeError {
    std::string message;
};
struct UsageError {
    std::string message;
};

struct NatDeleter {
    void operator()(nkecc_nat* p) const { nkecc_nat_free(p); }
};
struct CurveDeleter {
    void operator()(nkecc_curve* p) const { nkecc_curve_free(p); }
};
struct PointDeleter {
    void operator()(nkecc_point* p) const { nkecc_point_free(p); }
};
struct StringDeleter {
    void operator()(char* p) const { nkecc_string_free(p); }
};
using NatPtr = std::unique_ptr<nkecc_nat, NatDeleter>;
using CurvePtr = std::unique_ptr<nkecc_curve, CurveDeleter>;
using PointPtr = std::unique_ptr<nkecc_point, PointDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Parse failures and configuration mistakes count as usage errors; anything
// else that the library rejects is a computation error.
void check(nkecc_status s) {
    if (s == NKECC_OK) return;
    std::string msg = std::string(nkecc_status_str(s)) + ": " + nkecc_last_error();
    if (s == NKECC_ERR_PARSE || s == NKECC_ERR_BAD_CONFIG || s == NKECC_ERR_BAD_ARG)
        throw UsageError{msg};
    throw ComputeError{msg};
}

NatPtr parse_nat(const std::string& text, uint32_t radix_override,
                 uint32_t* radix_out = nullptr) {
    nkecc_nat* n = nullptr;
    check(nkecc_nat_parse(text.c_str(), radix_override, &n, radix_out));
    return NatPtr(n);
}

std::string nat_text(const nkecc_nat* n) {
    char* s = nullptr;
    check(nkecc_nat_to_text(n, &s));
    StringPtr holder(s);
    return std::string(s);
}

std::string point_text(const nkecc_point* p) {
    char* s = nullptr;
    check(nkecc_point_format(p, &s));
    StringPtr holder(s);
    return std::string(s);
}

uint64_t now_ns() {
    return static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

json count_json(const nkecc_opcount& c) {
    return json{{"mul1", c.mul1}, {"addsub", c.addsub}, {"shifts", c.shifts}};
}

void print_count(const nkecc_opcount& c) {
    std::cout << "mul1=" << c.mul1 << "\n"
              << "addsub=" << c.addsub << "\n"
              << "shifts=" << c.shifts << "\n";
}

// Options shared by every command that multiplies.
struct StrategyOptions {
    std::string strategy = "schoolbook";
    uint32_t karatsuba_threshold = 2;
    uint32_t nikhilam_threshold = 2;
    std::string nikhilam_fallback = "schoolbook";

    void attach(CLI::App* cmd) {
        cmd->add_option("--strategy", strategy, "schoolbook, karatsuba or nikhilam")
            ->check(CLI::IsMember({"schoolbook", "karatsuba", "nikhilam"}));
        cmd->add_option("--karatsuba-threshold", karatsuba_threshold,
                        "operand length below which karatsuba uses schoolbook");
        cmd->add_option("--nikhilam-threshold", nikhilam_threshold,
                        "minimum sub-product length for nikhilam recursion");
        cmd->add_option("--nikhilam-fallback", nikhilam_fallback,
                        "strategy for non-recursing nikhilam sub-products")
            ->check(CLI::IsMember({"schoolbook", "karatsuba"}));
    }

    static nkecc_strategy kind_of(const std::string& name) {
        if (name == "karatsuba") return NKECC_STRATEGY_KARATSUBA;
        if (name == "nikhilam") return NKECC_STRATEGY_NIKHILAM;
        return NKECC_STRATEGY_SCHOOLBOOK;
    }

    nkecc_strategy_spec spec() const {
        nkecc_strategy_spec s;
        s.kind = kind_of(strategy);
        s.karatsuba_threshold = karatsuba_threshold;
        s.nikhilam_threshold = nikhilam_threshold;
        s.nikhilam_fallback = kind_of(nikhilam_fallback);
        return s;
    }
};

struct BenchOptions {
    uint32_t radix = 10;
    std::string sizes = "1:8:1";
    uint32_t trials = 10;
    std::string sampler = "uniform";
    uint64_t seed = 42;
    std::vector<std::string> strategies;

    void attach(CLI::App* cmd) {
        cmd->add_option("--radix", radix, "working radix")
            ->check(CLI::IsMember({2u, 10u}));
        cmd->add_option("--sizes", sizes, "digit-length sweep min:max:step");
        cmd->add_option("--trials", trials, "operand pairs per size");
        cmd->add_option("--sampler", sampler,
                        "operand sampler: uniform or nearbase:<distance>");
        cmd->add_option("--seed", seed, "random seed (printed in reports)");
        cmd->add_option("--strategy", strategies,
                        "strategy to include (repeatable; default all)")
            ->check(CLI::IsMember({"schoolbook", "karatsuba", "nikhilam"}));
    }

    nkecc_bench_config config(const StrategyOptions& strat) const {
        nkecc_bench_config cfg{};
        cfg.radix = radix;

        unsigned min = 0, max = 0, step = 1;
        if (std::sscanf(sizes.c_str(), "%u:%u:%u", &min, &max, &step) != 3 &&
            std::sscanf(sizes.c_str(), "%u:%u", &min, &max) != 2)
            throw UsageError{"--sizes expects min:max:step"};
        cfg.min_len = min;
        cfg.max_len = max;
        cfg.step = step;

        cfg.trials = trials;
        cfg.sampler = NKECC_SAMPLER_UNIFORM;
        cfg.nearbase_distance = 0;
        if (sampler.rfind("nearbase:", 0) == 0) {
            cfg.sampler = NKECC_SAMPLER_NEAR_BASE;
            try {
                cfg.nearbase_distance = std::stoull(sampler.substr(9));
            } catch (...) {
                throw UsageError{"--sampler nearbase:<distance> expects a number"};
            }
        } else if (sampler != "uniform") {
            throw UsageError{"--sampler expects uniform or nearbase:<distance>"};
        }
        cfg.seed = seed;

        cfg.strategies = 0;
        if (strategies.empty()) {
            cfg.strategies = NKECC_STRATEGIES_ALL;
        } else {
            for (const auto& s : strategies)
                cfg.strategies |= NKECC_STRATEGY_BIT(StrategyOptions::kind_of(s));
        }
        cfg.karatsuba_threshold = strat.karatsuba_threshold;
        cfg.nikhilam_threshold = strat.nikhilam_threshold;
        cfg.nikhilam_fallback = StrategyOptions::kind_of(strat.nikhilam_fallback);
        return cfg;
    }
};

struct CurveOptions {
    std::string p, a, b, curve_text;
    std::vector<std::string> points;
    std::string n;
    uint32_t radix = 0; // 0 = textual radix of the inputs

    void attach(CLI::App* cmd, bool with_n) {
        cmd->add_option("--p", p, "field modulus");
        cmd->add_option("--a", a, "curve coefficient a");
        cmd->add_option("--b", b, "curve coefficient b");
        cmd->add_option("--curve", curve_text, "curve as \"p=<n> a=<n> b=<n>\"");
        cmd->add_option("--point", points, "point \"(x,y)\" or \"inf\" (repeatable)");
        if (with_n) cmd->add_option("--n", n, "scalar");
        cmd->add_option("--radix", radix, "working radix for curve arithmetic")
            ->check(CLI::IsMember({2u, 10u}));
    }

    CurvePtr make_curve() const {
        nkecc_curve* c = nullptr;
        if (!curve_text.empty()) {
            check(nkecc_curve_parse(curve_text.c_str(), 1, radix ? radix : 10, &c));
            return CurvePtr(c);
        }
        if (p.empty() || a.empty() || b.empty())
            throw UsageError{"curve requires --p, --a and --b (or --curve)"};
        uint32_t curve_radix = 0;
        NatPtr pn = parse_nat(p, radix, &curve_radix);
        NatPtr an = parse_nat(a, curve_radix);
        NatPtr bn = parse_nat(b, curve_radix);
        check(nkecc_curve_new(pn.get(), an.get(), bn.get(), 1, &c));
        return CurvePtr(c);
    }

    PointPtr parse_point(const nkecc_curve* c, const std::string& text) const {
        nkecc_point* pt = nullptr;
        check(nkecc_point_parse(c, text.c_str(), &pt));
        return PointPtr(pt);
    }
};

struct OutputOptions {
    bool count = false;
    bool csv = false;
    bool as_json = false;

    void attach(CLI::App* cmd, bool with_csv, bool with_count = true) {
        if (with_count)
            cmd->add_flag("--count", count, "print the primitive-operation tally");
        if (with_csv) cmd->add_flag("--csv", csv, "machine-readable CSV output");
        cmd->add_flag("--json", as_json, "structured JSON output");
    }
};

int run_mul(const std::vector<std::string>& operands, const StrategyOptions& strat,
            uint32_t radix, const OutputOptions& out) {
    uint32_t effective_radix = 0;
    NatPtr a = parse_nat(operands[0], radix, &effective_radix);
    NatPtr b = parse_nat(operands[1], effective_radix);

    nkecc_strategy_spec spec = strat.spec();
    nkecc_nat* product = nullptr;
    nkecc_opcount tally{};
    const uint64_t t0 = now_ns();
    check(nkecc_multiply(a.get(), b.get(), &spec, &product, &tally));
    const uint64_t t1 = now_ns();
    NatPtr prod(product);

    if (out.as_json) {
        json j;
        j["product"] = nat_text(prod.get());
        j["radix"] = effective_radix;
        j["strategy"] = strat.strategy;
        j["count"] = count_json(tally);
        j["ns"] = t1 - t0;
        std::cout << j.dump(2) << "\n";
    } else if (out.csv) {
        const size_t len = std::max(nkecc_nat_digit_len(a.get()),
                                    nkecc_nat_digit_len(b.get()));
        std::cout << "strategy,radix,digit_len,trial,mul1,addsub,shifts,ns\n"
                  << strat.strategy << ',' << effective_radix << ',' << len
                  << ",0," << tally.mul1 << ',' << tally.addsub << ','
                  << tally.shifts << ',' << (t1 - t0) << "\n";
    } else {
        std::cout << nat_text(prod.get()) << "\n";
        if (out.count) print_count(tally);
    }
    return 0;
}

int run_repro() {
    char* report = nullptr;
    check(nkecc_repro_tables(&report));
    StringPtr holder(report);
    std::cout << report;
    return 0;
}

int run_bench(const BenchOptions& bench, const StrategyOptions& strat,
              const CurveOptions& curve, const OutputOptions& out) {
    nkecc_bench_config cfg = bench.config(strat);

    // With curve inputs, benchmark scalar multiplication instead of sweeping.
    if (!curve.points.empty() || !curve.p.empty() || !curve.curve_text.empty()) {
        CurveOptions cv = curve;
        cv.radix = bench.radix; // the sweep radix doubles as the counting radix
        if (cv.points.size() != 1)
            throw UsageError{"scalar-mult benchmark needs exactly one --point"};
        if (cv.n.empty()) throw UsageError{"scalar-mult benchmark needs --n"};
        CurvePtr c = cv.make_curve();
        PointPtr pt = cv.parse_point(c.get(), cv.points[0]);
        NatPtr n = parse_nat(cv.n, cv.radix);
        char* report = nullptr;
        char* j = nullptr;
        check(nkecc_ecc_count_report(c.get(), pt.get(), n.get(), &cfg,
                                     out.as_json ? nullptr : &report,
                                     out.as_json ? &j : nullptr));
        StringPtr rh(report), jh(j);
        std::cout << (out.as_json ? j : report);
        return 0;
    }

    nkecc_bench_record* records = nullptr;
    size_t count = 0;
    check(nkecc_bench_run(&cfg, &records, &count));
    std::unique_ptr<nkecc_bench_record, decltype(&nkecc_bench_records_free)>
        holder(records, &nkecc_bench_records_free);

    if (out.csv) {
        char* csv = nullptr;
        check(nkecc_bench_csv(records, count, &csv));
        StringPtr ch(csv);
        std::cout << csv;
    } else if (out.as_json) {
        json rows = json::array();
        for (size_t i = 0; i < count; ++i) {
            const auto& r = records[i];
            const char* names[] = {"schoolbook", "karatsuba", "nikhilam"};
            rows.push_back(json{{"strategy", names[r.strategy]},
                                {"radix", r.radix},
                                {"digit_len", r.digit_len},
                                {"trial", r.trial},
                                {"mul1", r.count.mul1},
                                {"addsub", r.count.addsub},
                                {"shifts", r.count.shifts},
                                {"ns", r.ns}});
        }
        std::cout << json{{"seed", cfg.seed}, {"records", rows}}.dump(2) << "\n";
    } else {
        char* table = nullptr;
        check(nkecc_bench_table(records, count, &cfg, &table));
        StringPtr th(table);
        std::cout << table;
    }
    return 0;
}

int run_crossover(const BenchOptions& bench, const StrategyOptions& strat,
                  const OutputOptions& out) {
    nkecc_bench_config cfg = bench.config(strat);
    char* report = nullptr;
    char* j = nullptr;
    check(nkecc_crossover(&cfg, out.as_json ? nullptr : &report,
                          out.as_json ? &j : nullptr));
    StringPtr rh(report), jh(j);
    std::cout << (out.as_json ? j : report);
    if (out.as_json) std::cout << "\n";
    return 0;
}

int run_curve_binary_op(const CurveOptions& curve, const StrategyOptions& strat,
                        const OutputOptions& out, bool doubling) {
    CurvePtr c = curve.make_curve();
    const size_t want = doubling ? 1 : 2;
    if (curve.points.size() != want)
        throw UsageError{doubling ? "curve-double needs exactly one --point"
                                  : "curve-add needs exactly two --point"};
    PointPtr p = curve.parse_point(c.get(), curve.points[0]);
    nkecc_strategy_spec spec = strat.spec();
    nkecc_point* result = nullptr;
    nkecc_opcount tally{};
    if (doubling) {
        check(nkecc_point_double(c.get(), p.get(), &spec, &result, &tally));
    } else {
        PointPtr q = curve.parse_point(c.get(), curve.points[1]);
        check(nkecc_point_add(c.get(), p.get(), q.get(), &spec, &result, &tally));
    }
    PointPtr r(result);

    if (out.as_json) {
        json j;
        j["result"] = point_text(r.get());
        j["strategy"] = strat.strategy;
        j["count"] = count_json(tally);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << point_text(r.get()) << "\n";
        if (out.count) print_count(tally);
    }
    return 0;
}

int run_curve_scalarmul(const CurveOptions& curve, const StrategyOptions& strat,
                        const OutputOptions& out, const std::string& method,
                        bool trace) {
    CurvePtr c = curve.make_curve();
    if (curve.points.size() != 1)
        throw UsageError{"curve-scalarmul needs exactly one --point"};
    if (curve.n.empty()) throw UsageError{"curve-scalarmul needs --n"};
    PointPtr p = curve.parse_point(c.get(), curve.points[0]);
    NatPtr n = parse_nat(curve.n, curve.radix ? curve.radix : 10);

    nkecc_strategy_spec spec = strat.spec();
    const nkecc_scalar_method m = method == "recursive" ? NKECC_SCALAR_RECURSIVE
                                                        : NKECC_SCALAR_BINARY;
    nkecc_point* result = nullptr;
    nkecc_opcount tally{};
    uint64_t doublings = 0, additions = 0;
    char* expansion = nullptr;
    check(nkecc_scalar_mul(c.get(), p.get(), n.get(), &spec, m, &result, &tally,
                           &doublings, &additions, trace ? &expansion : nullptr));
    PointPtr r(result);
    StringPtr eh(expansion);

    if (out.as_json) {
        json j;
        j["result"] = point_text(r.get());
        j["strategy"] = strat.strategy;
        j["method"] = method;
        j["count"] = count_json(tally);
        j["doublings"] = doublings;
        j["additions"] = additions;
        if (expansion) j["expansion"] = expansion;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << point_text(r.get()) << "\n";
        if (trace) {
            std::cout << "doublings=" << doublings << "\n"
                      << "additions=" << additions << "\n"
                      << "expansion=" << expansion << "\n";
        }
        if (out.count) print_count(tally);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-strategy big-number multiplication with operation "
                 "counts, and elliptic-curve arithmetic on top of it"};
    app.require_subcommand(1);

    // mul
    auto* mul = app.add_subcommand("mul", "multiply two numbers");
    std::vector<std::string> mul_operands;
    mul->add_option("operands", mul_operands, "two numbers (0b/0x prefixes set the radix)")
        ->expected(2);
    StrategyOptions mul_strat;
    mul_strat.attach(mul);
    uint32_t mul_radix = 0;
    mul->add_option("--radix", mul_radix, "working radix override")
        ->check(CLI::IsMember({2u, 10u}));
    OutputOptions mul_out;
    mul_out.attach(mul, /*with_csv=*/true);

    // repro
    app.add_subcommand("repro", "print and re-check the built-in worked tables");

    // bench
    auto* bench = app.add_subcommand(
        "bench", "sweep multiplication costs, or scalar-mult costs with --point");
    BenchOptions bench_opts;
    bench_opts.attach(bench);
    StrategyOptions bench_strat;
    bench->add_option("--karatsuba-threshold", bench_strat.karatsuba_threshold,
                      "operand length below which karatsuba uses schoolbook");
    bench->add_option("--nikhilam-threshold", bench_strat.nikhilam_threshold,
                      "minimum sub-product length for nikhilam recursion");
    bench->add_option("--nikhilam-fallback", bench_strat.nikhilam_fallback,
                      "strategy for non-recursing nikhilam sub-products")
        ->check(CLI::IsMember({"schoolbook", "karatsuba"}));
    CurveOptions bench_curve;
    bench->add_option("--p", bench_curve.p, "field modulus (scalar-mult mode)");
    bench->add_option("--a", bench_curve.a, "curve coefficient a");
    bench->add_option("--b", bench_curve.b, "curve coefficient b");
    bench->add_option("--curve", bench_curve.curve_text, "curve as \"p=.. a=.. b=..\"");
    bench->add_option("--point", bench_curve.points, "base point (scalar-mult mode)");
    bench->add_option("--n", bench_curve.n, "scalar (scalar-mult mode)");
    OutputOptions bench_out;
    bench_out.attach(bench, /*with_csv=*/true, /*with_count=*/false);

    // crossover
    auto* cross = app.add_subcommand("crossover",
                                     "report where one strategy starts beating another");
    BenchOptions cross_opts;
    cross_opts.attach(cross);
    StrategyOptions cross_strat;
    OutputOptions cross_out;
    cross_out.attach(cross, /*with_csv=*/false, /*with_count=*/false);

    // curve-add / curve-double / curve-scalarmul
    auto* cadd = app.add_subcommand("curve-add", "add two curve points");
    CurveOptions cadd_curve;
    cadd_curve.attach(cadd, /*with_n=*/false);
    StrategyOptions cadd_strat;
    cadd_strat.attach(cadd);
    OutputOptions cadd_out;
    cadd_out.attach(cadd, /*with_csv=*/false);

    auto* cdbl = app.add_subcommand("curve-double", "double a curve point");
    CurveOptions cdbl_curve;
    cdbl_curve.attach(cdbl, /*with_n=*/false);
    StrategyOptions cdbl_strat;
    cdbl_strat.attach(cdbl);
    OutputOptions cdbl_out;
    cdbl_out.attach(cdbl, /*with_csv=*/false);

    auto* csm = app.add_subcommand("curve-scalarmul", "compute n times a point");
    CurveOptions csm_curve;
    csm_curve.attach(csm, /*with_n=*/true);
    StrategyOptions csm_strat;
    csm_strat.attach(csm);
    OutputOptions csm_out;
    csm_out.attach(csm, /*with_csv=*/false);
    std::string csm_method = "binary";
    csm->add_option("--method", csm_method, "binary (double-and-add) or recursive")
        ->check(CLI::IsMember({"binary", "recursive"}));
    bool csm_trace = false;
    csm->add_flag("--trace", csm_trace, "print step counters and the expansion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mul->parsed()) return run_mul(mul_operands, mul_strat, mul_radix, mul_out);
        if (app.got_subcommand("repro")) return run_repro();
        if (bench->parsed()) return run_bench(bench_opts, bench_strat, bench_curve, bench_out);
        if (cross->parsed()) return run_crossover(cross_opts, cross_strat, cross_out);
        if (cadd->parsed())
            return run_curve_binary_op(cadd_curve, cadd_strat, cadd_out, false);
        if (cdbl->parsed())
            return run_curve_binary_op(cdbl_curve, cdbl_strat, cdbl_out, true);
        if (csm->parsed())
            return run_curve_scalarmul(csm_curve, csm_strat, csm_out, csm_method,
                                       csm_trace);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.message << "\n";
        return 2;
    } catch (const ComputeError& e) {
        std::cerr << "error: " << e.message << "\n";
        return 1;
    }
    return 0;
}
