#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "nkecc.h"

namespace {

std::string take_string(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    nkecc_string_free(s);
    return out;
}

nkecc_nat* parse(const char* text, uint32_t radix = 10) {
    nkecc_nat* n = nullptr;
    REQUIRE(nkecc_nat_from_text(text, radix, &n) == NKECC_OK);
    return n;
}

std::string text_of(const nkecc_nat* n) {
    char* s = nullptr;
    REQUIRE(nkecc_nat_to_text(n, &s) == NKECC_OK);
    return take_string(s);
}

} // namespace

TEST_CASE("version and status strings") {
    CHECK(nkecc_version() != nullptr);
    CHECK(std::strcmp(nkecc_status_str(NKECC_OK), "ok") == 0);
    CHECK(std::strcmp(nkecc_status_str(NKECC_ERR_DIV_ZERO), "division by zero") == 0);
}

TEST_CASE("natural lifecycle through the C surface") {
    nkecc_nat* a = parse("107");
    CHECK(nkecc_nat_radix(a) == 10);
    CHECK(nkecc_nat_digit_len(a) == 3);
    CHECK(text_of(a) == "107");

    nkecc_nat* b = nullptr;
    uint32_t radix = 0;
    CHECK(nkecc_nat_parse("0b1101", 0, &b, &radix) == NKECC_OK);
    CHECK(radix == 2);
    CHECK(text_of(b) == "1101");

    nkecc_nat* c = nullptr;
    CHECK(nkecc_nat_convert_radix(b, 10, &c) == NKECC_OK);
    CHECK(text_of(c) == "13");

    nkecc_nat_free(a);
    nkecc_nat_free(b);
    nkecc_nat_free(c);
}

TEST_CASE("error codes and last_error detail") {
    nkecc_nat* n = nullptr;
    CHECK(nkecc_nat_from_text("12a", 10, &n) == NKECC_ERR_PARSE);
    CHECK(std::strlen(nkecc_last_error()) > 0);

    CHECK(nkecc_nat_from_text(nullptr, 10, &n) == NKECC_ERR_BAD_ARG);

    nkecc_nat* a = parse("5");
    nkecc_nat* b = parse("6");
    nkecc_nat* out = nullptr;
    CHECK(nkecc_nat_sub(a, b, &out) == NKECC_ERR_UNDERFLOW);

    nkecc_nat* zero = parse("0");
    nkecc_nat* q = nullptr;
    nkecc_nat* r = nullptr;
    CHECK(nkecc_nat_divrem(a, zero, &q, &r) == NKECC_ERR_DIV_ZERO);

    nkecc_nat* bin = parse("11", 2);
    CHECK(nkecc_nat_add(a, bin, &out) == NKECC_ERR_RADIX_MISMATCH);

    int bit = 0;
    CHECK(nkecc_nat_bit_at(a, 0, &bit) == NKECC_ERR_DOMAIN); // radix 10

    nkecc_nat_free(a);
    nkecc_nat_free(b);
    nkecc_nat_free(zero);
    nkecc_nat_free(bin);
}

TEST_CASE("natural arithmetic entry points") {
    nkecc_nat* a = parse("11663");
    nkecc_nat* b = parse("100");

    int cmp = 0;
    CHECK(nkecc_nat_compare(b, a, &cmp) == NKECC_OK);
    CHECK(cmp == -1);

    nkecc_nat* sum = nullptr;
    CHECK(nkecc_nat_add(a, b, &sum) == NKECC_OK);
    CHECK(text_of(sum) == "11763");

    nkecc_nat* shifted = nullptr;
    CHECK(nkecc_nat_shift(b, 2, &shifted) == NKECC_OK);
    CHECK(text_of(shifted) == "10000");

    nkecc_nat* q = nullptr;
    nkecc_nat* r = nullptr;
    CHECK(nkecc_nat_divrem(a, b, &q, &r) == NKECC_OK);
    CHECK(text_of(q) == "116");
    CHECK(text_of(r) == "63");

    nkecc_nat* bits = nullptr;
    CHECK(nkecc_nat_convert_radix(b, 2, &bits) == NKECC_OK);
    int bit = -1;
    CHECK(nkecc_nat_bit_at(bits, 2, &bit) == NKECC_OK);
    CHECK(bit == 1);

    for (nkecc_nat* n : {a, b, sum, shifted, q, r, bits}) nkecc_nat_free(n);
}

TEST_CASE("multiplication with counts through the C surface") {
    nkecc_nat* a = parse("107");
    nkecc_nat* b = parse("109");

    nkecc_strategy_spec spec;
    nkecc_strategy_spec_default(&spec, NKECC_STRATEGY_NIKHILAM);
    CHECK(spec.karatsuba_threshold == 2);
    CHECK(spec.nikhilam_threshold == 2);

    nkecc_nat* product = nullptr;
    nkecc_opcount count{};
    CHECK(nkecc_multiply(a, b, &spec, &product, &count) == NKECC_OK);
    CHECK(text_of(product) == "11663");
    CHECK(count.mul1 == 1);
    nkecc_nat_free(product);

    spec.kind = NKECC_STRATEGY_SCHOOLBOOK;
    CHECK(nkecc_multiply(a, b, &spec, &product, &count) == NKECC_OK);
    CHECK(count.mul1 == 9);
    nkecc_nat_free(product);

    spec.kind = NKECC_STRATEGY_NIKHILAM;
    spec.nikhilam_threshold = 1; // invalid
    CHECK(nkecc_multiply(a, b, &spec, &product, &count) == NKECC_ERR_BAD_CONFIG);

    nkecc_nat_free(a);
    nkecc_nat_free(b);
}

TEST_CASE("base decomposition through the C surface") {
    nkecc_nat* m = parse("107");
    nkecc_nat* n = parse("109");

    size_t exponent = 0;
    nkecc_nat* base = nullptr;
    int a_neg = -1, b_neg = -1;
    nkecc_nat* a_mag = nullptr;
    nkecc_nat* b_mag = nullptr;
    nkecc_nat* cross = nullptr;
    CHECK(nkecc_nikhilam_decompose(m, n, &exponent, &base, &a_neg, &a_mag,
                                   &b_neg, &b_mag, &cross) == NKECC_OK);
    CHECK(exponent == 2);
    CHECK(text_of(base) == "100");
    CHECK(a_neg == 0);
    CHECK(text_of(a_mag) == "7");
    CHECK(b_neg == 0);
    CHECK(text_of(b_mag) == "9");
    CHECK(text_of(cross) == "116");

    nkecc_nat* seven = parse("7");
    CHECK(nkecc_nikhilam_decompose(seven, seven, &exponent, &base, &a_neg,
                                   &a_mag, &b_neg, &b_mag,
                                   &cross) == NKECC_ERR_DOMAIN);

    for (nkecc_nat* x : {m, n, base, a_mag, b_mag, cross, seven})
        nkecc_nat_free(x);
}

TEST_CASE("curve operations through the C surface") {
    nkecc_curve* curve = nullptr;
    CHECK(nkecc_curve_parse("p=17 a=2 b=2", 1, 10, &curve) == NKECC_OK);

    nkecc_point* P = nullptr;
    CHECK(nkecc_point_parse(curve, "(5,1)", &P) == NKECC_OK);
    CHECK(nkecc_point_is_infinity(P) == 0);

    nkecc_point* off = nullptr;
    CHECK(nkecc_point_parse(curve, "(5,2)", &off) == NKECC_ERR_NOT_ON_CURVE);
    CHECK(nkecc_point_parse(curve, "5,2", &off) == NKECC_ERR_PARSE);

    nkecc_point* Q = nullptr;
    CHECK(nkecc_point_parse(curve, "(6,3)", &Q) == NKECC_OK);

    nkecc_strategy_spec spec;
    nkecc_strategy_spec_default(&spec, NKECC_STRATEGY_NIKHILAM);

    nkecc_point* sum = nullptr;
    nkecc_opcount count{};
    CHECK(nkecc_point_add(curve, P, Q, &spec, &sum, &count) == NKECC_OK);
    char* s = nullptr;
    CHECK(nkecc_point_format(sum, &s) == NKECC_OK);
    CHECK(take_string(s) == "(10,6)");

    nkecc_point* dbl = nullptr;
    CHECK(nkecc_point_double(curve, P, &spec, &dbl, &count) == NKECC_OK);
    int eq = 0;
    CHECK(nkecc_point_eq(dbl, Q, &eq) == NKECC_OK);
    CHECK(eq == 1);

    nkecc_point* neg = nullptr;
    CHECK(nkecc_point_neg(curve, P, &neg) == NKECC_OK);
    nkecc_point* inf = nullptr;
    CHECK(nkecc_point_add(curve, P, neg, &spec, &inf, &count) == NKECC_OK);
    CHECK(nkecc_point_is_infinity(inf) == 1);

    int on = 0;
    CHECK(nkecc_point_is_on_curve(curve, P, &on) == NKECC_OK);
    CHECK(on == 1);

    // singular curve rejected
    nkecc_curve* bad = nullptr;
    CHECK(nkecc_curve_parse("p=17 a=0 b=0", 1, 10, &bad) ==
          NKECC_ERR_SINGULAR_CURVE);

    for (nkecc_point* x : {P, Q, sum, dbl, neg, inf}) nkecc_point_free(x);
    nkecc_curve_free(curve);
}

TEST_CASE("scalar multiplication through the C surface") {
    nkecc_curve* curve = nullptr;
    REQUIRE(nkecc_curve_parse("p=17 a=2 b=2", 1, 10, &curve) == NKECC_OK);
    nkecc_point* P = nullptr;
    REQUIRE(nkecc_point_parse(curve, "(5,1)", &P) == NKECC_OK);

    nkecc_strategy_spec spec;
    nkecc_strategy_spec_default(&spec, NKECC_STRATEGY_SCHOOLBOOK);

    nkecc_nat* zero = parse("0");
    nkecc_point* r0 = nullptr;
    CHECK(nkecc_scalar_mul(curve, P, zero, &spec, NKECC_SCALAR_BINARY, &r0,
                           nullptr, nullptr, nullptr, nullptr) == NKECC_OK);
    CHECK(nkecc_point_is_infinity(r0) == 1);

    nkecc_nat* hundred = parse("100");
    nkecc_point* rb = nullptr;
    nkecc_opcount count{};
    uint64_t doublings = 0, additions = 0;
    char* expansion = nullptr;
    CHECK(nkecc_scalar_mul(curve, P, hundred, &spec, NKECC_SCALAR_BINARY, &rb,
                           &count, &doublings, &additions, nullptr) == NKECC_OK);
    CHECK(doublings == 7);
    CHECK(additions == 3);

    nkecc_point* rr = nullptr;
    CHECK(nkecc_scalar_mul(curve, P, hundred, &spec, NKECC_SCALAR_RECURSIVE, &rr,
                           &count, &doublings, &additions, &expansion) == NKECC_OK);
    CHECK(take_string(expansion) == "2(2(P+2(2(2(P+2P)))))");
    int eq = 0;
    CHECK(nkecc_point_eq(rb, rr, &eq) == NKECC_OK);
    CHECK(eq == 1);

    for (nkecc_point* x : {P, r0, rb, rr}) nkecc_point_free(x);
    nkecc_nat_free(zero);
    nkecc_nat_free(hundred);
    nkecc_curve_free(curve);
}

TEST_CASE("experiments through the C surface") {
    char* report = nullptr;
    CHECK(nkecc_repro_tables(&report) == NKECC_OK);
    CHECK(take_string(report).find("11663") != std::string::npos);

    nkecc_bench_config cfg{};
    cfg.radix = 10;
    cfg.min_len = 1;
    cfg.max_len = 3;
    cfg.step = 1;
    cfg.trials = 2;
    cfg.sampler = NKECC_SAMPLER_UNIFORM;
    cfg.seed = 7;
    cfg.strategies = NKECC_STRATEGIES_ALL;
    cfg.karatsuba_threshold = 2;
    cfg.nikhilam_threshold = 2;
    cfg.nikhilam_fallback = NKECC_STRATEGY_SCHOOLBOOK;

    nkecc_bench_record* records = nullptr;
    size_t count = 0;
    CHECK(nkecc_bench_run(&cfg, &records, &count) == NKECC_OK);
    CHECK(count == 3 * 2 * 3);

    char* csv = nullptr;
    CHECK(nkecc_bench_csv(records, count, &csv) == NKECC_OK);
    CHECK(take_string(csv).rfind("strategy,radix,digit_len,trial", 0) == 0);

    char* table = nullptr;
    CHECK(nkecc_bench_table(records, count, &cfg, &table) == NKECC_OK);
    CHECK(take_string(table).find("seed=7") != std::string::npos);
    nkecc_bench_records_free(records);

    cfg.max_len = 4;
    char* cross_report = nullptr;
    char* cross_json = nullptr;
    CHECK(nkecc_crossover(&cfg, &cross_report, &cross_json) == NKECC_OK);
    CHECK(take_string(cross_report).find("crossover") != std::string::npos);
    CHECK(take_string(cross_json).find("crossovers") != std::string::npos);

    cfg.min_len = cfg.max_len = 2; // single size
    CHECK(nkecc_crossover(&cfg, &cross_report, nullptr) == NKECC_ERR_BAD_CONFIG);

    nkecc_curve* curve = nullptr;
    REQUIRE(nkecc_curve_parse("p=17 a=2 b=2", 1, 10, &curve) == NKECC_OK);
    nkecc_point* P = nullptr;
    REQUIRE(nkecc_point_parse(curve, "(5,1)", &P) == NKECC_OK);
    nkecc_nat* n = parse("100");
    char* ecc_report = nullptr;
    CHECK(nkecc_ecc_count_report(curve, P, n, &cfg, &ecc_report, nullptr) ==
          NKECC_OK);
    CHECK(take_string(ecc_report).find("nikhilam") != std::string::npos);

    nkecc_nat_free(n);
    nkecc_point_free(P);
    nkecc_curve_free(curve);
}
