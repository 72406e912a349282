/*
 * nkecc - instrumented multi-strategy big-number multiplication and
 * elliptic-curve arithmetic.
 *
 * C interface of the shared library. Values live behind opaque handles and
 * every fallible call returns a status code; nkecc_last_error() carries a
 * human-readable detail message for the calling thread's most recent failure.
 * Handles are immutable once created and may be shared across threads; each
 * handle must be released with its matching _free function.
 */
#ifndef NKECC_H
#define NKECC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nkecc_nat nkecc_nat;     /* non-negative integer, fixed radix */
typedef struct nkecc_curve nkecc_curve; /* y^2 = x^3 + ax + b over GF(p) */
typedef struct nkecc_point nkecc_point; /* affine point or infinity */

typedef enum nkecc_status {
    NKECC_OK = 0,
    NKECC_ERR_PARSE = 1,
    NKECC_ERR_RADIX_MISMATCH = 2,
    NKECC_ERR_UNDERFLOW = 3,
    NKECC_ERR_DIV_ZERO = 4,
    NKECC_ERR_DOMAIN = 5,
    NKECC_ERR_MODULUS_MISMATCH = 6,
    NKECC_ERR_NON_INVERTIBLE = 7,
    NKECC_ERR_NOT_ON_CURVE = 8,
    NKECC_ERR_SINGULAR_CURVE = 9,
    NKECC_ERR_BAD_CONFIG = 10,
    NKECC_ERR_BAD_ARG = 11,
    NKECC_ERR_INTERNAL = 12
} nkecc_status;

typedef enum nkecc_strategy {
    NKECC_STRATEGY_SCHOOLBOOK = 0,
    NKECC_STRATEGY_KARATSUBA = 1,
    NKECC_STRATEGY_NIKHILAM = 2
} nkecc_strategy;

/* Primitive-operation tally: single-digit products, single-digit
 * additions/subtractions (carries and borrows included), and digit shifts. */
typedef struct nkecc_opcount {
    uint64_t mul1;
    uint64_t addsub;
    uint64_t shifts;
} nkecc_opcount;

typedef struct nkecc_strategy_spec {
    nkecc_strategy kind;
    /* operand lengths below this use long multiplication */
    uint32_t karatsuba_threshold;
    /* minimum digit length (>= 2) for a Nikhilam sub-product to recurse */
    uint32_t nikhilam_threshold;
    /* strategy for sub-products that do not recurse (not nikhilam) */
    nkecc_strategy nikhilam_fallback;
} nkecc_strategy_spec;

typedef enum nkecc_sampler {
    NKECC_SAMPLER_UNIFORM = 0,
    NKECC_SAMPLER_NEAR_BASE = 1
} nkecc_sampler;

#define NKECC_STRATEGY_BIT(s) (1u << (unsigned)(s))
#define NKECC_STRATEGIES_ALL                                                   \
    (NKECC_STRATEGY_BIT(NKECC_STRATEGY_SCHOOLBOOK) |                           \
     NKECC_STRATEGY_BIT(NKECC_STRATEGY_KARATSUBA) |                            \
     NKECC_STRATEGY_BIT(NKECC_STRATEGY_NIKHILAM))

typedef struct nkecc_bench_config {
    uint32_t radix;
    uint32_t min_len;
    uint32_t max_len;
    uint32_t step;
    uint32_t trials;
    nkecc_sampler sampler;
    uint64_t nearbase_distance;
    uint64_t seed;
    uint32_t strategies; /* NKECC_STRATEGY_BIT mask */
    uint32_t karatsuba_threshold;
    uint32_t nikhilam_threshold;
    nkecc_strategy nikhilam_fallback;
} nkecc_bench_config;

typedef struct nkecc_bench_record {
    nkecc_strategy strategy;
    uint32_t radix;
    uint32_t digit_len;
    uint32_t trial;
    nkecc_opcount count;
    uint64_t ns;
} nkecc_bench_record;

const char* nkecc_version(void);
const char* nkecc_status_str(nkecc_status s);

/* Detail message of the calling thread's most recent failed call. */
const char* nkecc_last_error(void);

void nkecc_string_free(char* s);

/* ---- naturals ---------------------------------------------------------- */

/* Digits of `radix` (2..36). "0" yields the canonical zero. */
nkecc_status nkecc_nat_from_text(const char* text, uint32_t radix,
                                 nkecc_nat** out);

/* Prefix-aware: bare digits are decimal, "0b" binary, "0x" hex (converted).
 * A nonzero radix_override converts the value into that radix. radix_out,
 * when non-null, receives the radix of the returned value. */
nkecc_status nkecc_nat_parse(const char* text, uint32_t radix_override,
                             nkecc_nat** out, uint32_t* radix_out);

/* Caller frees *out with nkecc_string_free. */
nkecc_status nkecc_nat_to_text(const nkecc_nat* n, char** out);

nkecc_status nkecc_nat_convert_radix(const nkecc_nat* n, uint32_t radix,
                                     nkecc_nat** out);
void nkecc_nat_free(nkecc_nat* n);

uint32_t nkecc_nat_radix(const nkecc_nat* n);
size_t nkecc_nat_digit_len(const nkecc_nat* n);

/* cmp: -1, 0 or 1. */
nkecc_status nkecc_nat_compare(const nkecc_nat* a, const nkecc_nat* b, int* cmp);
nkecc_status nkecc_nat_add(const nkecc_nat* a, const nkecc_nat* b,
                           nkecc_nat** out);
nkecc_status nkecc_nat_sub(const nkecc_nat* a, const nkecc_nat* b,
                           nkecc_nat** out);
nkecc_status nkecc_nat_shift(const nkecc_nat* a, size_t k, nkecc_nat** out);
nkecc_status nkecc_nat_divrem(const nkecc_nat* a, const nkecc_nat* b,
                              nkecc_nat** quot, nkecc_nat** rem);
/* Radix-2 values only. */
nkecc_status nkecc_nat_bit_at(const nkecc_nat* a, size_t i, int* bit);

/* ---- multiplication ---------------------------------------------------- */

/* kind plus the default thresholds: karatsuba 2, nikhilam 2, fallback
 * schoolbook. */
void nkecc_strategy_spec_default(nkecc_strategy_spec* spec, nkecc_strategy kind);

/* Exact product by the chosen strategy; count (optional) receives the
 * primitive-operation tally of this call. */
nkecc_status nkecc_multiply(const nkecc_nat* a, const nkecc_nat* b,
                            const nkecc_strategy_spec* spec,
                            nkecc_nat** product, nkecc_opcount* count);

/* Shared-base decomposition m = base + a, n = base + b with
 * cross = m + b = n + a. Output magnitudes pair with sign flags (1 means
 * negative). Requires nonzero operands, max digit length >= 2. */
nkecc_status nkecc_nikhilam_decompose(const nkecc_nat* m, const nkecc_nat* n,
                                      size_t* base_exponent, nkecc_nat** base,
                                      int* a_negative, nkecc_nat** a_magnitude,
                                      int* b_negative, nkecc_nat** b_magnitude,
                                      nkecc_nat** cross);

/* ---- curves ------------------------------------------------------------ */

/* Rejects p <= 3 and singular parameter sets. validate_inputs controls
 * whether point operations on this curve check their inputs against the
 * curve equation. */
nkecc_status nkecc_curve_new(const nkecc_nat* p, const nkecc_nat* a,
                             const nkecc_nat* b, int validate_inputs,
                             nkecc_curve** out);
/* Text form "p=<nat> a=<nat> b=<nat>". */
nkecc_status nkecc_curve_parse(const char* text, int validate_inputs,
                               uint32_t radix, nkecc_curve** out);
void nkecc_curve_free(nkecc_curve* c);

nkecc_status nkecc_point_infinity(nkecc_point** out);
nkecc_status nkecc_point_new(const nkecc_curve* c, const nkecc_nat* x,
                             const nkecc_nat* y, nkecc_point** out);
/* "(x,y)" or "inf". */
nkecc_status nkecc_point_parse(const nkecc_curve* c, const char* text,
                               nkecc_point** out);
nkecc_status nkecc_point_format(const nkecc_point* p, char** out);
void nkecc_point_free(nkecc_point* p);

int nkecc_point_is_infinity(const nkecc_point* p);
nkecc_status nkecc_point_eq(const nkecc_point* a, const nkecc_point* b, int* eq);
nkecc_status nkecc_point_is_on_curve(const nkecc_curve* c, const nkecc_point* p,
                                     int* on_curve);
nkecc_status nkecc_point_neg(const nkecc_curve* c, const nkecc_point* p,
                             nkecc_point** out);

nkecc_status nkecc_point_add(const nkecc_curve* c, const nkecc_point* p,
                             const nkecc_point* q,
                             const nkecc_strategy_spec* spec, nkecc_point** out,
                             nkecc_opcount* count);
nkecc_status nkecc_point_double(const nkecc_curve* c, const nkecc_point* p,
                                const nkecc_strategy_spec* spec,
                                nkecc_point** out, nkecc_opcount* count);

typedef enum nkecc_scalar_method {
    NKECC_SCALAR_BINARY = 0,   /* MSB-first double-and-add */
    NKECC_SCALAR_RECURSIVE = 1 /* halve-if-even recursion */
} nkecc_scalar_method;

/* n*P. doublings/additions (optional) receive the trace step counters and
 * expansion (optional, nkecc_string_free) the doubling/addition expression,
 * e.g. "2(2(P+2P))". */
nkecc_status nkecc_scalar_mul(const nkecc_curve* c, const nkecc_point* p,
                              const nkecc_nat* n,
                              const nkecc_strategy_spec* spec,
                              nkecc_scalar_method method, nkecc_point** out,
                              nkecc_opcount* count, uint64_t* doublings,
                              uint64_t* additions, char** expansion);

/* ---- experiments ------------------------------------------------------- */

/* The three built-in worked multiplication tables, with their products and
 * counts re-checked on every call. */
nkecc_status nkecc_repro_tables(char** report);

/* Deterministic sweep; every product is verified against long multiplication.
 * Free the record array with nkecc_bench_records_free. */
nkecc_status nkecc_bench_run(const nkecc_bench_config* cfg,
                             nkecc_bench_record** records, size_t* count);
void nkecc_bench_records_free(nkecc_bench_record* records);

nkecc_status nkecc_bench_csv(const nkecc_bench_record* records, size_t count,
                             char** csv);
nkecc_status nkecc_bench_table(const nkecc_bench_record* records, size_t count,
                               const nkecc_bench_config* cfg, char** table);

/* Smallest swept size at which each strategy's mean mul1 (and mean wall
 * time) beats each other strategy's; needs >= 3 sizes. Either output may be
 * null. */
nkecc_status nkecc_crossover(const nkecc_bench_config* cfg, char** report,
                             char** json);

/* Per-strategy cost of computing n*P with double-and-add; fails if the
 * strategies disagree on the result. Either output may be null. */
nkecc_status nkecc_ecc_count_report(const nkecc_curve* c, const nkecc_point* p,
                                    const nkecc_nat* n,
                                    const nkecc_bench_config* cfg,
                                    char** report, char** json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NKECC_H */
