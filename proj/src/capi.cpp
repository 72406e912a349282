#include "nkecc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "benchkit.hpp"
#include "natural.hpp"
#include "primefield.hpp"
#include "strategy.hpp"
#include "weierstrass.hpp"

struct nkecc_nat {
    nkecc::Natural v;
};

struct nkecc_curve {
    nkecc::CurveParams v;
};

struct nkecc_point {
    nkecc::Point v;
};

namespace {

thread_local std::string g_last_error;

nkecc_status map_code(nkecc::ErrorCode c) {
    using nkecc::ErrorCode;
    switch (c) {
    case ErrorCode::ParseError: return NKECC_ERR_PARSE;
    case ErrorCode::RadixMismatch: return NKECC_ERR_RADIX_MISMATCH;
    case ErrorCode::Underflow: return NKECC_ERR_UNDERFLOW;
    case ErrorCode::DivisionByZero: return NKECC_ERR_DIV_ZERO;
    case ErrorCode::Domain: return NKECC_ERR_DOMAIN;
    case ErrorCode::ModulusMismatch: return NKECC_ERR_MODULUS_MISMATCH;
    case ErrorCode::NonInvertible: return NKECC_ERR_NON_INVERTIBLE;
    case ErrorCode::NotOnCurve: return NKECC_ERR_NOT_ON_CURVE;
    case ErrorCode::SingularCurve: return NKECC_ERR_SINGULAR_CURVE;
    case ErrorCode::BadConfig: return NKECC_ERR_BAD_CONFIG;
    }
    return NKECC_ERR_INTERNAL;
}

template <typename F>
nkecc_status guarded(F&& f) noexcept {
    try {
        f();
        return NKECC_OK;
    } catch (const nkecc::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NKECC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return NKECC_ERR_INTERNAL;
    }
}

nkecc_status bad_arg(const char* what) {
    g_last_error = what;
    return NKECC_ERR_BAD_ARG;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void fill_count(nkecc_opcount* out, const nkecc::OpCount& c) {
    if (!out) return;
    out->mul1 = c.mul1;
    out->addsub = c.addsub;
    out->shifts = c.shifts;
}

nkecc::StrategySpec to_spec(const nkecc_strategy_spec* spec) {
    if (!spec)
        return nkecc::StrategySpec::make(nkecc::StrategyKind::Schoolbook);
    nkecc::StrategySpec s;
    s.kind = static_cast<nkecc::StrategyKind>(spec->kind);
    s.karatsuba_threshold = spec->karatsuba_threshold;
    s.nikhilam_threshold = spec->nikhilam_threshold;
    s.nikhilam_fallback = static_cast<nkecc::StrategyKind>(spec->nikhilam_fallback);
    return s;
}

nkecc::BenchConfig to_bench_config(const nkecc_bench_config* cfg) {
    nkecc::BenchConfig c;
    if (!cfg) return c;
    c.radix = cfg->radix;
    c.min_len = cfg->min_len;
    c.max_len = cfg->max_len;
    c.step = cfg->step;
    c.trials = cfg->trials;
    c.sampler = cfg->sampler == NKECC_SAMPLER_NEAR_BASE
                    ? nkecc::Sampler::NearBase
                    : nkecc::Sampler::Uniform;
    c.nearbase_distance = cfg->nearbase_distance;
    c.seed = cfg->seed;
    c.strategies.clear();
    for (nkecc_strategy s : {NKECC_STRATEGY_SCHOOLBOOK, NKECC_STRATEGY_KARATSUBA,
                             NKECC_STRATEGY_NIKHILAM}) {
        if (cfg->strategies & NKECC_STRATEGY_BIT(s))
            c.strategies.push_back(static_cast<nkecc::StrategyKind>(s));
    }
    c.karatsuba_threshold = cfg->karatsuba_threshold;
    c.nikhilam_threshold = cfg->nikhilam_threshold;
    c.nikhilam_fallback = static_cast<nkecc::StrategyKind>(cfg->nikhilam_fallback);
    return c;
}

} // namespace

const char* nkecc_version(void) { return "1.0.0"; }

const char* nkecc_status_str(nkecc_status s) {
    switch (s) {
    case NKECC_OK: return "ok";
    case NKECC_ERR_PARSE: return "parse error";
    case NKECC_ERR_RADIX_MISMATCH: return "radix mismatch";
    case NKECC_ERR_UNDERFLOW: return "underflow";
    case NKECC_ERR_DIV_ZERO: return "division by zero";
    case NKECC_ERR_DOMAIN: return "domain error";
    case NKECC_ERR_MODULUS_MISMATCH: return "modulus mismatch";
    case NKECC_ERR_NON_INVERTIBLE: return "non-invertible element";
    case NKECC_ERR_NOT_ON_CURVE: return "point not on curve";
    case NKECC_ERR_SINGULAR_CURVE: return "singular curve";
    case NKECC_ERR_BAD_CONFIG: return "bad configuration";
    case NKECC_ERR_BAD_ARG: return "bad argument";
    case NKECC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* nkecc_last_error(void) { return g_last_error.c_str(); }

void nkecc_string_free(char* s) { std::free(s); }

nkecc_status nkecc_nat_from_text(const char* text, uint32_t radix,
                                 nkecc_nat** out) {
    if (!text || !out) return bad_arg("null argument");
    return guarded([&] { *out = new nkecc_nat{nkecc::Natural::from_text(text, radix)}; });
}

nkecc_status nkecc_nat_parse(const char* text, uint32_t radix_override,
                             nkecc_nat** out, uint32_t* radix_out) {
    if (!text || !out) return bad_arg("null argument");
    return guarded([&] {
        std::uint32_t detected = 0;
        *out = new nkecc_nat{nkecc::parse_prefixed(text, radix_override, &detected)};
        if (radix_out) *radix_out = detected;
    });
}

nkecc_status nkecc_nat_to_text(const nkecc_nat* n, char** out) {
    if (!n || !out) return bad_arg("null argument");
    return guarded([&] { *out = dup_string(n->v.to_text()); });
}

nkecc_status nkecc_nat_convert_radix(const nkecc_nat* n, uint32_t radix,
                                     nkecc_nat** out) {
    if (!n || !out) return bad_arg("null argument");
    return guarded([&] { *out = new nkecc_nat{nkecc::convert_radix(n->v, radix)}; });
}

void nkecc_nat_free(nkecc_nat* n) { delete n; }

uint32_t nkecc_nat_radix(const nkecc_nat* n) { return n ? n->v.radix() : 0; }

size_t nkecc_nat_digit_len(const nkecc_nat* n) {
    return n ? n->v.digit_len() : 0;
}

nkecc_status nkecc_nat_compare(const nkecc_nat* a, const nkecc_nat* b, int* cmp) {
    if (!a || !b || !cmp) return bad_arg("null argument");
    return guarded([&] {
        switch (nkecc::compare(a->v, b->v)) {
        case nkecc::Ordering::Less: *cmp = -1; break;
        case nkecc::Ordering::Equal: *cmp = 0; break;
        case nkecc::Ordering::Greater: *cmp = 1; break;
        }
    });
}

nkecc_status nkecc_nat_add(const nkecc_nat* a, const nkecc_nat* b,
                           nkecc_nat** out) {
    if (!a || !b || !out) return bad_arg("null argument");
    return guarded([&] { *out = new nkecc_nat{nkecc::add(a->v, b->v)}; });
}

nkecc_status nkecc_nat_sub(const nkecc_nat* a, const nkecc_nat* b,
                           nkecc_nat** out) {
    if (!a || !b || !out) return bad_arg("null argument");
    return guarded([&] { *out = new nkecc_nat{nkecc::sub(a->v, b->v)}; });
}

nkecc_status nkecc_nat_shift(const nkecc_nat* a, size_t k, nkecc_nat** out) {
    if (!a || !out) return bad_arg("null argument");
    return guarded([&] { *out = new nkecc_nat{nkecc::shift_digits(a->v, k)}; });
}

nkecc_status nkecc_nat_divrem(const nkecc_nat* a, const nkecc_nat* b,
                              nkecc_nat** quot, nkecc_nat** rem) {
    if (!a || !b || !quot || !rem) return bad_arg("null argument");
    return guarded([&] {
        auto [q, r] = nkecc::divrem(a->v, b->v);
        *quot = new nkecc_nat{std::move(q)};
        *rem = new nkecc_nat{std::move(r)};
    });
}

nkecc_status nkecc_nat_bit_at(const nkecc_nat* a, size_t i, int* bit) {
    if (!a || !bit) return bad_arg("null argument");
    return guarded([&] { *bit = a->v.bit_at(i); });
}

void nkecc_strategy_spec_default(nkecc_strategy_spec* spec, nkecc_strategy kind) {
    if (!spec) return;
    spec->kind = kind;
    spec->karatsuba_threshold = 2;
    spec->nikhilam_threshold = 2;
    spec->nikhilam_fallback = NKECC_STRATEGY_SCHOOLBOOK;
}

nkecc_status nkecc_multiply(const nkecc_nat* a, const nkecc_nat* b,
                            const nkecc_strategy_spec* spec,
                            nkecc_nat** product, nkecc_opcount* count) {
    if (!a || !b || !product) return bad_arg("null argument");
    return guarded([&] {
        nkecc::MulResult r = nkecc::multiply(a->v, b->v, to_spec(spec));
        *product = new nkecc_nat{std::move(r.product)};
        fill_count(count, r.count);
    });
}

nkecc_status nkecc_nikhilam_decompose(const nkecc_nat* m, const nkecc_nat* n,
                                      size_t* base_exponent, nkecc_nat** base,
                                      int* a_negative, nkecc_nat** a_magnitude,
                                      int* b_negative, nkecc_nat** b_magnitude,
                                      nkecc_nat** cross) {
    if (!m || !n) return bad_arg("null argument");
    return guarded([&] {
        nkecc::BaseDecomposition d = nkecc::nikhilam_base(m->v, n->v);
        if (base_exponent) *base_exponent = d.base_exponent;
        if (base) *base = new nkecc_nat{std::move(d.base)};
        if (a_negative) *a_negative = d.a.negative ? 1 : 0;
        if (a_magnitude) *a_magnitude = new nkecc_nat{std::move(d.a.magnitude)};
        if (b_negative) *b_negative = d.b.negative ? 1 : 0;
        if (b_magnitude) *b_magnitude = new nkecc_nat{std::move(d.b.magnitude)};
        if (cross) *cross = new nkecc_nat{std::move(d.cross)};
    });
}

nkecc_status nkecc_curve_new(const nkecc_nat* p, const nkecc_nat* a,
                             const nkecc_nat* b, int validate_inputs,
                             nkecc_curve** out) {
    if (!p || !a || !b || !out) return bad_arg("null argument");
    return guarded([&] {
        *out = new nkecc_curve{
            nkecc::CurveParams(p->v, a->v, b->v, validate_inputs != 0)};
    });
}

nkecc_status nkecc_curve_parse(const char* text, int validate_inputs,
                               uint32_t radix, nkecc_curve** out) {
    if (!text || !out) return bad_arg("null argument");
    return guarded([&] {
        *out = new nkecc_curve{
            nkecc::curve_from_text(text, validate_inputs != 0, radix)};
    });
}

void nkecc_curve_free(nkecc_curve* c) { delete c; }

nkecc_status nkecc_point_infinity(nkecc_point** out) {
    if (!out) return bad_arg("null argument");
    return guarded([&] { *out = new nkecc_point{nkecc::Point::infinity()}; });
}

nkecc_status nkecc_point_new(const nkecc_curve* c, const nkecc_nat* x,
                             const nkecc_nat* y, nkecc_point** out) {
    if (!c || !x || !y || !out) return bad_arg("null argument");
    return guarded([&] {
        nkecc::Point p = nkecc::Point::affine(nkecc::fe_new(x->v, c->v.p),
                                              nkecc::fe_new(y->v, c->v.p));
        if (c->v.validate_inputs && !nkecc::is_on_curve(p, c->v))
            throw nkecc::Error(nkecc::ErrorCode::NotOnCurve,
                               "point does not satisfy the curve equation");
        *out = new nkecc_point{std::move(p)};
    });
}

nkecc_status nkecc_point_parse(const nkecc_curve* c, const char* text,
                               nkecc_point** out) {
    if (!c || !text || !out) return bad_arg("null argument");
    return guarded([&] {
        *out = new nkecc_point{nkecc::point_from_text(text, c->v)};
    });
}

nkecc_status nkecc_point_format(const nkecc_point* p, char** out) {
    if (!p || !out) return bad_arg("null argument");
    return guarded([&] { *out = dup_string(nkecc::point_to_text(p->v)); });
}

void nkecc_point_free(nkecc_point* p) { delete p; }

int nkecc_point_is_infinity(const nkecc_point* p) {
    return p && p->v.is_infinity() ? 1 : 0;
}

nkecc_status nkecc_point_eq(const nkecc_point* a, const nkecc_point* b, int* eq) {
    if (!a || !b || !eq) return bad_arg("null argument");
    *eq = a->v == b->v ? 1 : 0;
    return NKECC_OK;
}

nkecc_status nkecc_point_is_on_curve(const nkecc_curve* c, const nkecc_point* p,
                                     int* on_curve) {
    if (!c || !p || !on_curve) return bad_arg("null argument");
    return guarded([&] { *on_curve = nkecc::is_on_curve(p->v, c->v) ? 1 : 0; });
}

nkecc_status nkecc_point_neg(const nkecc_curve* c, const nkecc_point* p,
                             nkecc_point** out) {
    if (!c || !p || !out) return bad_arg("null argument");
    return guarded([&] { *out = new nkecc_point{nkecc::point_neg(p->v, c->v)}; });
}

nkecc_status nkecc_point_add(const nkecc_curve* c, const nkecc_point* p,
                             const nkecc_point* q,
                             const nkecc_strategy_spec* spec, nkecc_point** out,
                             nkecc_opcount* count) {
    if (!c || !p || !q || !out) return bad_arg("null argument");
    return guarded([&] {
        auto [r, t] = nkecc::point_add(p->v, q->v, c->v, to_spec(spec));
        *out = new nkecc_point{std::move(r)};
        fill_count(count, t);
    });
}

nkecc_status nkecc_point_double(const nkecc_curve* c, const nkecc_point* p,
                                const nkecc_strategy_spec* spec,
                                nkecc_point** out, nkecc_opcount* count) {
    if (!c || !p || !out) return bad_arg("null argument");
    return guarded([&] {
        auto [r, t] = nkecc::point_double(p->v, c->v, to_spec(spec));
        *out = new nkecc_point{std::move(r)};
        fill_count(count, t);
    });
}

nkecc_status nkecc_scalar_mul(const nkecc_curve* c, const nkecc_point* p,
                              const nkecc_nat* n,
                              const nkecc_strategy_spec* spec,
                              nkecc_scalar_method method, nkecc_point** out,
                              nkecc_opcount* count, uint64_t* doublings,
                              uint64_t* additions, char** expansion) {
    if (!c || !p || !n || !out) return bad_arg("null argument");
    return guarded([&] {
        nkecc::ScalarMulResult r =
            method == NKECC_SCALAR_RECURSIVE
                ? nkecc::scalar_mul_recursive(n->v, p->v, c->v, to_spec(spec))
                : nkecc::scalar_mul_binary(n->v, p->v, c->v, to_spec(spec));
        *out = new nkecc_point{std::move(r.point)};
        fill_count(count, r.count);
        if (doublings) *doublings = r.trace.doublings;
        if (additions) *additions = r.trace.additions;
        if (expansion) *expansion = dup_string(nkecc::expansion_string(r.trace));
    });
}

nkecc_status nkecc_repro_tables(char** report) {
    if (!report) return bad_arg("null argument");
    return guarded([&] { *report = dup_string(nkecc::repro_tables()); });
}

nkecc_status nkecc_bench_run(const nkecc_bench_config* cfg,
                             nkecc_bench_record** records, size_t* count) {
    if (!cfg || !records || !count) return bad_arg("null argument");
    return guarded([&] {
        std::vector<nkecc::BenchRecord> rs = nkecc::run_sweep(to_bench_config(cfg));
        auto* out = static_cast<nkecc_bench_record*>(
            std::malloc(sizeof(nkecc_bench_record) * (rs.empty() ? 1 : rs.size())));
        if (!out) throw std::bad_alloc();
        for (std::size_t i = 0; i < rs.size(); ++i) {
            out[i].strategy = static_cast<nkecc_strategy>(rs[i].strategy);
            out[i].radix = rs[i].radix;
            out[i].digit_len = static_cast<uint32_t>(rs[i].digit_len);
            out[i].trial = static_cast<uint32_t>(rs[i].trial);
            fill_count(&out[i].count, rs[i].count);
            out[i].ns = rs[i].ns;
        }
        *records = out;
        *count = rs.size();
    });
}

void nkecc_bench_records_free(nkecc_bench_record* records) {
    std::free(records);
}

namespace {

std::vector<nkecc::BenchRecord> from_c_records(const nkecc_bench_record* records,
                                               size_t count) {
    std::vector<nkecc::BenchRecord> rs;
    rs.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        nkecc::BenchRecord r;
        r.strategy = static_cast<nkecc::StrategyKind>(records[i].strategy);
        r.radix = records[i].radix;
        r.digit_len = records[i].digit_len;
        r.trial = records[i].trial;
        r.count = nkecc::OpCount{records[i].count.mul1, records[i].count.addsub,
                                 records[i].count.shifts};
        r.ns = records[i].ns;
        rs.push_back(std::move(r));
    }
    return rs;
}

} // namespace

nkecc_status nkecc_bench_csv(const nkecc_bench_record* records, size_t count,
                             char** csv) {
    if ((!records && count) || !csv) return bad_arg("null argument");
    return guarded([&] {
        *csv = dup_string(nkecc::bench_csv(from_c_records(records, count)));
    });
}

nkecc_status nkecc_bench_table(const nkecc_bench_record* records, size_t count,
                               const nkecc_bench_config* cfg, char** table) {
    if ((!records && count) || !cfg || !table) return bad_arg("null argument");
    return guarded([&] {
        *table = dup_string(
            nkecc::bench_table(from_c_records(records, count), to_bench_config(cfg)));
    });
}

nkecc_status nkecc_crossover(const nkecc_bench_config* cfg, char** report,
                             char** json) {
    if (!cfg) return bad_arg("null argument");
    return guarded([&] {
        nkecc::CrossoverReport r = nkecc::crossover(to_bench_config(cfg));
        if (report) *report = dup_string(r.text);
        if (json) *json = dup_string(r.json);
    });
}

nkecc_status nkecc_ecc_count_report(const nkecc_curve* c, const nkecc_point* p,
                                    const nkecc_nat* n,
                                    const nkecc_bench_config* cfg,
                                    char** report, char** json) {
    if (!c || !p || !n || !cfg) return bad_arg("null argument");
    return guarded([&] {
        std::string json_text;
        std::string text = nkecc::ecc_count_report(c->v, p->v, n->v,
                                                   to_bench_config(cfg),
                                                   json ? &json_text : nullptr);
        if (report) *report = dup_string(text);
        if (json) *json = dup_string(json_text);
    });
}
