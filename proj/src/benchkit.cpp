#include "benchkit.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

namespace nkecc {

namespace {

using json = nlohmann::json;

std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

// Deterministic helper over the standard engine; std::uniform_int_distribution
// is implementation-defined, and identical records across toolchains matter
// more here than perfect uniformity.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t below(std::uint64_t n) { return n ? gen_() % n : 0; }

private:
    std::mt19937_64 gen_;
};

// radix^exp, saturating at UINT64_MAX.
std::uint64_t pow_sat(std::uint64_t radix, std::size_t exp) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > UINT64_MAX / radix) return UINT64_MAX;
        v *= radix;
    }
    return v;
}

Natural sample_uniform(std::size_t len, std::uint32_t radix, Rng& rng) {
    if (len == 0) return Natural::zero(radix);
    std::vector<digit_t> d(len);
    for (std::size_t i = 0; i + 1 < len; ++i)
        d[i] = static_cast<digit_t>(rng.below(radix));
    d[len - 1] = static_cast<digit_t>(1 + rng.below(radix - 1));
    return Natural::from_digits(std::move(d), radix);
}

Natural sample_near_base(std::size_t len, std::uint32_t radix,
                         std::uint64_t distance, Rng& rng) {
    const Natural base = shift_digits(Natural::from_u64(1, radix), len - 1);
    const Natural offset = Natural::from_u64(rng.below(distance + 1), radix);
    if (rng.below(2) == 0) return add(base, offset);
    return sub(base, offset);
}

Natural sample_operand(const BenchConfig& cfg, std::size_t len, Rng& rng) {
    if (cfg.sampler == Sampler::NearBase)
        return sample_near_base(len, cfg.radix, cfg.nearbase_distance, rng);
    return sample_uniform(len, cfg.radix, rng);
}

const char* sampler_name(Sampler s) {
    return s == Sampler::NearBase ? "nearbase" : "uniform";
}

struct Means {
    double mul1 = 0, addsub = 0, shifts = 0, ns = 0;
    std::size_t n = 0;

    void accumulate(const BenchRecord& r) {
        mul1 += static_cast<double>(r.count.mul1);
        addsub += static_cast<double>(r.count.addsub);
        shifts += static_cast<double>(r.count.shifts);
        ns += static_cast<double>(r.ns);
        n += 1;
    }
    double mean_mul1() const { return mul1 / static_cast<double>(n); }
    double mean_addsub() const { return addsub / static_cast<double>(n); }
    double mean_shifts() const { return shifts / static_cast<double>(n); }
    double mean_ns() const { return ns / static_cast<double>(n); }
};

std::map<std::pair<StrategyKind, std::size_t>, Means>
group_means(std::span<const BenchRecord> records) {
    std::map<std::pair<StrategyKind, std::size_t>, Means> m;
    for (const auto& r : records) m[{r.strategy, r.digit_len}].accumulate(r);
    return m;
}

void check(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::Domain, "table reproduction failed: " + what);
}

} // namespace

void BenchConfig::validate() const {
    if (radix < 2) throw Error(ErrorCode::BadConfig, "radix must be >= 2");
    if (min_len < 1 || min_len > max_len)
        throw Error(ErrorCode::BadConfig, "size range must satisfy 1 <= min <= max");
    if (step < 1) throw Error(ErrorCode::BadConfig, "step must be >= 1");
    if (trials < 1) throw Error(ErrorCode::BadConfig, "trials must be >= 1");
    if (strategies.empty())
        throw Error(ErrorCode::BadConfig, "at least one strategy required");
    if (sampler == Sampler::NearBase &&
        nearbase_distance >= pow_sat(radix, min_len - 1))
        throw Error(ErrorCode::BadConfig,
                    "near-base distance must stay below radix^(len-1) for every "
                    "swept length");
    spec_for(StrategyKind::Nikhilam).validate();
}

StrategySpec BenchConfig::spec_for(StrategyKind kind) const {
    StrategySpec s;
    s.kind = kind;
    s.karatsuba_threshold = karatsuba_threshold;
    s.nikhilam_threshold = nikhilam_threshold;
    s.nikhilam_fallback = nikhilam_fallback;
    return s;
}

std::string repro_tables() {
    std::ostringstream out;
    const StrategySpec nik = StrategySpec::make(StrategyKind::Nikhilam);

    // Worked example 1: 107 * 109 in base 10.
    {
        const Natural m = Natural::from_text("107", 10);
        const Natural n = Natural::from_text("109", 10);
        const BaseDecomposition dec = nikhilam_base(m, n);
        const MulResult nr = mul_nikhilam(m, n, nik);
        const MulResult sr = mul_schoolbook(m, n);
        const Natural ab = mul_schoolbook(dec.a.magnitude, dec.b.magnitude).product;

        check(nr.product.to_text() == "11663", "107*109 product");
        check(dec.cross.to_text() == "116", "107*109 cross sum");
        check(ab.to_text() == "63", "107*109 sub-product");
        check(nr.count.mul1 == 1, "107*109 nikhilam mul1");
        check(sr.count.mul1 == 9, "107*109 schoolbook mul1");

        // Differences are displayed base-minus-operand, as classically written.
        const SignedNat da = signed_diff(dec.base, m);
        const SignedNat db = signed_diff(dec.base, n);
        out << "Table I: multiplication of 107 * 109 (radix 10)\n";
        out << "              Integer                      Base Difference\n";
        out << "Multiplicand  107                          (100-107)= " << signed_to_text(da) << "\n";
        out << "Multiplier    109                          (100-109)= " << signed_to_text(db) << "\n";
        out << "Computation   (107-(-9))=(109-(-7))=" << dec.cross.to_text()
            << "    (-7)*(-9)=" << ab.to_text() << "\n";
        out << "              " << dec.cross.to_text() << "                          "
            << ab.to_text() << "\n";
        out << "Result        " << nr.product.to_text() << "\n";
        out << "counts: nikhilam mul1=" << nr.count.mul1
            << "  schoolbook mul1=" << sr.count.mul1 << "\n\n";
    }

    // Worked example 2: 11 * 11 in base 2.
    {
        const Natural m = Natural::from_text("11", 2);
        const Natural n = Natural::from_text("11", 2);
        const BaseDecomposition dec = nikhilam_base(m, n);
        const MulResult nr = mul_nikhilam(m, n, nik);
        const Natural ab = mul_schoolbook(dec.a.magnitude, dec.b.magnitude).product;

        check(nr.product.to_text() == "1001", "11*11 product");
        check(dec.cross.to_text() == "100", "11*11 cross sum");
        check(ab.to_text() == "1", "11*11 sub-product");
        check(nr.count.mul1 == 1, "11*11 nikhilam mul1");

        out << "Table II: binary multiplication of 11 * 11 (radix 2)\n";
        out << "              Bits            Base Difference\n";
        out << "Multiplicand  11              (11-10)=" << signed_to_text(dec.a) << "\n";
        out << "Multiplier    11              (11-10)=" << signed_to_text(dec.b) << "\n";
        out << "Computation   (11+1)=" << dec.cross.to_text()
            << "     (1*1)=" << ab.to_text() << "\n";
        out << "Result        " << nr.product.to_text() << "\n";
        out << "counts: nikhilam mul1=" << nr.count.mul1 << "\n\n";
    }

    // Worked example 3: 101 * 110 in base 2.
    {
        const Natural m = Natural::from_text("101", 2);
        const Natural n = Natural::from_text("110", 2);
        const BaseDecomposition dec = nikhilam_base(m, n);
        const MulResult nr = mul_nikhilam(m, n, nik);
        const MulResult sr = mul_schoolbook(m, n);
        const Natural ab = mul_schoolbook(dec.a.magnitude, dec.b.magnitude).product;

        check(nr.product.to_text() == "11110", "101*110 product");
        check(dec.cross.to_text() == "111", "101*110 cross sum");
        check(ab.to_text() == "10", "101*110 sub-product");
        check(nr.count.mul1 == 2, "101*110 nikhilam mul1");
        check(sr.count.mul1 == 9, "101*110 schoolbook mul1");

        out << "Table III: binary multiplication of 101 * 110 (radix 2)\n";
        out << "              Bits             Base Difference\n";
        out << "Multiplicand  101              (101-100)=" << signed_to_text(dec.a) << "\n";
        out << "Multiplier    110              (110-100)=" << signed_to_text(dec.b) << "\n";
        out << "Computation   (101+10)=" << dec.cross.to_text()
            << "    (10*1)=" << ab.to_text() << "\n";
        out << "Result        " << nr.product.to_text() << "\n";
        out << "counts: nikhilam mul1=" << nr.count.mul1
            << "  schoolbook mul1=" << sr.count.mul1 << "\n";
    }

    return out.str();
}

std::vector<BenchRecord> run_sweep(const BenchConfig& cfg) {
    cfg.validate();
    std::vector<BenchRecord> out;
    Rng rng(cfg.seed);
    for (std::size_t len = cfg.min_len; len <= cfg.max_len; len += cfg.step) {
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            const Natural m = sample_operand(cfg, len, rng);
            const Natural n = sample_operand(cfg, len, rng);
            const Natural oracle = mul_schoolbook(m, n).product;
            for (StrategyKind kind : cfg.strategies) {
                const StrategySpec spec = cfg.spec_for(kind);
                const std::uint64_t t0 = now_ns();
                const MulResult r = multiply(m, n, spec);
                const std::uint64_t t1 = now_ns();
                if (!(r.product == oracle))
                    throw Error(ErrorCode::Domain,
                                std::string("product mismatch for ") +
                                    strategy_name(kind) + " at " +
                                    m.to_text() + " * " + n.to_text());
                out.push_back(BenchRecord{kind, cfg.radix, len, trial, r.count,
                                          t1 - t0});
            }
        }
    }
    return out;
}

std::string bench_csv(std::span<const BenchRecord> records) {
    std::ostringstream out;
    out << "strategy,radix,digit_len,trial,mul1,addsub,shifts,ns\n";
    for (const auto& r : records) {
        out << strategy_name(r.strategy) << ',' << r.radix << ',' << r.digit_len
            << ',' << r.trial << ',' << r.count.mul1 << ',' << r.count.addsub
            << ',' << r.count.shifts << ',' << r.ns << '\n';
    }
    return out.str();
}

std::string bench_table(std::span<const BenchRecord> records, const BenchConfig& cfg) {
    std::ostringstream out;
    out << "sweep: radix=" << cfg.radix << " sizes=" << cfg.min_len << ".."
        << cfg.max_len << " step=" << cfg.step << " trials=" << cfg.trials
        << " sampler=" << sampler_name(cfg.sampler);
    if (cfg.sampler == Sampler::NearBase)
        out << ":" << cfg.nearbase_distance;
    out << " seed=" << cfg.seed << "\n";
    out << std::left << std::setw(12) << "strategy" << std::right
        << std::setw(10) << "digit_len" << std::setw(14) << "mean_mul1"
        << std::setw(14) << "mean_addsub" << std::setw(14) << "mean_shifts"
        << std::setw(14) << "mean_ns" << "\n";
    for (const auto& [key, m] : group_means(records)) {
        out << std::left << std::setw(12) << strategy_name(key.first)
            << std::right << std::setw(10) << key.second << std::fixed
            << std::setprecision(1) << std::setw(14) << m.mean_mul1()
            << std::setw(14) << m.mean_addsub() << std::setw(14)
            << m.mean_shifts() << std::setw(14) << m.mean_ns() << "\n";
    }
    return out.str();
}

CrossoverReport crossover(const BenchConfig& cfg) {
    std::vector<std::size_t> sizes;
    for (std::size_t len = cfg.min_len; len <= cfg.max_len; len += cfg.step)
        sizes.push_back(len);
    if (sizes.size() < 3)
        throw Error(ErrorCode::BadConfig, "crossover needs >= 3 sizes");

    const std::vector<BenchRecord> records = run_sweep(cfg);
    const auto means = group_means(records);

    json j;
    j["seed"] = cfg.seed;
    j["radix"] = cfg.radix;
    j["sampler"] = sampler_name(cfg.sampler);
    j["sizes"] = sizes;
    j["crossovers"] = json::array();

    std::ostringstream out;
    out << "crossover: radix=" << cfg.radix << " sampler="
        << sampler_name(cfg.sampler) << " seed=" << cfg.seed << "\n";

    struct Metric {
        const char* name;
        double (Means::*mean)() const;
    };
    const Metric metrics[] = {{"mul1", &Means::mean_mul1},
                              {"ns", &Means::mean_ns}};
    for (const auto& metric : metrics) {
        for (StrategyKind s1 : cfg.strategies) {
            for (StrategyKind s2 : cfg.strategies) {
                if (s1 == s2) continue;
                std::optional<std::size_t> first;
                for (std::size_t len : sizes) {
                    const auto it1 = means.find({s1, len});
                    const auto it2 = means.find({s2, len});
                    if (it1 == means.end() || it2 == means.end()) continue;
                    if ((it1->second.*metric.mean)() < (it2->second.*metric.mean)()) {
                        first = len;
                        break;
                    }
                }
                out << "  " << metric.name << ": " << strategy_name(s1)
                    << " beats " << strategy_name(s2);
                if (first)
                    out << " from size " << *first << "\n";
                else
                    out << ": none in range\n";
                json entry;
                entry["metric"] = metric.name;
                entry["strategy"] = strategy_name(s1);
                entry["baseline"] = strategy_name(s2);
                if (first)
                    entry["size"] = *first;
                else
                    entry["size"] = nullptr;
                j["crossovers"].push_back(entry);
            }
        }
    }
    return CrossoverReport{out.str(), j.dump(2)};
}

std::string ecc_count_report(const CurveParams& curve, const Point& P,
                             const Natural& n, const BenchConfig& cfg,
                             std::string* json_out) {
    if (!is_on_curve(P, curve))
        throw Error(ErrorCode::NotOnCurve, "base point is not on the curve");
    CurveParams inner = curve;
    inner.validate_inputs = false; // checked once above; keep timings honest

    struct Row {
        StrategyKind kind;
        OpCount count;
        std::uint64_t doublings, additions, ns;
        Point point;
    };
    std::vector<Row> rows;
    for (StrategyKind kind : cfg.strategies) {
        const StrategySpec spec = cfg.spec_for(kind);
        const std::uint64_t t0 = now_ns();
        ScalarMulResult r = scalar_mul_binary(n, P, inner, spec);
        const std::uint64_t t1 = now_ns();
        rows.push_back(Row{kind, r.count, r.trace.doublings, r.trace.additions,
                           t1 - t0, std::move(r.point)});
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (!(rows[i].point == rows[0].point))
            throw Error(ErrorCode::Domain,
                        "strategies disagree on the scalar multiple");

    std::ostringstream out;
    out << "scalar-mult cost: n=" << n.to_text() << " point="
        << point_to_text(P) << " p=" << curve.p.to_text()
        << " radix=" << curve.p.radix() << "\n";
    out << "result: " << point_to_text(rows.empty() ? P : rows[0].point) << "\n";
    out << std::left << std::setw(12) << "strategy" << std::right
        << std::setw(12) << "mul1" << std::setw(12) << "addsub" << std::setw(12)
        << "shifts" << std::setw(11) << "doublings" << std::setw(11)
        << "additions" << std::setw(14) << "ns" << "\n";
    json j;
    j["n"] = n.to_text();
    j["point"] = point_to_text(P);
    j["p"] = curve.p.to_text();
    j["radix"] = curve.p.radix();
    j["result"] = rows.empty() ? point_to_text(P) : point_to_text(rows[0].point);
    j["strategies"] = json::array();
    for (const auto& r : rows) {
        out << std::left << std::setw(12) << strategy_name(r.kind) << std::right
            << std::setw(12) << r.count.mul1 << std::setw(12) << r.count.addsub
            << std::setw(12) << r.count.shifts << std::setw(11) << r.doublings
            << std::setw(11) << r.additions << std::setw(14) << r.ns << "\n";
        json entry;
        entry["strategy"] = strategy_name(r.kind);
        entry["mul1"] = r.count.mul1;
        entry["addsub"] = r.count.addsub;
        entry["shifts"] = r.count.shifts;
        entry["doublings"] = r.doublings;
        entry["additions"] = r.additions;
        entry["ns"] = r.ns;
        j["strategies"].push_back(entry);
    }
    if (json_out) *json_out = j.dump(2);
    return out.str();
}

} // namespace nkecc
