#include "strategy.hpp"

#include <algorithm>
#include <cassert>

namespace nkecc {

namespace {

void require_same_radix(const Natural& a, const Natural& b) {
    if (a.radix() != b.radix())
        throw Error(ErrorCode::RadixMismatch, "operand radices differ");
}

// Digits [0, m2) of x, canonicalized.
Natural low_part(const Natural& x, std::size_t m2) {
    const auto d = x.digits();
    const std::size_t n = std::min(m2, d.size());
    return Natural::from_digits({d.begin(), d.begin() + n}, x.radix());
}

// Digits [m2, len) of x, zero when x is shorter than m2.
Natural high_part(const Natural& x, std::size_t m2) {
    const auto d = x.digits();
    if (d.size() <= m2) return Natural::zero(x.radix());
    return Natural::from_digits({d.begin() + m2, d.end()}, x.radix());
}

Natural schoolbook_rec(const Natural& a, const Natural& b, OpCount& t) {
    if (a.is_zero() || b.is_zero()) return Natural::zero(a.radix());
    const std::uint64_t radix = a.radix();
    const auto da = a.digits(), db = b.digits();
    std::vector<digit_t> acc(da.size() + db.size(), 0);
    for (std::size_t i = 0; i < da.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < db.size(); ++j) {
            auto [lo, hi] = mul_primitive(da[i], db[j], a.radix(), &t);
            std::uint64_t s = static_cast<std::uint64_t>(acc[i + j]) + lo;
            t.addsub += 1;
            if (carry) {
                s += carry;
                t.addsub += 1;
            }
            acc[i + j] = static_cast<digit_t>(s % radix);
            carry = hi + s / radix;
        }
        std::size_t k = i + db.size();
        while (carry) {
            std::uint64_t s = acc[k] + carry;
            t.addsub += 1;
            acc[k] = static_cast<digit_t>(s % radix);
            carry = s / radix;
            ++k;
        }
    }
    return Natural::from_digits(std::move(acc), a.radix());
}

Natural karatsuba_rec(const Natural& a, const Natural& b,
                      const StrategySpec& spec, OpCount& t) {
    if (a.is_zero() || b.is_zero()) return Natural::zero(a.radix());
    const std::size_t len = std::max(a.digit_len(), b.digit_len());
    if (len == 1 || len < spec.karatsuba_threshold)
        return schoolbook_rec(a, b, t);

    const std::size_t m2 = len / 2;
    const Natural a0 = low_part(a, m2), a1 = high_part(a, m2);
    const Natural b0 = low_part(b, m2), b1 = high_part(b, m2);

    const Natural z0 = karatsuba_rec(a0, b0, spec, t);
    const Natural z2 = karatsuba_rec(a1, b1, spec, t);

    // Middle term via differences: a1*b0 + a0*b1 = z2 + z0 - (a1-a0)(b1-b0).
    const SignedNat da = signed_diff(a1, a0, &t);
    const SignedNat db = signed_diff(b1, b0, &t);
    const Natural rmag = karatsuba_rec(da.magnitude, db.magnitude, spec, t);
    const bool r_negative = signed_mul_sign(da, db);

    Natural z1 = add(z0, z2, &t);
    z1 = r_negative ? add(z1, rmag, &t) : sub(z1, rmag, &t);

    Natural result = add(shift_digits(z2, 2 * m2, &t), shift_digits(z1, m2, &t), &t);
    return add(result, z0, &t);
}

Natural nikhilam_rec(const Natural& m, const Natural& n,
                     const StrategySpec& spec, OpCount& t);

Natural dispatch_fallback(const Natural& a, const Natural& b,
                          const StrategySpec& spec, OpCount& t) {
    if (spec.nikhilam_fallback == StrategyKind::Karatsuba)
        return karatsuba_rec(a, b, spec, t);
    return schoolbook_rec(a, b, t);
}

Natural nikhilam_rec(const Natural& m, const Natural& n,
                     const StrategySpec& spec, OpCount& t) {
    if (m.is_zero() || n.is_zero()) return Natural::zero(m.radix());
    const std::size_t lm = m.digit_len(), ln = n.digit_len();
    if (lm == 1 && ln == 1) {
        auto [lo, hi] = mul_primitive(m.digit(0), n.digit(0), m.radix(), &t);
        return Natural::from_digits({lo, hi}, m.radix());
    }

    const std::size_t len = std::max(lm, ln);
    const BaseDecomposition dec = nikhilam_base(m, n, &t);
    const Natural& am = dec.a.magnitude;
    const Natural& bm = dec.b.magnitude;
    const std::size_t wa = am.digit_len(), wb = bm.digit_len();

    // In radix 2 the shared base always shrinks both differences by at least
    // one bit; a violation here means the base selection is broken.
    if (m.radix() == 2 && (wa > len - 1 || wb > len - 1))
        throw Error(ErrorCode::Domain,
                    "binary base difference failed to shrink at length " +
                        std::to_string(len));

    Natural sub_mag;
    if (am.is_zero() || bm.is_zero()) {
        sub_mag = Natural::zero(m.radix());
    } else if (wa == 1 && wb == 1) {
        auto [lo, hi] = mul_primitive(am.digit(0), bm.digit(0), m.radix(), &t);
        sub_mag = Natural::from_digits({lo, hi}, m.radix());
    } else if (wa >= spec.nikhilam_threshold && wb >= spec.nikhilam_threshold &&
               wa < len && wb < len) {
        sub_mag = nikhilam_rec(am, bm, spec, t);
    } else {
        sub_mag = dispatch_fallback(am, bm, spec, t);
    }

    const Natural shifted = shift_digits(dec.cross, dec.base_exponent, &t);
    if (signed_mul_sign(dec.a, dec.b))
        return sub(shifted, sub_mag, &t);
    return add(shifted, sub_mag, &t);
}

} // namespace

const char* strategy_name(StrategyKind k) {
    switch (k) {
    case StrategyKind::Schoolbook: return "schoolbook";
    case StrategyKind::Karatsuba: return "karatsuba";
    case StrategyKind::Nikhilam: return "nikhilam";
    }
    return "?";
}

StrategyKind strategy_from_name(std::string_view name) {
    if (name == "schoolbook") return StrategyKind::Schoolbook;
    if (name == "karatsuba") return StrategyKind::Karatsuba;
    if (name == "nikhilam") return StrategyKind::Nikhilam;
    throw Error(ErrorCode::BadConfig, "unknown strategy: " + std::string(name));
}

void StrategySpec::validate() const {
    if (karatsuba_threshold < 1)
        throw Error(ErrorCode::BadConfig, "karatsuba_threshold must be >= 1");
    if (nikhilam_threshold < 2)
        throw Error(ErrorCode::BadConfig, "nikhilam_threshold must be >= 2");
    if (nikhilam_fallback == StrategyKind::Nikhilam)
        throw Error(ErrorCode::BadConfig, "nikhilam cannot be its own fallback");
}

std::pair<digit_t, digit_t> mul_primitive(digit_t d1, digit_t d2,
                                          std::uint32_t radix, OpCount* tally) {
    if (d1 >= radix || d2 >= radix)
        throw Error(ErrorCode::Domain, "digit out of range for radix");
    count_mul1(tally);
    const std::uint64_t p = static_cast<std::uint64_t>(d1) * d2;
    if (p < radix) return {static_cast<digit_t>(p), 0};
    return {static_cast<digit_t>(p % radix), static_cast<digit_t>(p / radix)};
}

MulResult mul_schoolbook(const Natural& a, const Natural& b) {
    require_same_radix(a, b);
    MulResult r;
    r.product = schoolbook_rec(a, b, r.count);
    return r;
}

MulResult mul_karatsuba(const Natural& a, const Natural& b, const StrategySpec& spec) {
    require_same_radix(a, b);
    spec.validate();
    MulResult r;
    r.product = karatsuba_rec(a, b, spec, r.count);
    return r;
}

BaseDecomposition nikhilam_base(const Natural& a, const Natural& b, OpCount* tally) {
    require_same_radix(a, b);
    if (a.is_zero() || b.is_zero())
        throw Error(ErrorCode::Domain, "base decomposition needs nonzero operands");
    const std::size_t len = std::max(a.digit_len(), b.digit_len());
    if (len < 2)
        throw Error(ErrorCode::Domain,
                    "base decomposition needs an operand of length >= 2");

    struct Candidate {
        std::size_t k;
        Natural base;
        SignedNat da, db;
        OpCount cost;
    };
    auto make_candidate = [&](std::size_t k) {
        Candidate c;
        c.k = k;
        c.base = shift_digits(Natural::from_u64(1, a.radix()), k);
        c.da = signed_diff(a, c.base, &c.cost);
        c.db = signed_diff(b, c.base, &c.cost);
        return c;
    };
    auto max_mag = [](const Candidate& c) -> const Natural& {
        return compare(c.da.magnitude, c.db.magnitude) == Ordering::Less
                   ? c.db.magnitude
                   : c.da.magnitude;
    };

    Candidate lowc = make_candidate(len - 1);
    Candidate highc = make_candidate(len);
    // Ties go to the smaller base.
    Candidate& chosen =
        compare(max_mag(highc), max_mag(lowc)) == Ordering::Less ? highc : lowc;

    if (tally) *tally += chosen.cost;

    BaseDecomposition dec;
    dec.base_exponent = chosen.k;
    dec.base = std::move(chosen.base);
    dec.a = std::move(chosen.da);
    dec.b = std::move(chosen.db);
    // cross = a + (b - base); always a positive value for the chosen base.
    dec.cross = dec.b.negative ? sub(a, dec.b.magnitude, tally)
                               : add(a, dec.b.magnitude, tally);
    return dec;
}

MulResult mul_nikhilam(const Natural& a, const Natural& b, const StrategySpec& spec) {
    require_same_radix(a, b);
    spec.validate();
    MulResult r;
    r.product = nikhilam_rec(a, b, spec, r.count);
    return r;
}

MulResult multiply(const Natural& a, const Natural& b, const StrategySpec& spec) {
    switch (spec.kind) {
    case StrategyKind::Schoolbook: return mul_schoolbook(a, b);
    case StrategyKind::Karatsuba: return mul_karatsuba(a, b, spec);
    case StrategyKind::Nikhilam: return mul_nikhilam(a, b, spec);
    }
    throw Error(ErrorCode::BadConfig, "unknown strategy kind");
}

} // namespace nkecc
