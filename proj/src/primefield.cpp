#include "primefield.hpp"

namespace nkecc {

namespace {

void require_same_modulus(const FieldElement& a, const FieldElement& b) {
    if (!(a.modulus() == b.modulus()))
        throw Error(ErrorCode::ModulusMismatch, "field moduli differ");
}

Natural mul_plain(const Natural& a, const Natural& b) {
    return mul_schoolbook(a, b).product;
}

} // namespace

FieldElement fe_new(const Natural& v, const Natural& p) {
    if (p.digit_len() == 0 ||
        compare(p, Natural::from_u64(2, p.radix())) == Ordering::Less)
        throw Error(ErrorCode::Domain, "modulus must be >= 2");
    if (v.radix() != p.radix())
        throw Error(ErrorCode::RadixMismatch, "value and modulus radices differ");
    auto [q, r] = divrem(v, p);
    (void)q;
    return FieldElement(std::move(r), p);
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
    require_same_modulus(a, b);
    Natural s = add(a.value(), b.value());
    if (compare(s, a.modulus()) != Ordering::Less) s = sub(s, a.modulus());
    return FieldElement(std::move(s), a.modulus());
}

FieldElement fe_sub(const FieldElement& a, const FieldElement& b) {
    require_same_modulus(a, b);
    if (compare(a.value(), b.value()) == Ordering::Less)
        return FieldElement(sub(add(a.value(), a.modulus()), b.value()), a.modulus());
    return FieldElement(sub(a.value(), b.value()), a.modulus());
}

FieldElement fe_neg(const FieldElement& a) {
    if (a.is_zero()) return a;
    return FieldElement(sub(a.modulus(), a.value()), a.modulus());
}

std::pair<FieldElement, OpCount> fe_mul(const FieldElement& a,
                                        const FieldElement& b,
                                        const StrategySpec& spec) {
    require_same_modulus(a, b);
    MulResult m = multiply(a.value(), b.value(), spec);
    auto [q, r] = divrem(m.product, a.modulus());
    (void)q;
    return {FieldElement(std::move(r), a.modulus()), m.count};
}

FieldElement fe_inv(const FieldElement& a) {
    if (a.is_zero())
        throw Error(ErrorCode::NonInvertible, "zero has no inverse");
    const Natural& p = a.modulus();
    const std::uint32_t radix = p.radix();

    Natural r0 = p, r1 = a.value();
    SignedNat t0 = SignedNat::from(Natural::zero(radix));
    SignedNat t1 = SignedNat::from(Natural::from_u64(1, radix));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        // t_next = t0 - q*t1
        SignedNat qt1 = SignedNat::from(mul_plain(q, t1.magnitude), t1.negative);
        qt1.negative = qt1.is_zero() ? false : !qt1.negative;
        SignedNat t_next = signed_add(t0, qt1);
        t0 = std::move(t1);
        t1 = std::move(t_next);
    }
    if (!(r0 == Natural::from_u64(1, radix)))
        throw Error(ErrorCode::NonInvertible,
                    "element shares a factor with the modulus");
    // Normalize the Bezout coefficient into [0, p).
    Natural inv = t0.negative ? sub(p, divrem(t0.magnitude, p).second)
                              : divrem(t0.magnitude, p).second;
    if (compare(inv, p) != Ordering::Less) inv = sub(inv, p);
    return FieldElement(std::move(inv), p);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

} // namespace nkecc
