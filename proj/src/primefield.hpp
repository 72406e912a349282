#pragma once

#include <utility>

#include "natural.hpp"
#include "opcount.hpp"
#include "strategy.hpp"

namespace nkecc {

// Residue modulo p, always held in canonical range [0, p). Primality of p is
// NOT verified at construction; fe_inv reports a NonInvertible error when the
// gcd with the modulus is not 1. Elements only combine when their moduli are
// equal.
class FieldElement {
public:
    FieldElement(Natural value, Natural modulus)
        : value_(std::move(value)), modulus_(std::move(modulus)) {}

    const Natural& value() const { return value_; }
    const Natural& modulus() const { return modulus_; }
    bool is_zero() const { return value_.is_zero(); }

    bool operator==(const FieldElement&) const = default;

private:
    Natural value_;
    Natural modulus_;
};

// Reduces v mod p. p must be >= 2 and share v's radix.
FieldElement fe_new(const Natural& v, const Natural& p);

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b);
FieldElement fe_neg(const FieldElement& a);

// (a*b) mod p with the product computed by the injected strategy and reduced
// by plain division; the tally covers only the multiplication itself.
std::pair<FieldElement, OpCount> fe_mul(const FieldElement& a,
                                        const FieldElement& b,
                                        const StrategySpec& spec);

// Multiplicative inverse by the extended Euclidean algorithm on signed
// naturals. Untallied plumbing: inversion cost is deliberately kept out of
// the multiplication counts.
FieldElement fe_inv(const FieldElement& a);

// Trial-division primality check for desk-scale moduli.
bool is_prime_u64(std::uint64_t n);

} // namespace nkecc
