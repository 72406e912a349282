#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "opcount.hpp"

namespace nkecc {

using digit_t = std::uint32_t;

enum class Ordering { Less, Equal, Greater };

// Radix-parametric non-negative integer. Digits are little-endian (index i
// holds the coefficient of radix^i) and canonical: no most-significant zero
// digit is stored, and the value zero is the empty digit sequence. Values of
// different radices never mix in arithmetic; convert explicitly first.
//
// Instances are immutable after construction and safe to share across
// threads.
class Natural {
public:
    // Zero in radix 10. Prefer Natural::zero(radix) when the radix matters.
    Natural() : radix_(10) {}

    static Natural zero(std::uint32_t radix);
    static Natural from_u64(std::uint64_t value, std::uint32_t radix);

    // Parses digits of `radix` (2..36, letters accepted in either case).
    // Leading zeros are stripped; "0" parses to the canonical empty form.
    static Natural from_text(std::string_view text, std::uint32_t radix);

    // Builds from a little-endian digit vector; strips trailing zeros.
    static Natural from_digits(std::vector<digit_t> digits, std::uint32_t radix);

    std::string to_text() const;

    std::uint32_t radix() const { return radix_; }
    std::size_t digit_len() const { return digits_.size(); }
    bool is_zero() const { return digits_.empty(); }
    digit_t digit(std::size_t i) const { return i < digits_.size() ? digits_[i] : 0; }
    std::span<const digit_t> digits() const { return digits_; }

    // Radix-2 values only; i must be < digit_len().
    int bit_at(std::size_t i) const;

    // Value as u64 if it fits, otherwise nullopt.
    std::optional<std::uint64_t> to_u64() const;

    // Identity comparison (same radix and digits). Numeric comparison with
    // radix checking is compare().
    bool operator==(const Natural&) const = default;

private:
    std::vector<digit_t> digits_;
    std::uint32_t radix_;
};

Ordering compare(const Natural& a, const Natural& b);

Natural add(const Natural& a, const Natural& b, OpCount* tally = nullptr);

// Requires a >= b; underflow is an error (signed work goes through SignedNat).
Natural sub(const Natural& a, const Natural& b, OpCount* tally = nullptr);

// Value a * radix^k. Tallies k shift units for nonzero a.
Natural shift_digits(const Natural& a, std::size_t k, OpCount* tally = nullptr);

// Quotient and remainder with a = q*b + r, 0 <= r < b. Untallied plumbing.
std::pair<Natural, Natural> divrem(const Natural& a, const Natural& b);

// Re-expresses the same value in another radix via repeated division.
Natural convert_radix(const Natural& a, std::uint32_t new_radix);

// Sign-and-magnitude integer; zero magnitude always carries a positive sign.
struct SignedNat {
    bool negative = false;
    Natural magnitude;

    static SignedNat from(Natural magnitude, bool negative = false) {
        if (magnitude.is_zero()) negative = false;
        return SignedNat{negative, std::move(magnitude)};
    }

    bool is_zero() const { return magnitude.is_zero(); }
    bool operator==(const SignedNat&) const = default;
};

SignedNat signed_add(const SignedNat& a, const SignedNat& b, OpCount* tally = nullptr);

// a - b as a signed value.
SignedNat signed_diff(const Natural& a, const Natural& b, OpCount* tally = nullptr);

// Sign of a product: negative iff exactly one factor is negative and neither
// is zero.
bool signed_mul_sign(const SignedNat& a, const SignedNat& b);

std::string signed_to_text(const SignedNat& s);

// Prefix-aware parsing: "0b"/"0B" selects radix 2, "0x"/"0X" parses radix 16,
// bare digits parse as decimal. Hex input is converted to the effective radix
// (radix_override, or 10 when 0). A nonzero radix_override converts any
// parsed value into that radix. detected_radix, when non-null, receives the
// radix of the returned value.
Natural parse_prefixed(std::string_view text, std::uint32_t radix_override,
                       std::uint32_t* detected_radix = nullptr);

} // namespace nkecc
