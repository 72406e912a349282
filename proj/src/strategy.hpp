#pragma once

#include <cstdint>
#include <utility>

#include "natural.hpp"
#include "opcount.hpp"

namespace nkecc {

enum class StrategyKind { Schoolbook, Karatsuba, Nikhilam };

const char* strategy_name(StrategyKind k);
StrategyKind strategy_from_name(std::string_view name);

// Multiplier selection plus recursion thresholds.
//
// karatsuba_threshold: operand lengths below this fall through to schoolbook.
// nikhilam_threshold:  a Nikhilam sub-product recurses only while both base
//                      differences have at least this many digits (and are
//                      strictly shorter than the parent operands); anything
//                      else is handed to nikhilam_fallback.
struct StrategySpec {
    StrategyKind kind = StrategyKind::Schoolbook;
    std::size_t karatsuba_threshold = 2;
    std::size_t nikhilam_threshold = 2;
    StrategyKind nikhilam_fallback = StrategyKind::Schoolbook;

    static StrategySpec make(StrategyKind kind) {
        StrategySpec s;
        s.kind = kind;
        return s;
    }

    void validate() const;
};

struct MulResult {
    Natural product;
    OpCount count;
};

// The decomposition m = base + a, n = base + b against a shared power of the
// radix, with cross = m + b = n + a. Multiplying by the base is a digit
// shift, so m*n = shift(cross, k) + a*b.
struct BaseDecomposition {
    std::size_t base_exponent = 0; // k with base = radix^k
    Natural base;
    SignedNat a;
    SignedNat b;
    Natural cross;
};

// One digit*digit product: hi*radix + lo = d1*d2. Tallies exactly one mul1.
std::pair<digit_t, digit_t> mul_primitive(digit_t d1, digit_t d2,
                                          std::uint32_t radix,
                                          OpCount* tally = nullptr);

// Long multiplication; mul1 is exactly digit_len(a)*digit_len(b) for nonzero
// operands, zero operands short-circuit to an empty tally.
MulResult mul_schoolbook(const Natural& a, const Natural& b);

// Divide and conquer with split point floor(max_len/2) and the difference
// form of the middle term: |a1-a0|*|b1-b0|, three sub-products per level.
MulResult mul_karatsuba(const Natural& a, const Natural& b,
                        const StrategySpec& spec = StrategySpec::make(StrategyKind::Karatsuba));

// Chooses the shared base radix^k, k in {L-1, L} for L = max digit length,
// minimizing the larger absolute base difference; ties resolve to L-1.
// Stored differences are operand - base. Requires nonzero operands and L >= 2.
BaseDecomposition nikhilam_base(const Natural& a, const Natural& b,
                                OpCount* tally = nullptr);

// Base-complement multiplication: m*n = shift(cross, k) + a*b with a signed
// sub-product. Single-digit pairs go straight to mul_primitive.
MulResult mul_nikhilam(const Natural& a, const Natural& b,
                       const StrategySpec& spec = StrategySpec::make(StrategyKind::Nikhilam));

// Dispatch on spec.kind; the product is strategy-independent.
MulResult multiply(const Natural& a, const Natural& b, const StrategySpec& spec);

} // namespace nkecc
