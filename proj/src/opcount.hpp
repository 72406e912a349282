#pragma once

#include <cstdint>

namespace nkecc {

// Tally of primitive digit operations. The unit of account is a single-digit
// operation in the working radix:
//   mul1   - one digit*digit product (a 2-digit by 1-digit product counts 2),
//   addsub - one digit+digit or digit-digit step, carries and borrows included,
//   shifts - one digit position of shift (multiplying by radix^k counts k).
// Comparisons and copies are not tallied. Counts are accumulated into a
// caller-owned tally threaded through each call; there is no global state.
struct OpCount {
    std::uint64_t mul1 = 0;
    std::uint64_t addsub = 0;
    std::uint64_t shifts = 0;

    OpCount& operator+=(const OpCount& o) {
        mul1 += o.mul1;
        addsub += o.addsub;
        shifts += o.shifts;
        return *this;
    }

    friend OpCount operator+(OpCount a, const OpCount& b) { return a += b; }
    bool operator==(const OpCount&) const = default;

    std::uint64_t total() const { return mul1 + addsub + shifts; }
};

inline void count_addsub(OpCount* t, std::uint64_t n = 1) {
    if (t) t->addsub += n;
}

inline void count_shifts(OpCount* t, std::uint64_t n) {
    if (t) t->shifts += n;
}

inline void count_mul1(OpCount* t) {
    if (t) t->mul1 += 1;
}

} // namespace nkecc
