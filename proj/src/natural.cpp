#include "natural.hpp"

#include <algorithm>
#include <cctype>

namespace nkecc {

namespace {

void strip_trailing_zeros(std::vector<digit_t>& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

void require_radix(std::uint32_t radix) {
    if (radix < 2)
        throw Error(ErrorCode::Domain, "radix must be at least 2");
}

void require_same_radix(const Natural& a, const Natural& b) {
    if (a.radix() != b.radix())
        throw Error(ErrorCode::RadixMismatch,
                    "radix mismatch: " + std::to_string(a.radix()) + " vs " +
                        std::to_string(b.radix()));
}

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    return -1;
}

char digit_char(digit_t d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
}

// a * d for a single digit d, untallied (division plumbing).
Natural mul_by_digit(const Natural& a, std::uint64_t d) {
    if (d == 0 || a.is_zero()) return Natural::zero(a.radix());
    const std::uint64_t radix = a.radix();
    std::vector<digit_t> out;
    out.reserve(a.digit_len() + 1);
    std::uint64_t carry = 0;
    for (digit_t ad : a.digits()) {
        std::uint64_t v = static_cast<std::uint64_t>(ad) * d + carry;
        out.push_back(static_cast<digit_t>(v % radix));
        carry = v / radix;
    }
    while (carry) {
        out.push_back(static_cast<digit_t>(carry % radix));
        carry /= radix;
    }
    return Natural::from_digits(std::move(out), a.radix());
}

} // namespace

Natural Natural::zero(std::uint32_t radix) {
    require_radix(radix);
    Natural n;
    n.radix_ = radix;
    return n;
}

Natural Natural::from_u64(std::uint64_t value, std::uint32_t radix) {
    require_radix(radix);
    Natural n = zero(radix);
    while (value) {
        n.digits_.push_back(static_cast<digit_t>(value % radix));
        value /= radix;
    }
    return n;
}

Natural Natural::from_text(std::string_view text, std::uint32_t radix) {
    require_radix(radix);
    if (radix > 36)
        throw Error(ErrorCode::Domain, "text form supports radix 2..36");
    if (text.empty())
        throw Error(ErrorCode::ParseError, "empty number");
    std::vector<digit_t> d;
    d.reserve(text.size());
    for (auto it = text.rbegin(); it != text.rend(); ++it) {
        int v = digit_value(*it);
        if (v < 0 || static_cast<std::uint32_t>(v) >= radix)
            throw Error(ErrorCode::ParseError,
                        std::string("invalid digit '") + *it + "' for radix " +
                            std::to_string(radix));
        d.push_back(static_cast<digit_t>(v));
    }
    return from_digits(std::move(d), radix);
}

Natural Natural::from_digits(std::vector<digit_t> digits, std::uint32_t radix) {
    require_radix(radix);
    for (digit_t d : digits)
        if (d >= radix)
            throw Error(ErrorCode::Domain, "digit out of range for radix");
    strip_trailing_zeros(digits);
    Natural n;
    n.digits_ = std::move(digits);
    n.radix_ = radix;
    return n;
}

std::string Natural::to_text() const {
    if (radix_ > 36)
        throw Error(ErrorCode::Domain, "text form supports radix 2..36");
    if (is_zero()) return "0";
    std::string s;
    s.reserve(digits_.size());
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it)
        s.push_back(digit_char(*it));
    return s;
}

int Natural::bit_at(std::size_t i) const {
    if (radix_ != 2)
        throw Error(ErrorCode::Domain, "bit_at requires radix 2");
    if (i >= digits_.size())
        throw Error(ErrorCode::Domain, "bit index out of range");
    return static_cast<int>(digits_[i]);
}

std::optional<std::uint64_t> Natural::to_u64() const {
    std::uint64_t v = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        if (v > (UINT64_MAX - *it) / radix_) return std::nullopt;
        v = v * radix_ + *it;
    }
    return v;
}

Ordering compare(const Natural& a, const Natural& b) {
    require_same_radix(a, b);
    if (a.digit_len() != b.digit_len())
        return a.digit_len() < b.digit_len() ? Ordering::Less : Ordering::Greater;
    const auto da = a.digits(), db = b.digits();
    for (std::size_t i = da.size(); i-- > 0;) {
        if (da[i] != db[i]) return da[i] < db[i] ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

Natural add(const Natural& a, const Natural& b, OpCount* tally) {
    require_same_radix(a, b);
    const std::uint64_t radix = a.radix();
    const std::size_t la = a.digit_len(), lb = b.digit_len();
    const std::size_t n = std::max(la, lb);
    std::vector<digit_t> out;
    out.reserve(n + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s;
        if (i < la && i < lb) {
            s = static_cast<std::uint64_t>(a.digit(i)) + b.digit(i);
            count_addsub(tally);
        } else {
            s = i < la ? a.digit(i) : b.digit(i);
        }
        if (carry) {
            s += carry;
            count_addsub(tally);
        }
        if (s >= radix) {
            out.push_back(static_cast<digit_t>(s - radix));
            carry = 1;
        } else {
            out.push_back(static_cast<digit_t>(s));
            carry = 0;
        }
    }
    if (carry) out.push_back(1);
    return Natural::from_digits(std::move(out), a.radix());
}

Natural sub(const Natural& a, const Natural& b, OpCount* tally) {
    require_same_radix(a, b);
    if (compare(a, b) == Ordering::Less)
        throw Error(ErrorCode::Underflow, "subtraction underflow");
    const std::int64_t radix = a.radix();
    const std::size_t la = a.digit_len(), lb = b.digit_len();
    std::vector<digit_t> out;
    out.reserve(la);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < la; ++i) {
        std::int64_t d = a.digit(i);
        if (i < lb) {
            d -= b.digit(i);
            count_addsub(tally);
        }
        if (borrow) {
            d -= borrow;
            count_addsub(tally);
        }
        if (d < 0) {
            d += radix;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<digit_t>(d));
    }
    return Natural::from_digits(std::move(out), a.radix());
}

Natural shift_digits(const Natural& a, std::size_t k, OpCount* tally) {
    if (a.is_zero() || k == 0) return a;
    std::vector<digit_t> out(k, 0);
    out.insert(out.end(), a.digits().begin(), a.digits().end());
    count_shifts(tally, k);
    return Natural::from_digits(std::move(out), a.radix());
}

std::pair<Natural, Natural> divrem(const Natural& a, const Natural& b) {
    require_same_radix(a, b);
    if (b.is_zero())
        throw Error(ErrorCode::DivisionByZero, "division by zero");
    if (compare(a, b) == Ordering::Less)
        return {Natural::zero(a.radix()), a};

    const std::uint64_t radix = a.radix();
    const std::size_t la = a.digit_len();
    std::vector<digit_t> q(la, 0);
    Natural rem = Natural::zero(a.radix());
    for (std::size_t i = la; i-- > 0;) {
        // rem = rem * radix + a[i]
        std::vector<digit_t> rd(rem.digits().begin(), rem.digits().end());
        rd.insert(rd.begin(), a.digit(i));
        rem = Natural::from_digits(std::move(rd), a.radix());
        // Largest digit d with b*d <= rem, by binary search.
        std::uint64_t lo = 0, hi = radix - 1;
        while (lo < hi) {
            std::uint64_t mid = lo + (hi - lo + 1) / 2;
            if (compare(mul_by_digit(b, mid), rem) != Ordering::Greater)
                lo = mid;
            else
                hi = mid - 1;
        }
        q[i] = static_cast<digit_t>(lo);
        if (lo) rem = sub(rem, mul_by_digit(b, lo));
    }
    return {Natural::from_digits(std::move(q), a.radix()), rem};
}

Natural convert_radix(const Natural& a, std::uint32_t new_radix) {
    require_radix(new_radix);
    if (a.radix() == new_radix) return a;
    std::vector<digit_t> out;
    Natural cur = a;
    const Natural divisor = Natural::from_u64(new_radix, a.radix());
    while (!cur.is_zero()) {
        auto [quot, rem] = divrem(cur, divisor);
        out.push_back(static_cast<digit_t>(rem.to_u64().value()));
        cur = std::move(quot);
    }
    return Natural::from_digits(std::move(out), new_radix);
}

SignedNat signed_add(const SignedNat& a, const SignedNat& b, OpCount* tally) {
    if (a.negative == b.negative)
        return SignedNat::from(add(a.magnitude, b.magnitude, tally), a.negative);
    switch (compare(a.magnitude, b.magnitude)) {
    case Ordering::Equal:
        return SignedNat::from(Natural::zero(a.magnitude.radix()));
    case Ordering::Greater:
        return SignedNat::from(sub(a.magnitude, b.magnitude, tally), a.negative);
    case Ordering::Less:
    default:
        return SignedNat::from(sub(b.magnitude, a.magnitude, tally), b.negative);
    }
}

SignedNat signed_diff(const Natural& a, const Natural& b, OpCount* tally) {
    switch (compare(a, b)) {
    case Ordering::Equal:
        return SignedNat::from(Natural::zero(a.radix()));
    case Ordering::Greater:
        return SignedNat::from(sub(a, b, tally), false);
    case Ordering::Less:
    default:
        return SignedNat::from(sub(b, a, tally), true);
    }
}

bool signed_mul_sign(const SignedNat& a, const SignedNat& b) {
    if (a.is_zero() || b.is_zero()) return false;
    return a.negative != b.negative;
}

std::string signed_to_text(const SignedNat& s) {
    return (s.negative ? "-" : "") + s.magnitude.to_text();
}

Natural parse_prefixed(std::string_view text, std::uint32_t radix_override,
                       std::uint32_t* detected_radix) {
    std::uint32_t text_radix = 10;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
        text_radix = 2;
        text.remove_prefix(2);
    } else if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        text_radix = 16;
        text.remove_prefix(2);
    }
    Natural n = Natural::from_text(text, text_radix);
    std::uint32_t target = radix_override ? radix_override : (text_radix == 16 ? 10 : text_radix);
    if (target != text_radix) n = convert_radix(n, target);
    if (detected_radix) *detected_radix = target;
    return n;
}

} // namespace nkecc
