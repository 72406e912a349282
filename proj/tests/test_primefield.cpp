#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "primefield.hpp"

using namespace nkecc;

namespace {

Natural nat(std::uint64_t v, std::uint32_t radix = 10) {
    return Natural::from_u64(v, radix);
}

FieldElement fe(std::uint64_t v, std::uint64_t p) {
    return fe_new(nat(v), nat(p));
}

std::uint64_t val(const FieldElement& e) { return e.value().to_u64().value(); }

const StrategySpec kSchoolbook = StrategySpec::make(StrategyKind::Schoolbook);

} // namespace

TEST_CASE("fe_new reduces into canonical range") {
    CHECK(val(fe(20, 17)) == 3);
    CHECK(val(fe(0, 17)) == 0);
    CHECK(val(fe(11663, 97)) == 11663 % 97);
    CHECK_THROWS_AS(fe_new(nat(5), nat(1)), Error);
    CHECK_THROWS_AS(fe_new(nat(5), Natural::zero(10)), Error);
    CHECK_THROWS_AS(fe_new(nat(5), Natural::from_u64(17, 2)), Error);
}

TEST_CASE("fe_add, fe_sub, fe_neg worked values") {
    CHECK(val(fe_add(fe(9, 17), fe(10, 17))) == 2);
    CHECK(val(fe_sub(fe(13, 17), fe(13, 17))) == 0);
    CHECK(val(fe_neg(fe(0, 17))) == 0);
    CHECK(val(fe_neg(fe(5, 17))) == 12);
    CHECK(val(fe_sub(fe(3, 17), fe(5, 17))) == 15);
    CHECK_THROWS_AS(fe_add(fe(1, 17), fe(1, 19)), Error);
}

TEST_CASE("fe_mul worked values and identity") {
    CHECK(val(fe_mul(fe(5, 17), fe(7, 17), kSchoolbook).first) == 1);
    const FieldElement x = fe(14, 17);
    CHECK(fe_mul(fe(1, 17), x, kSchoolbook).first == x);
}

TEST_CASE("field ops agree with native modular arithmetic") {
    std::mt19937_64 rng(31);
    const std::uint64_t p = 1000003;
    for (int iter = 0; iter < 300; ++iter) {
        const std::uint64_t x = rng() % p, y = rng() % p;
        CHECK(val(fe_add(fe(x, p), fe(y, p))) == (x + y) % p);
        CHECK(val(fe_sub(fe(x, p), fe(y, p))) == (x + p - y) % p);
        CHECK(val(fe_mul(fe(x, p), fe(y, p), kSchoolbook).first) == x * y % p);
    }
}

TEST_CASE("fe_mul is strategy-independent") {
    std::mt19937_64 rng(37);
    // 2^128 - 159
    const Natural p =
        Natural::from_text("340282366920938463463374607431768211297", 10);
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<digit_t> dx(1 + rng() % 39), dy(1 + rng() % 39);
        for (auto& d : dx) d = static_cast<digit_t>(rng() % 10);
        for (auto& d : dy) d = static_cast<digit_t>(rng() % 10);
        const FieldElement x = fe_new(Natural::from_digits(std::move(dx), 10), p);
        const FieldElement y = fe_new(Natural::from_digits(std::move(dy), 10), p);
        const FieldElement ref = fe_mul(x, y, kSchoolbook).first;
        CHECK(fe_mul(x, y, StrategySpec::make(StrategyKind::Karatsuba)).first == ref);
        CHECK(fe_mul(x, y, StrategySpec::make(StrategyKind::Nikhilam)).first == ref);
    }
}

TEST_CASE("fe_inv worked values") {
    CHECK(val(fe_inv(fe(1, 17))) == 1);
    CHECK(val(fe_inv(fe(2, 17))) == 9); // brute-force scan: 2*9 = 18 = 1 mod 17

    // full scan oracle mod 17
    for (std::uint64_t a = 1; a < 17; ++a) {
        std::uint64_t expect = 0;
        for (std::uint64_t c = 1; c < 17; ++c)
            if (a * c % 17 == 1) expect = c;
        CHECK(val(fe_inv(fe(a, 17))) == expect);
    }

    CHECK_THROWS_AS(fe_inv(fe(0, 17)), Error);
    CHECK_THROWS_AS(fe_inv(fe(6, 15)), Error); // gcd(6,15) = 3
    CHECK(val(fe_inv(fe(7, 15))) == 13);       // invertible in a non-prime ring
}

TEST_CASE("fe_inv exhaustively for small primes") {
    for (std::uint64_t p : {17ull, 97ull, 1009ull}) {
        for (std::uint64_t a = 1; a < p; ++a) {
            const FieldElement inv = fe_inv(fe(a, p));
            CHECK(val(fe_mul(fe(a, p), inv, kSchoolbook).first) == 1);
        }
    }
}

TEST_CASE("field axioms sampled mod 17 and 97") {
    std::mt19937_64 rng(41);
    for (std::uint64_t p : {17ull, 97ull}) {
        for (int iter = 0; iter < 200; ++iter) {
            const FieldElement a = fe(rng() % p, p);
            const FieldElement b = fe(rng() % p, p);
            const FieldElement c = fe(rng() % p, p);
            auto mul = [&](const FieldElement& x, const FieldElement& y) {
                return fe_mul(x, y, kSchoolbook).first;
            };
            CHECK(fe_add(a, b) == fe_add(b, a));
            CHECK(fe_add(fe_add(a, b), c) == fe_add(a, fe_add(b, c)));
            CHECK(mul(a, b) == mul(b, a));
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            CHECK(mul(a, fe_add(b, c)) == fe_add(mul(a, b), mul(a, c)));
            CHECK(fe_add(a, fe(0, p)) == a);
            CHECK(mul(a, fe(1, p)) == a);
            CHECK(fe_add(a, fe_neg(a)).is_zero());
            if (!a.is_zero()) CHECK(val(mul(a, fe_inv(a))) == 1);
        }
    }
}

TEST_CASE("trial-division primality helper") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(17));
    CHECK(is_prime_u64(1009));
    CHECK(is_prime_u64(1000003));
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(15));
    CHECK_FALSE(is_prime_u64(1000001)); // 101 * 9901
}
