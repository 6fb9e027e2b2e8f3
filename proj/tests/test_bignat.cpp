#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include "kcross/bignat.hpp"

using kcross::BigNat;

TEST_CASE("small values and decimal round trip") {
    CHECK(BigNat().to_decimal() == "0");
    CHECK(BigNat(0).is_zero());
    CHECK(BigNat(1).to_decimal() == "1");
    CHECK(BigNat(4294967296ull).to_decimal() == "4294967296");
    CHECK(BigNat(18446744073709551615ull).to_decimal() == "18446744073709551615");
    CHECK(BigNat::from_decimal("0") == BigNat(0));
    CHECK(BigNat::from_decimal("000123") == BigNat(123));
    CHECK(BigNat::from_decimal("340282366920938463463374607431768211456").to_decimal() ==
          "340282366920938463463374607431768211456");  // 2^128
    CHECK_THROWS_AS(BigNat::from_decimal("12x"), kcross::validation_error);
    CHECK_THROWS_AS(BigNat::from_decimal(""), kcross::validation_error);
}

TEST_CASE("arithmetic matches 64-bit reference on random inputs") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t a = rng() >> (1 + rng() % 40);
        std::uint64_t b = rng() >> (1 + rng() % 40);
        CHECK((BigNat(a) + BigNat(b)).to_decimal() == std::to_string(a + b));
        std::uint64_t am = a >> 32, bm = b >> 33;
        CHECK((BigNat(am) * BigNat(bm)).to_decimal() == std::to_string(am * bm));
        std::uint32_t d = static_cast<std::uint32_t>(rng() | 1);
        BigNat q(a);
        std::uint32_t r = q.div_small(d);
        CHECK(q.to_decimal() == std::to_string(a / d));
        CHECK(r == a % d);
        CHECK((BigNat(a) <=> BigNat(b)) == (a <=> b));
    }
}

TEST_CASE("large multiplication") {
    // 2^64 * 2^64 = 2^128
    BigNat p = BigNat::from_decimal("18446744073709551616");
    CHECK((p * p).to_decimal() == "340282366920938463463374607431768211456");
    BigNat f(1);
    for (std::uint32_t i = 2; i <= 30; ++i) f.mul_small(i);
    CHECK(f.to_decimal() == "265252859812191058636308480000000");  // 30!
    std::uint32_t rem = f.div_small(30);
    CHECK(rem == 0);
    CHECK(f.to_decimal() == "8841761993739701954543616000000");  // 29!
}

TEST_CASE("fits and conversion") {
    CHECK(BigNat(77).to_u64() == 77);
    BigNat big = BigNat::from_decimal("340282366920938463463374607431768211456");
    CHECK_FALSE(big.fits_u64());
    CHECK_THROWS_AS(big.to_u64(), kcross::domain_error);
}
