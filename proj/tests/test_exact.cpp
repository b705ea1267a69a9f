#include "diogeo/exact.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace diogeo;

TEST_CASE("isqrt basics") {
    CHECK(isqrt(Integer(0)) == 0);
    CHECK(isqrt(Integer(17)) == 4);
    CHECK(isqrt(Integer(16)) == 4);
    CHECK(isqrt(Integer(24)) == 4);
    CHECK(isqrt(Integer(25)) == 5);
    CHECK_THROWS_AS(isqrt(Integer(-1)), std::domain_error);
}

TEST_CASE("isqrt on a 100-digit value") {
    Integer n = pow(Integer(10), 100);
    Integer r = isqrt(n);
    Integer expected = pow(Integer(10), 50);
    CHECK(r == expected);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
}

TEST_CASE("as_perfect_square basics") {
    CHECK(as_perfect_square(Integer(49)).value() == 7);
    CHECK(as_perfect_square(Integer(0)).value() == 0);
    CHECK(as_perfect_square(Integer(1)).value() == 1);
    CHECK_FALSE(as_perfect_square(Integer(50)));
    CHECK_FALSE(as_perfect_square(Integer(10)));  // the square near-miss value c^2
    CHECK_FALSE(as_perfect_square(Integer(-4)));
}

TEST_CASE("gcd basics") {
    CHECK(gcd(Integer(12), Integer(18)) == 6);
    CHECK(gcd(Integer(7), Integer(0)) == 7);
    CHECK(gcd(Integer(0), Integer(0)) == 0);
    // primitivity of the (m, n) = (2, 1) Pythagorean parameters
    CHECK(gcd(Integer(2 * 2 - 1), Integer(2 * 2 * 1)) == 1);
}

TEST_CASE("prefilter never changes the answer") {
    // randomized cross-test over 10^6 inputs: the prefiltered square test
    // must agree with the isqrt-only test everywhere
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::uint64_t> dist(0, 1ull << 40);
    for (int i = 0; i < 1000000; ++i) {
        std::uint64_t n = dist(rng);
        if (i % 3 == 0) {
            std::uint64_t r = isqrt_u64(n);
            n = r * r;  // force plenty of true squares into the sample
        }
        std::uint64_t r = isqrt_u64(n);
        bool plain = r * r == n;
        CHECK(is_square_u64(n) == plain);
        if (is_square_u64(n) != plain) break;
    }
}

TEST_CASE("isqrt_u64 contract on random values") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> dist;
    for (int i = 0; i < 100000; ++i) {
        std::uint64_t n = dist(rng);
        std::uint64_t r = isqrt_u64(n);
        CHECK(static_cast<unsigned __int128>(r) * r <= n);
        CHECK(static_cast<unsigned __int128>(r + 1) * (r + 1) > n);
        if (static_cast<unsigned __int128>(r) * r > n) break;
    }
}

TEST_CASE("bignum and fixed-width square tests agree") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(0, 1ull << 50);
    for (int i = 0; i < 20000; ++i) {
        std::uint64_t n = dist(rng);
        CHECK(as_perfect_square(Integer(n)).has_value() == is_square_u64(n));
    }
}

TEST_CASE("rationals stay normalized") {
    Rational r = make_rational(Integer(4), Integer(-6));
    CHECK(numerator(r) == -2);
    CHECK(denominator(r) == 3);
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
    for (int i = 0; i < 5000; ++i) {
        std::int64_t n1 = dist(rng), n2 = dist(rng);
        std::int64_t d1 = dist(rng), d2 = dist(rng);
        if (d1 == 0 || d2 == 0) continue;
        Rational a = make_rational(n1, d1), b = make_rational(n2, d2);
        for (Rational v : {Rational(a + b), Rational(a - b), Rational(a * b)}) {
            CHECK(denominator(v) > 0);
            CHECK(gcd(abs(numerator(v)), denominator(v)) == (numerator(v) == 0 ? denominator(v) : Integer(1)));
        }
    }
}

TEST_CASE("parse_rational round trip") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
}

TEST_CASE("make_rational rejects zero denominator") {
    CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), std::domain_error);
}
