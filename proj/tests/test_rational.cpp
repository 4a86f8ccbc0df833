#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carlab/rational.hpp"
#include "carlab/rng.hpp"

using carlab::BigInt;
using carlab::Rational;
using carlab::Rng;

TEST_CASE("BigInt agrees with native arithmetic on random 32-bit operands") {
    Rng rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        const long long a = static_cast<long long>(rng.below(1ULL << 32)) - (1LL << 31);
        const long long b = static_cast<long long>(rng.below(1ULL << 32)) - (1LL << 31);
        const BigInt ba(a), bb(b);
        CHECK((ba + bb).to_int64() == a + b);
        CHECK((ba - bb).to_int64() == a - b);
        CHECK((ba * bb).to_int64() == a * b);
        if (b != 0) {
            CHECK((ba / bb).to_int64() == a / b);
            CHECK((ba % bb).to_int64() == a % b);
        }
        CHECK((ba < bb) == (a < b));
        CHECK((ba == bb) == (a == b));
    }
}

TEST_CASE("BigInt handles values beyond 64 bits") {
    BigInt two_pow_100(1);
    for (int i = 0; i < 100; ++i) two_pow_100 = two_pow_100 * BigInt(2);
    CHECK(two_pow_100.to_string() == "1267650600228229401496703205376");
    CHECK_FALSE(two_pow_100.fits_int64());

    BigInt factorial(1);
    for (int i = 2; i <= 25; ++i) factorial = factorial * BigInt(i);
    CHECK(factorial.to_string() == "15511210043330985984000000");

    // divmod round trip at scale
    const BigInt q = two_pow_100 / factorial;
    const BigInt r = two_pow_100 % factorial;
    CHECK(q * factorial + r == two_pow_100);
    CHECK(r >= BigInt(0));
    CHECK(r < factorial);
}

TEST_CASE("BigInt string round trip and negatives") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(1000000000000LL).to_string() == "1000000000000");
    CHECK((-BigInt(5)).to_int64() == -5);
    CHECK(BigInt(-7).abs().to_int64() == 7);
}

TEST_CASE("gcd and Rational reduction") {
    CHECK(carlab::gcd(BigInt(12), BigInt(18)).to_int64() == 6);
    CHECK(carlab::gcd(BigInt(-12), BigInt(18)).to_int64() == 6);
    CHECK(carlab::gcd(BigInt(0), BigInt(5)).to_int64() == 5);

    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.to_string() == "-3/2");
    CHECK(r.num().to_int64() == -3);
    CHECK(r.den().to_int64() == 2);
    CHECK(Rational(BigInt(0), BigInt(7)).to_string() == "0");
    CHECK(Rational(4).to_string() == "4");
}

TEST_CASE("Rational arithmetic matches double evaluation") {
    Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const long long an = static_cast<long long>(rng.below(2001)) - 1000;
        const long long ad = 1 + static_cast<long long>(rng.below(50));
        const long long bn = static_cast<long long>(rng.below(2001)) - 1000;
        const long long bd = 1 + static_cast<long long>(rng.below(50));
        const Rational a{BigInt(an), BigInt(ad)};
        const Rational b{BigInt(bn), BigInt(bd)};
        CHECK((a + b).to_double() == doctest::Approx(double(an) / ad + double(bn) / bd));
        CHECK((a * b).to_double() == doctest::Approx((double(an) / ad) * (double(bn) / bd)));
        CHECK((a - b < Rational(0)) == (double(an) / ad < double(bn) / bd));
    }
    CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
    CHECK_THROWS(Rational(1) / Rational(0));
}
