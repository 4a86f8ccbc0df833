#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace carlab {

// Arbitrary-precision signed integer, sign-magnitude over base-2^32 limbs.
// Covers the exact arithmetic the correlation module needs (add, subtract,
// multiply, divmod, gcd); not tuned for asymptotics.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long value);  // NOLINT: implicit on purpose

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated quotient and remainder: a == q*b + r with |r| < |b| and
    // sign(r) == sign(a). Throws std::domain_error on division by zero.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& quotient, BigInt& remainder);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    std::string to_string() const;
    double to_double() const;

    // Fits in a long long? (for fast paths and tests)
    bool fits_int64() const;
    long long to_int64() const;  // throws std::overflow_error when it does not fit

  private:
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    static BigInt add_magnitude(const BigInt& a, const BigInt& b);
    static BigInt sub_magnitude(const BigInt& a, const BigInt& b);  // needs |a| >= |b|
    void trim();

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros
};

BigInt gcd(BigInt a, BigInt b);

// Exact rational, always reduced, denominator > 0.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT
    Rational(BigInt numerator, BigInt denominator);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int signum() const { return num_.signum(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const { return signum() < 0 ? -*this : *this; }

    double to_double() const;
    // "p/q" in lowest terms, or just "p" for integers.
    std::string to_string() const;

  private:
    BigInt num_;
    BigInt den_;
};

}  // namespace carlab
