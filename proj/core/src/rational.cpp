#include "carlab/rational.hpp"

#include <cmath>
#include <compare>
#include <stdexcept>

namespace carlab {

namespace {
constexpr std::uint64_t kBase = 1ULL << 32;
}

BigInt::BigInt(long long value) {
    negative_ = value < 0;
    // Avoids overflow at LLONG_MIN.
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1
                                  : static_cast<std::uint64_t>(value);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffULL));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

BigInt BigInt::add_magnitude(const BigInt& a, const BigInt& b) {
    BigInt out;
    const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    out.limbs_.resize(n);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = carry;
        if (i < a.limbs_.size()) sum += a.limbs_[i];
        if (i < b.limbs_.size()) sum += b.limbs_[i];
        out.limbs_[i] = static_cast<std::uint32_t>(sum & 0xffffffffULL);
        carry = sum >> 32;
    }
    if (carry) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

BigInt BigInt::sub_magnitude(const BigInt& a, const BigInt& b) {
    BigInt out;
    out.limbs_.resize(a.limbs_.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a.limbs_[i]) - borrow;
        if (i < b.limbs_.size()) diff -= b.limbs_[i];
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.limbs_[i] = static_cast<std::uint32_t>(diff);
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.negative_ == b.negative_) {
        BigInt out = BigInt::add_magnitude(a, b);
        out.negative_ = a.negative_;
        out.trim();
        return out;
    }
    const int cmp = BigInt::compare_magnitude(a, b);
    if (cmp == 0) return BigInt();
    BigInt out = cmp > 0 ? BigInt::sub_magnitude(a, b) : BigInt::sub_magnitude(b, a);
    out.negative_ = cmp > 0 ? a.negative_ : b.negative_;
    out.trim();
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    out.negative_ = a.negative_ != b.negative_;
    out.trim();
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quotient, BigInt& remainder) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (compare_magnitude(a, b) < 0) {
        quotient = BigInt();
        remainder = a;
        return;
    }
    // Schoolbook long division on magnitudes, one limb of quotient at a time
    // against a running remainder.
    BigInt rem;
    BigInt quot;
    quot.limbs_.assign(a.limbs_.size(), 0);
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        // rem = rem * 2^32 + limb
        rem.limbs_.insert(rem.limbs_.begin(), a.limbs_[i]);
        rem.trim();
        if (compare_magnitude(rem, b) < 0) continue;
        // Binary search the quotient limb q in [1, 2^32-1] such that
        // |b|*q <= rem < |b|*(q+1).
        std::uint64_t lo = 1, hi = kBase - 1, q = 1;
        BigInt babs = b.abs();
        while (lo <= hi) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (compare_magnitude(babs * BigInt(static_cast<long long>(mid)), rem) <= 0) {
                q = mid;
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        quot.limbs_[i] = static_cast<std::uint32_t>(q);
        rem = sub_magnitude(rem, babs * BigInt(static_cast<long long>(q)));
    }
    quot.trim();
    rem.trim();
    quot.negative_ = !quot.is_zero() && (a.negative_ != b.negative_);
    rem.negative_ = !rem.is_zero() && a.negative_;
    quotient = std::move(quot);
    remainder = std::move(rem);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_)
        return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    const int cmp = BigInt::compare_magnitude(a, b);
    const int sign = a.negative_ ? -1 : 1;
    const int c = cmp * sign;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    BigInt rest = abs();
    const BigInt billion(1000000000LL);
    while (!rest.is_zero()) {
        BigInt q, r;
        divmod(rest, billion, q, r);
        std::uint64_t chunk = 0;
        for (std::size_t i = r.limbs_.size(); i-- > 0;) chunk = (chunk << 32) | r.limbs_[i];
        std::string part = std::to_string(chunk);
        if (!q.is_zero()) part = std::string(9 - part.size(), '0') + part;
        digits = part + digits;
        rest = std::move(q);
    }
    return negative_ ? "-" + digits : digits;
}

double BigInt::to_double() const {
    double value = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) value = value * 4294967296.0 + limbs_[i];
    return negative_ ? -value : value;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    std::uint64_t mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    return negative_ ? mag <= 0x8000000000000000ULL : mag <= 0x7fffffffffffffffULL;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt does not fit in 64 bits");
    std::uint64_t mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    return negative_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? BigInt(1) : a;
}

Rational::Rational(BigInt numerator, BigInt denominator) {
    if (denominator.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (denominator.is_negative()) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const BigInt g = numerator.is_zero() ? denominator : gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace carlab
