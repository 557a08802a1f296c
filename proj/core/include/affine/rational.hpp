#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace affine {

using BigInt = mpz_class;

/*
 * Exact signed fraction over arbitrary-precision integers.
 *
 * The value is always kept in lowest terms with a positive denominator, so
 * two Rationals are equal iff their numerators and denominators are equal.
 * Zero is 0/1.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const BigInt &n);
    Rational(const BigInt &num, const BigInt &den);

    /// Parses `p` or `p/q` (optional leading sign on p, q > 0).
    /// Throws std::invalid_argument on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Always `p/q`, e.g. "1/1", "0/1", "-4/5".
    std::string str() const;
    /// `p` for integers, `p/q` otherwise.
    std::string compact_str() const;

    Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
    Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
    Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_{0};
};

Rational abs(const Rational &r);

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace affine
