#include "affine/rational.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace affine {

namespace {

BigInt from_int64(std::int64_t n)
{
    // mpz_class has no int64 constructor on every platform; go through text
    // only when the value does not fit a long.
    if (n >= LONG_MIN && n <= LONG_MAX)
        return BigInt(static_cast<long>(n));
    return BigInt(std::to_string(n));
}

bool is_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

Rational::Rational(std::int64_t n) : value_(from_int64(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(from_int64(num), from_int64(den))
{
}

Rational::Rational(const BigInt &n) : value_(n) {}

Rational::Rational(const BigInt &num, const BigInt &den)
{
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (!is_digits(digits) || (slash != std::string_view::npos && !is_digits(den)))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    BigInt n{std::string(digits)};
    if (num.front() == '-')
        n = -n;
    if (slash == std::string_view::npos)
        return Rational(n);
    BigInt d(std::string{den});
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

std::string Rational::str() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::compact_str() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return str();
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
    int c = cmp(a.value_, b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational &r)
{
    return r.sign() < 0 ? -r : r;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.str();
}

} // namespace affine
