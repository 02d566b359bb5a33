#include "orbhrr/rational.hpp"

#include "orbhrr/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

namespace orbhrr {

namespace mp = boost::multiprecision;

Integer gcd(const Integer& a, const Integer& b) { return mp::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0) {
        return 0;
    }
    return mp::abs(a / gcd(a, b) * b);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

Integer binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw DivisionByZeroError("rational with zero denominator");
    }
    value_ = mp::cpp_rational(num);
    value_ /= mp::cpp_rational(den);
}

Rational Rational::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start) {
            throw ParseError("empty integer in rational literal");
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                throw ParseError("invalid character in rational literal: '" + std::string(s) + "'");
            }
        }
        if (s[0] == '+') s.remove_prefix(1);
        return Integer(std::string(s));
    };

    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    return Rational(parse_int(trim(text.substr(0, slash))), parse_int(trim(text.substr(slash + 1))));
}

Integer Rational::numerator() const { return mp::numerator(value_); }

Integer Rational::denominator() const { return mp::denominator(value_); }

Integer Rational::to_integer() const
{
    if (!is_integer()) {
        throw ExactnessError("expected an integer, got " + to_string());
    }
    return numerator();
}

std::int64_t Rational::to_int64() const
{
    Integer v = to_integer();
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw ExactnessError("integer out of 64-bit range: " + v.str());
    }
    return v.convert_to<std::int64_t>();
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw DivisionByZeroError("inverse of zero rational");
    }
    return Rational(mp::cpp_rational(1) / value_);
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return numerator().str();
    }
    return numerator().str() + "/" + denominator().str();
}

Rational Rational::operator-() const { return Rational(mp::cpp_rational(-value_)); }

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw DivisionByZeroError("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace orbhrr
