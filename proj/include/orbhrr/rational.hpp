#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orbhrr {

using Integer = boost::multiprecision::cpp_int;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// gcd(a, 0) = |a| and gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

Integer binomial(std::int64_t n, std::int64_t k);

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p", "-p" and "p/q".
    static Rational parse(std::string_view text);

    Integer numerator() const;
    Integer denominator() const;

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    /// Throws ExactnessError when the value is not an integer.
    Integer to_integer() const;
    std::int64_t to_int64() const;
    double to_double() const { return value_.convert_to<double>(); }

    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

    boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace orbhrr
