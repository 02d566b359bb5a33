#pragma once

#include "orbhrr/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbhrr {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    static UniPoly monomial(std::size_t degree, const Rational& c = 1);
    /// x^n - 1
    static UniPoly x_pow_minus_one(std::size_t n);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
    bool has_integer_coeffs() const;

    Rational evaluate(const Rational& z) const;
    UniPoly derivative() const;
    /// Divides by the leading coefficient; throws on zero.
    UniPoly make_monic() const;

    /// Human form in variable `var`, highest degree first, e.g. "8*z^2 + -3".
    std::string to_string(const std::string& var = "x") const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& p, unsigned e);

/// Quotient and remainder; throws DivisionByZeroError for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
    UniPoly gcd;  // monic
    UniPoly s;    // s*a + t*b == gcd
    UniPoly t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// Univariate quotient ring Q[x]/(modulus).
///
/// When the modulus has a nonzero constant term, x is a unit; its inverse
/// comes from writing the modulus as g(x) = x*q(x) + g(0), so that
/// x^{-1} = -q(x)/g(0). With a monic integer modulus and g(0) = +-1 every
/// residue of an integer polynomial stays integral.
class QuotientRing {
    struct Data {
        UniPoly modulus;
        std::optional<UniPoly> x_inverse;
    };

public:
    explicit QuotientRing(UniPoly modulus);

    const UniPoly& modulus() const { return data_->modulus; }
    std::size_t dimension() const { return static_cast<std::size_t>(data_->modulus.degree()); }
    bool x_invertible() const { return data_->x_inverse.has_value(); }

    class Element;

    Element reduce(const UniPoly& p) const;
    Element zero() const;
    Element one() const;
    Element x() const;
    /// Throws RingError when the modulus has zero constant term.
    Element x_inverse() const;
    /// x^k for any integer k (negative powers need x invertible).
    Element x_power(long k) const;

    class Element {
    public:
        const UniPoly& residue() const { return residue_; }
        QuotientRing ring() const { return QuotientRing(ring_); }
        bool is_zero() const { return residue_.is_zero(); }

        Element operator-() const;
        Element& operator+=(const Element& o);
        Element& operator-=(const Element& o);
        Element& operator*=(const Element& o);
        Element& operator*=(const Rational& c);

        friend Element operator+(Element a, const Element& b) { return a += b; }
        friend Element operator-(Element a, const Element& b) { return a -= b; }
        friend Element operator*(Element a, const Element& b) { return a *= b; }
        friend Element operator*(Element a, const Rational& c) { return a *= c; }
        friend Element operator*(const Rational& c, Element a) { return a *= c; }
        friend bool operator==(const Element& a, const Element& b)
        {
            return a.ring_->modulus == b.ring_->modulus && a.residue_ == b.residue_;
        }

        std::string to_string(const std::string& var = "x") const { return residue_.to_string(var); }

    private:
        friend class QuotientRing;
        Element(std::shared_ptr<const Data> ring, UniPoly residue)
            : ring_(std::move(ring)), residue_(std::move(residue)) {}
        void check_same_ring(const Element& o) const;

        std::shared_ptr<const Data> ring_;
        UniPoly residue_;
    };

private:
    explicit QuotientRing(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    static UniPoly remainder(const Data& data, const UniPoly& p);

    std::shared_ptr<const Data> data_;
};

using QuotientRingElement = QuotientRing::Element;

}  // namespace orbhrr
