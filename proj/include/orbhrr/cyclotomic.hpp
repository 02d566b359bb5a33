#pragma once

#include "orbhrr/polynomial.hpp"
#include "orbhrr/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbhrr {

/// The L-th cyclotomic polynomial, computed as (x^L - 1) divided by Phi_d for
/// every proper divisor d of L. Results are memoized process-wide.
const UniPoly& cyclotomic_polynomial(std::uint32_t order);

std::uint32_t euler_phi(std::uint32_t n);

/// Exact element of Q(zeta_L), stored as its canonical residue in Q[z]/Phi_L(z)
/// where z stands for zeta_L = exp(2*pi*i/L).
///
/// Binary operations require both operands to share L; use embed() to move a
/// value into a larger field first.
class CyclotomicNumber {
public:
    /// Zero in Q(zeta_1) = Q.
    CyclotomicNumber() : CyclotomicNumber(1, Rational(0)) {}
    CyclotomicNumber(std::uint32_t field_order, const Rational& value);
    /// Residue of an arbitrary polynomial in z; reduced modulo Phi_L.
    CyclotomicNumber(std::uint32_t field_order, const UniPoly& poly);

    std::uint32_t field_order() const { return order_; }
    /// Always euler_phi(field_order()) entries.
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws ExactnessError unless the element lies in Q.
    Rational to_rational() const;

    CyclotomicNumber conjugate() const;
    /// (a + conj a)/2
    CyclotomicNumber real_part() const;
    /// Throws DivisionByZeroError on zero.
    CyclotomicNumber inverse() const;
    /// Image under Q(zeta_L) -> Q(zeta_M), zeta_L -> zeta_M^{M/L}. Requires L | M.
    CyclotomicNumber embed(std::uint32_t target_order) const;
    CyclotomicNumber pow(std::int64_t e) const;

    UniPoly as_poly() const { return UniPoly(coeffs_); }

    /// "c[L]: a0 + a1*z + a2*z^2", zero terms omitted, "c[L]: 0" for zero.
    std::string to_string() const;
    /// Inverse of to_string(); exponents >= phi(L) are reduced.
    static CyclotomicNumber parse(std::string_view text);

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator/=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const Rational& c);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& c) { return a *= c; }
    friend CyclotomicNumber operator*(const Rational& c, CyclotomicNumber a) { return a *= c; }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
    {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check_same_field(const CyclotomicNumber& o) const;

    std::uint32_t order_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& c);

/// zeta_order^exponent inside Q(zeta_ambient), i.e. zeta_ambient^{(ambient/order)*exponent}.
/// Throws AmbientFieldError when order does not divide ambient.
CyclotomicNumber cyclo_root_of_unity(std::uint32_t order, std::int64_t exponent, std::uint32_t ambient);

/// lcm of the field orders of `values` and `at_least`.
std::uint32_t common_field_order(std::span<const CyclotomicNumber> values, std::uint32_t at_least = 1);

/// Sum over k = 1..n-1 of 1/(1 - Re zeta_n^k), evaluated in Q(zeta_n).
Rational sum_inverse_one_minus_cos(std::uint32_t n);

}  // namespace orbhrr
