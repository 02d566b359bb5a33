#include "orbhrr/polynomial.hpp"

#include "orbhrr/errors.hpp"

#include <algorithm>
#include <sstream>

namespace orbhrr {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

UniPoly UniPoly::monomial(std::size_t degree, const Rational& c)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::x_pow_minus_one(std::size_t n)
{
    std::vector<Rational> v(n + 1);
    v[n] = 1;
    v[0] -= 1;
    return UniPoly(std::move(v));
}

bool UniPoly::has_integer_coeffs() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

Rational UniPoly::evaluate(const Rational& z) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
    }
    return UniPoly(std::move(d));
}

UniPoly UniPoly::make_monic() const
{
    if (is_zero()) {
        throw DivisionByZeroError("cannot make the zero polynomial monic");
    }
    return *this * leading().inverse();
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << coeffs_[i];
        if (i >= 1) {
            os << '*' << var;
        }
        if (i >= 2) {
            os << '^' << i;
        }
    }
    return os.str();
}

UniPoly UniPoly::operator-() const
{
    UniPoly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly& UniPoly::operator*=(const UniPoly& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            r[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(r);
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    normalize();
    return *this;
}

UniPoly pow(const UniPoly& p, unsigned e)
{
    UniPoly result = UniPoly::constant(1);
    UniPoly base = p;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) {
        throw DivisionByZeroError("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {UniPoly{}, a};
    }
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quot(rem.size() - b.coeffs().size() + 1);
    const auto& bc = b.coeffs();
    const Rational lead_inv = b.leading().inverse();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational q = rem[k + bc.size() - 1] * lead_inv;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) {
            rem[k + j] -= q * bc[j];
        }
    }
    rem.resize(bc.size() - 1);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) { return extended_gcd(a, b).gcd; }

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) {
        return {};
    }
    const Rational inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

// ---- QuotientRing ----

QuotientRing::QuotientRing(UniPoly modulus)
{
    if (modulus.is_zero()) {
        throw RingError("quotient ring modulus must be nonzero");
    }
    Data d{std::move(modulus), std::nullopt};
    const Rational g0 = d.modulus.coeff(0);
    if (!g0.is_zero() && d.modulus.degree() >= 1) {
        // g = x*q + g(0)  =>  x * (-q/g(0)) = 1 mod g
        std::vector<Rational> q(d.modulus.coeffs().begin() + 1, d.modulus.coeffs().end());
        d.x_inverse = UniPoly(std::move(q)) * (-g0.inverse());
    }
    data_ = std::make_shared<const Data>(std::move(d));
}

UniPoly QuotientRing::remainder(const Data& data, const UniPoly& p)
{
    return divmod(p, data.modulus).second;
}

QuotientRing::Element QuotientRing::reduce(const UniPoly& p) const { return Element(data_, remainder(*data_, p)); }

QuotientRing::Element QuotientRing::zero() const { return Element(data_, UniPoly{}); }

QuotientRing::Element QuotientRing::one() const { return reduce(UniPoly::constant(1)); }

QuotientRing::Element QuotientRing::x() const { return reduce(UniPoly::monomial(1)); }

QuotientRing::Element QuotientRing::x_inverse() const
{
    if (!data_->x_inverse) {
        throw RingError("x is not invertible modulo " + data_->modulus.to_string());
    }
    return Element(data_, *data_->x_inverse);
}

QuotientRing::Element QuotientRing::x_power(long k) const
{
    Element base = k >= 0 ? x() : x_inverse();
    unsigned long e = k >= 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    Element result = one();
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1UL;
        if (e > 0) base *= base;
    }
    return result;
}

void QuotientRing::Element::check_same_ring(const Element& o) const
{
    if (ring_ != o.ring_ && ring_->modulus != o.ring_->modulus) {
        throw RingError("operands belong to different quotient rings");
    }
}

QuotientRing::Element QuotientRing::Element::operator-() const { return Element(ring_, -residue_); }

QuotientRing::Element& QuotientRing::Element::operator+=(const Element& o)
{
    check_same_ring(o);
    residue_ += o.residue_;
    return *this;
}

QuotientRing::Element& QuotientRing::Element::operator-=(const Element& o)
{
    check_same_ring(o);
    residue_ -= o.residue_;
    return *this;
}

QuotientRing::Element& QuotientRing::Element::operator*=(const Element& o)
{
    check_same_ring(o);
    residue_ = QuotientRing::remainder(*ring_, residue_ * o.residue_);
    return *this;
}

QuotientRing::Element& QuotientRing::Element::operator*=(const Rational& c)
{
    residue_ *= c;
    return *this;
}

}  // namespace orbhrr
