#include "orbhrr/cyclotomic.hpp"

#include "orbhrr/errors.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace orbhrr {

namespace {

UniPoly compute_cyclotomic(std::uint32_t n)
{
    UniPoly p = UniPoly::x_pow_minus_one(n);
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d == 0) {
            auto [q, r] = divmod(p, cyclotomic_polynomial(d));
            p = std::move(q);
        }
    }
    return p;
}

std::uint32_t checked_order(std::uint32_t order)
{
    if (order == 0) {
        throw AmbientFieldError("cyclotomic field order must be positive");
    }
    return order;
}

std::vector<Rational> residue_coeffs(std::uint32_t order, const UniPoly& poly)
{
    const UniPoly& phi = cyclotomic_polynomial(order);
    UniPoly r = divmod(poly, phi).second;
    std::vector<Rational> coeffs = r.coeffs();
    coeffs.resize(static_cast<std::size_t>(phi.degree()));
    return coeffs;
}

}  // namespace

const UniPoly& cyclotomic_polynomial(std::uint32_t order)
{
    checked_order(order);
    // Node-based map: references stay valid while other entries are inserted.
    static std::map<std::uint32_t, std::unique_ptr<const UniPoly>> cache;
    static std::recursive_mutex mutex;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        auto computed = std::make_unique<const UniPoly>(compute_cyclotomic(order));
        it = cache.emplace(order, std::move(computed)).first;
    }
    return *it->second;
}

std::uint32_t euler_phi(std::uint32_t n)
{
    std::uint32_t result = n;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

CyclotomicNumber::CyclotomicNumber(std::uint32_t field_order, const Rational& value)
    : order_(checked_order(field_order)), coeffs_(euler_phi(field_order))
{
    coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(std::uint32_t field_order, const UniPoly& poly)
    : order_(checked_order(field_order)), coeffs_(residue_coeffs(field_order, poly))
{
}

bool CyclotomicNumber::is_zero() const
{
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool CyclotomicNumber::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

Rational CyclotomicNumber::to_rational() const
{
    if (!is_rational()) {
        throw ExactnessError("cyclotomic value is not rational: " + to_string());
    }
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::conjugate() const
{
    std::vector<Rational> image(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        image[(order_ - i % order_) % order_] += coeffs_[i];
    }
    return CyclotomicNumber(order_, UniPoly(std::move(image)));
}

CyclotomicNumber CyclotomicNumber::real_part() const { return (*this + conjugate()) * Rational(1, 2); }

CyclotomicNumber CyclotomicNumber::inverse() const
{
    if (is_zero()) {
        throw DivisionByZeroError("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    }
    // Phi_L is irreducible, so gcd(a, Phi_L) = 1 and s*a + t*Phi_L = 1.
    ExtendedGcd eg = extended_gcd(as_poly(), cyclotomic_polynomial(order_));
    return CyclotomicNumber(order_, eg.s);
}

CyclotomicNumber CyclotomicNumber::embed(std::uint32_t target_order) const
{
    checked_order(target_order);
    if (target_order % order_ != 0) {
        throw AmbientFieldError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                                std::to_string(target_order) + ")");
    }
    if (target_order == order_) {
        return *this;
    }
    const std::size_t step = target_order / order_;
    std::vector<Rational> image(coeffs_.empty() ? 1 : (coeffs_.size() - 1) * step + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        image[i * step] = coeffs_[i];
    }
    return CyclotomicNumber(target_order, UniPoly(std::move(image)));
}

CyclotomicNumber CyclotomicNumber::pow(std::int64_t e) const
{
    CyclotomicNumber base = e >= 0 ? *this : inverse();
    auto n = static_cast<std::uint64_t>(e >= 0 ? e : -e);
    CyclotomicNumber result(order_, Rational(1));
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return result;
}

std::string CyclotomicNumber::to_string() const
{
    std::ostringstream os;
    os << "c[" << order_ << "]: ";
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i];
        if (i >= 1) os << "*z";
        if (i >= 2) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

CyclotomicNumber CyclotomicNumber::parse(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.size() < 5 || s.compare(0, 2, "c[") != 0) {
        throw ParseError("cyclotomic literal must start with 'c[L]:': '" + std::string(text) + "'");
    }
    const auto close = s.find("]:");
    if (close == std::string::npos) {
        throw ParseError("cyclotomic literal missing ']:': '" + std::string(text) + "'");
    }
    const Rational order_value = Rational::parse(s.substr(2, close - 2));
    if (!order_value.is_integer() || order_value.sign() <= 0) {
        throw ParseError("cyclotomic field order must be a positive integer");
    }
    const auto order = static_cast<std::uint32_t>(order_value.to_int64());
    const std::string body = s.substr(close + 2);
    if (body.empty()) {
        throw ParseError("empty cyclotomic literal");
    }

    // Split into signed terms; a sign starts a new term unless it follows an operator or sign.
    std::vector<std::string> terms;
    std::string current;
    for (std::size_t i = 0; i < body.size(); ++i) {
        const char ch = body[i];
        const bool sign = ch == '+' || ch == '-';
        const bool after_operator = i > 0 && std::string_view("*^/+-").find(body[i - 1]) != std::string_view::npos;
        if (sign && i > 0 && !after_operator) {
            terms.push_back(current);
            current.clear();
        }
        if (ch != '+') {
            current.push_back(ch);
        }
    }
    terms.push_back(current);

    std::map<std::size_t, Rational> by_degree;
    for (const auto& term : terms) {
        if (term.empty()) {
            throw ParseError("empty term in cyclotomic literal '" + std::string(text) + "'");
        }
        Rational coef = 1;
        std::size_t degree = 0;
        const auto zpos = term.find('z');
        if (zpos == std::string::npos) {
            coef = Rational::parse(term);
        } else {
            std::string head = term.substr(0, zpos);
            if (!head.empty() && head.back() == '*') head.pop_back();
            if (head.empty()) {
                coef = 1;
            } else if (head == "-") {
                coef = -1;
            } else {
                coef = Rational::parse(head);
            }
            const std::string tail = term.substr(zpos + 1);
            if (tail.empty()) {
                degree = 1;
            } else if (tail[0] == '^') {
                const Rational d = Rational::parse(tail.substr(1));
                if (!d.is_integer() || d.sign() < 0) {
                    throw ParseError("invalid exponent in cyclotomic literal");
                }
                degree = static_cast<std::size_t>(d.to_int64());
            } else {
                throw ParseError("unexpected text after 'z' in '" + term + "'");
            }
        }
        by_degree[degree] += coef;
    }
    std::vector<Rational> poly(by_degree.rbegin()->first + 1);
    for (const auto& [deg, c] : by_degree) {
        poly[deg] = c;
    }
    return CyclotomicNumber(order, UniPoly(std::move(poly)));
}

void CyclotomicNumber::check_same_field(const CyclotomicNumber& o) const
{
    if (order_ != o.order_) {
        throw AmbientFieldError("operands in Q(zeta_" + std::to_string(order_) + ") and Q(zeta_" +
                                std::to_string(o.order_) + "); embed into a common field first");
    }
}

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o)
{
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o)
{
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o)
{
    check_same_field(o);
    coeffs_ = residue_coeffs(order_, as_poly() * o.as_poly());
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) { return *this *= o.inverse(); }

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& c) { return os << c.to_string(); }

CyclotomicNumber cyclo_root_of_unity(std::uint32_t order, std::int64_t exponent, std::uint32_t ambient)
{
    if (order == 0 || ambient == 0 || ambient % order != 0) {
        throw AmbientFieldError("root order " + std::to_string(order) + " does not divide ambient field order " +
                                std::to_string(ambient));
    }
    const std::int64_t L = ambient;
    const std::int64_t e = ((static_cast<std::int64_t>(ambient / order) * exponent) % L + L) % L;
    return CyclotomicNumber(ambient, UniPoly::monomial(static_cast<std::size_t>(e)));
}

std::uint32_t common_field_order(std::span<const CyclotomicNumber> values, std::uint32_t at_least)
{
    std::int64_t order = at_least;
    for (const auto& v : values) {
        order = lcm(order, static_cast<std::int64_t>(v.field_order()));
    }
    return static_cast<std::uint32_t>(order);
}

Rational sum_inverse_one_minus_cos(std::uint32_t n)
{
    if (n < 2) {
        throw std::invalid_argument("sum_inverse_one_minus_cos requires n >= 2");
    }
    const CyclotomicNumber one(n, Rational(1));
    CyclotomicNumber total(n, Rational(0));
    for (std::uint32_t k = 1; k < n; ++k) {
        total += (one - cyclo_root_of_unity(n, k, n).real_part()).inverse();
    }
    return total.to_rational();
}

}  // namespace orbhrr
