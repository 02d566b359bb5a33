#include "orbhrr/toy_stacks.hpp"

#include "orbhrr/errors.hpp"

#include <numeric>

namespace orbhrr {

GroupRingElement::GroupRingElement(std::uint32_t n, std::vector<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs))
{
    if (n_ == 0) {
        throw SchemaError("group ring order must be positive");
    }
    if (coeffs_.size() > n_) {
        throw DimensionMismatchError("more than n coefficients in Z[x]/(x^n - 1)");
    }
    coeffs_.resize(n_);
}

GroupRingElement GroupRingElement::x_power(std::uint32_t n, std::int64_t k)
{
    std::vector<Rational> c(n);
    const auto m = static_cast<std::int64_t>(n);
    c[static_cast<std::size_t>(((k % m) + m) % m)] = 1;
    return GroupRingElement(n, std::move(c));
}

void GroupRingElement::check_same_n(const GroupRingElement& o) const
{
    if (n_ != o.n_) {
        throw DimensionMismatchError("group ring elements of different orders");
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o)
{
    check_same_n(o);
    for (std::size_t i = 0; i < n_; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

GroupRingElement& GroupRingElement::operator*=(const GroupRingElement& o)
{
    check_same_n(o);
    std::vector<Rational> c(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) c[(i + j) % n_] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(c);
    return *this;
}

std::vector<CyclotomicNumber> dft_inverse(const GroupRingElement& f)
{
    const std::uint32_t n = f.n();
    std::vector<CyclotomicNumber> out;
    for (std::uint32_t k = 0; k < n; ++k) {
        CyclotomicNumber sum(n, Rational(0));
        for (std::uint32_t j = 0; j < n; ++j) {
            if (!f.coeffs()[j].is_zero()) {
                sum += cyclo_root_of_unity(n, static_cast<std::int64_t>(j) * k, n) * f.coeffs()[j];
            }
        }
        out.push_back(sum);
    }
    return out;
}

CyclotomicNumber weighted_inner_product(const std::vector<CyclotomicNumber>& a, const std::vector<CyclotomicNumber>& b)
{
    if (a.size() != b.size() || a.empty()) {
        throw DimensionMismatchError("weighted inner product needs two nonempty vectors of equal length");
    }
    const std::uint32_t L = std::lcm(common_field_order(a), common_field_order(b));
    CyclotomicNumber sum(L, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i].embed(L).conjugate() * b[i].embed(L);
    return sum * Rational(1, static_cast<long long>(a.size()));
}

Rational coefficient_pairing(const GroupRingElement& f, const GroupRingElement& g)
{
    if (f.n() != g.n()) {
        throw DimensionMismatchError("group ring elements of different orders");
    }
    Rational sum(0);
    for (std::size_t i = 0; i < f.n(); ++i) sum += f.coeffs()[i] * g.coeffs()[i];
    return sum;
}

bool parseval_check(const GroupRingElement& f, const GroupRingElement& g)
{
    const CyclotomicNumber rhs = weighted_inner_product(dft_inverse(f), dft_inverse(g));
    return rhs.is_rational() && rhs.to_rational() == coefficient_pairing(f, g);
}

GroupRingElement random_group_ring_element(std::uint32_t n, std::mt19937_64& rng, std::int64_t bound)
{
    std::uniform_int_distribution<std::int64_t> d(-bound, bound);
    std::vector<Rational> c;
    for (std::uint32_t i = 0; i < n; ++i) c.emplace_back(static_cast<long long>(d(rng)));
    return GroupRingElement(n, std::move(c));
}

QuotientRing wps_ring(const std::vector<std::uint32_t>& weights)
{
    if (weights.empty()) {
        throw SchemaError("weighted projective space needs at least one weight");
    }
    UniPoly modulus = UniPoly::constant(1);
    for (auto a : weights) {
        if (a == 0) throw SchemaError("weights must be positive");
        modulus = modulus * UniPoly::x_pow_minus_one(a);
    }
    return QuotientRing(modulus);
}

namespace {

QuotientRingElement one_minus_x_inv(const QuotientRing& ring, std::uint32_t a)
{
    return ring.one() - ring.x_power(-static_cast<long>(a));
}

}  // namespace

WPSElement wps_euler_class_tangent(const std::vector<std::uint32_t>& weights)
{
    if (weights.size() < 2) {
        throw SchemaError("the Euler class needs at least two weights");
    }
    const QuotientRing ring = wps_ring(weights);
    QuotientRingElement sum = ring.zero();
    for (std::size_t i = 0; i < weights.size(); ++i) {
        QuotientRingElement term = ring.one();
        for (std::size_t j = 0; j < weights.size(); ++j)
            if (j != i) term *= one_minus_x_inv(ring, weights[j]);
        sum += term;
    }
    return {weights, sum};
}

WPSElement wps_relation(const std::vector<std::uint32_t>& weights)
{
    const QuotientRing ring = wps_ring(weights);
    QuotientRingElement prod = ring.one();
    for (auto a : weights) prod *= one_minus_x_inv(ring, a);
    return {weights, prod};
}

ChowP23Element operator*(const ChowP23Element& a, const ChowP23Element& b)
{
    return {a.c0 * b.c0,
            a.c0 * b.c1 + a.c1 * b.c0,
            {a.twisted[0] * b.twisted[0], a.twisted[1] * b.twisted[1], a.twisted[2] * b.twisted[2]}};
}

ChowP23Element orbch_p23(std::int64_t k)
{
    return {CyclotomicNumber(6, Rational(1)),
            CyclotomicNumber(6, Rational(static_cast<long long>(k))),
            {cyclo_root_of_unity(2, k, 6), cyclo_root_of_unity(6, k, 6), cyclo_root_of_unity(6, 5 * k, 6)}};
}

Integer bg_moduli_count(std::int64_t n, std::int64_t d)
{
    if (n < 1 || d < 0) {
        throw SchemaError("bg-count needs n >= 1 and d >= 0");
    }
    return binomial(n + d - 1, n - 1);
}

Rational bg_euler_pairing(const Character& chi, const Character& psi) { return char_inner_product(chi, psi); }

}  // namespace orbhrr
