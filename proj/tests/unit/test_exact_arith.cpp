#include "doctest.h"

#include "orbhrr/cyclotomic.hpp"
#include "orbhrr/errors.hpp"
#include "orbhrr/polynomial.hpp"
#include "orbhrr/rational.hpp"

#include <random>

using namespace orbhrr;

namespace {

// Schoolbook product of integer polynomials reduced by x^4 = -1; independent of UniPoly.
std::vector<long long> mul_mod_x4_plus_1(const std::vector<long long>& a, const std::vector<long long>& b)
{
    std::vector<long long> full(7, 0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) full[i + j] += a[i] * b[j];
    std::vector<long long> r(4, 0);
    for (std::size_t k = 0; k < 7; ++k) {
        if (k < 4) r[k] += full[k];
        else r[k - 4] -= full[k];
    }
    return r;
}

CyclotomicNumber random_element(std::mt19937& rng, std::uint32_t L)
{
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c(euler_phi(L));
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return CyclotomicNumber(L, UniPoly(c));
}

}  // namespace

TEST_SUITE("rational")
{
    TEST_CASE("canonical form")
    {
        Rational r(Integer(6), Integer(-4));
        CHECK(r.numerator() == -3);
        CHECK(r.denominator() == 2);
        CHECK(r.to_string() == "-3/2");
        CHECK(Rational::parse(" -6/4 ") == r);
        CHECK(Rational::parse("7").is_integer());
        CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DivisionByZeroError);
        CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
        CHECK_THROWS_AS(Rational(1, 2).to_integer(), ExactnessError);
    }

    TEST_CASE("gcd conventions")
    {
        CHECK(gcd(std::int64_t{1}, std::int64_t{0}) == 1);
        CHECK(gcd(std::int64_t{-4}, std::int64_t{0}) == 4);
        CHECK(gcd(std::int64_t{0}, std::int64_t{0}) == 0);
        CHECK(binomial(8, 3) == 56);
        CHECK(binomial(3, 5) == 0);
    }
}

TEST_SUITE("cyclotomic")
{
    TEST_CASE("cyclotomic polynomials")
    {
        // Phi_8 from (x^8 - 1) / ((x^4 - 1)); Phi_1 Phi_2 Phi_4 = x^4 - 1.
        const UniPoly phi8_oracle = divmod(UniPoly::x_pow_minus_one(8), UniPoly::x_pow_minus_one(4)).first;
        CHECK(phi8_oracle == UniPoly({1, 0, 0, 0, 1}));
        CHECK(cyclotomic_polynomial(8) == phi8_oracle);
        CHECK(cyclotomic_polynomial(1) == UniPoly({-1, 1}));
        CHECK(cyclotomic_polynomial(6) == UniPoly({1, -1, 1}));
        for (std::uint32_t n = 1; n <= 40; ++n) {
            CHECK(cyclotomic_polynomial(n).degree() == static_cast<long>(euler_phi(n)));
        }
    }

    TEST_CASE("roots of unity")
    {
        CHECK(cyclo_root_of_unity(2, 1, 2) == CyclotomicNumber(2, Rational(-1)));
        CHECK(cyclo_root_of_unity(4, 2, 4) == CyclotomicNumber(4, Rational(-1)));
        const auto z8 = cyclo_root_of_unity(8, 1, 8);
        CHECK(z8.coeffs() == std::vector<Rational>{0, 1, 0, 0});
        CHECK(z8.pow(8) == CyclotomicNumber(8, Rational(1)));
        CHECK(cyclo_root_of_unity(4, 1, 8) == cyclo_root_of_unity(8, 2, 8));
        CHECK(cyclo_root_of_unity(3, -1, 3) == cyclo_root_of_unity(3, 2, 3));
        CHECK_THROWS_AS(cyclo_root_of_unity(3, 1, 8), AmbientFieldError);
    }

    TEST_CASE("inversion")
    {
        const CyclotomicNumber one4(4, Rational(1));
        CHECK((one4 - cyclo_root_of_unity(4, 1, 4).real_part()).inverse() == one4);

        const auto z8 = cyclo_root_of_unity(8, 1, 8);
        const CyclotomicNumber one8(8, Rational(1));
        const auto inv = (one8 - z8.real_part()).inverse();
        CHECK(inv == CyclotomicNumber(8, Rational(2)) + z8 + z8.conjugate());

        // Brute force: (1 - (z - z^3)/2) * (2 + z - z^3) == 1 mod x^4 + 1, scaled by 2.
        // z^{-1} = -z^3 in Q(zeta_8).
        const std::vector<long long> two_times_lhs{2, -1, 0, 1};
        const std::vector<long long> rhs{2, 1, 0, -1};
        CHECK(mul_mod_x4_plus_1(two_times_lhs, rhs) == std::vector<long long>{2, 0, 0, 0});

        CHECK_THROWS_AS(CyclotomicNumber(5, Rational(0)).inverse(), DivisionByZeroError);
    }

    TEST_CASE("conjugation and real part")
    {
        const auto z3 = cyclo_root_of_unity(3, 1, 3);
        CHECK(z3.conjugate() * z3 == CyclotomicNumber(3, Rational(1)));
        CHECK(cyclo_root_of_unity(2, 1, 2).real_part().to_rational() == -1);
        CHECK(cyclo_root_of_unity(6, 1, 6).real_part().to_rational() == Rational(1, 2));
        CHECK(CyclotomicNumber(7, Rational(1)).real_part().to_rational() == 1);
    }

    TEST_CASE("to_rational")
    {
        CHECK(CyclotomicNumber(12, Rational(3, 2)).to_rational() == Rational(3, 2));
        const auto z3 = cyclo_root_of_unity(3, 1, 3);
        CHECK((z3 + z3 * z3).to_rational() == -1);
        CHECK_THROWS_AS(cyclo_root_of_unity(5, 1, 5).to_rational(), ExactnessError);
    }

    TEST_CASE("embedding")
    {
        const auto z4 = cyclo_root_of_unity(4, 1, 4);
        CHECK(z4.embed(8) == cyclo_root_of_unity(8, 2, 8));
        CHECK(z4.embed(12) == cyclo_root_of_unity(12, 3, 12));
        CHECK_THROWS_AS(z4.embed(6), AmbientFieldError);
        CHECK_THROWS_AS(z4 + cyclo_root_of_unity(3, 1, 3), AmbientFieldError);
    }

    TEST_CASE("print and parse")
    {
        const auto z8 = cyclo_root_of_unity(8, 1, 8);
        const auto v = CyclotomicNumber(8, Rational(2)) + z8 * Rational(-3, 5) + z8.pow(3);
        CHECK(v.to_string() == "c[8]: 2 + -3/5*z + 1*z^3");
        CHECK(CyclotomicNumber::parse(v.to_string()) == v);
        CHECK(CyclotomicNumber::parse("c[8]: 0").is_zero());
        CHECK(CyclotomicNumber::parse("c[4]: 1 - z") == CyclotomicNumber(4, UniPoly({1, -1})));
        CHECK(CyclotomicNumber::parse("c[8]: z^8") == CyclotomicNumber(8, Rational(1)));
        CHECK(CyclotomicNumber::parse("c[3]: -z^2 + 1/2") == CyclotomicNumber(3, UniPoly({Rational(1, 2), 0, -1})));
        CHECK_THROWS_AS(CyclotomicNumber::parse("8: z"), ParseError);
        CHECK_THROWS_AS(CyclotomicNumber::parse("c[0]: 1"), ParseError);
    }

    TEST_CASE("field laws on random elements")
    {
        std::mt19937 rng(20261016);
        for (std::uint32_t L = 1; L <= 24; ++L) {
            for (int trial = 0; trial < 4; ++trial) {
                const auto a = random_element(rng, L);
                const auto b = random_element(rng, L);
                const auto c = random_element(rng, L);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a.conjugate().conjugate() == a);
                CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
                CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
                if (!a.is_zero()) {
                    CHECK(a * a.inverse() == CyclotomicNumber(L, Rational(1)));
                }
            }
        }
    }

    TEST_CASE("rational embedding round trip")
    {
        for (int p = -5; p <= 5; ++p) {
            const Rational q(p, 7);
            CHECK(CyclotomicNumber(9, q).to_rational() == q);
        }
    }

    TEST_CASE("sum of 1/(1 - cos) over roots of unity")
    {
        CHECK(sum_inverse_one_minus_cos(2) == Rational(1, 2));
        CHECK(sum_inverse_one_minus_cos(3) == Rational(4, 3));
        CHECK(sum_inverse_one_minus_cos(7) == 8);
        for (std::uint32_t n = 2; n <= 30; ++n) {
            CHECK(sum_inverse_one_minus_cos(n) == Rational(static_cast<long long>(n) * n - 1, 6));
        }
    }
}

TEST_SUITE("quotient ring")
{
    TEST_CASE("long division example")
    {
        // (x^2 - 1)(x^3 - 1) = x^5 - x^3 - x^2 + 1
        const UniPoly modulus = UniPoly::x_pow_minus_one(2) * UniPoly::x_pow_minus_one(3);
        CHECK(modulus == UniPoly({1, 0, -1, -1, 0, 1}));
        QuotientRing ring(modulus);
        CHECK(ring.reduce(UniPoly::monomial(5)).residue() == UniPoly({-1, 0, 1, 1}));
    }

    TEST_CASE("reducing the modulus gives zero")
    {
        for (unsigned n = 0; n <= 5; ++n) {
            const UniPoly m = pow(UniPoly({-1, 1}), n + 1);
            CHECK(QuotientRing(m).reduce(m).is_zero());
        }
    }

    TEST_CASE("inverse of x")
    {
        QuotientRing ring(UniPoly::x_pow_minus_one(3));
        CHECK(ring.x_inverse().residue() == UniPoly::monomial(2));
        CHECK(ring.x() * ring.x_inverse() == ring.one());
        CHECK(ring.x_power(-4) == ring.x_power(2));

        QuotientRing no_unit(UniPoly({0, 0, 1}));
        CHECK_FALSE(no_unit.x_invertible());
        CHECK_THROWS_AS(no_unit.x_inverse(), RingError);
    }

    TEST_CASE("reduction is idempotent")
    {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> d(-9, 9);
        QuotientRing ring(UniPoly::x_pow_minus_one(2) * UniPoly::x_pow_minus_one(3) * UniPoly::x_pow_minus_one(2));
        for (int t = 0; t < 50; ++t) {
            std::vector<Rational> c(12);
            for (auto& x : c) x = d(rng);
            const auto once = ring.reduce(UniPoly(c));
            CHECK(ring.reduce(once.residue()) == once);
            CHECK(once.residue().degree() < ring.modulus().degree());
        }
    }

    TEST_CASE("extended gcd")
    {
        const UniPoly a = UniPoly({-1, 1}) * UniPoly({2, 1});
        const UniPoly b = UniPoly({-1, 1}) * UniPoly({3, 0, 1});
        const auto eg = extended_gcd(a, b);
        CHECK(eg.gcd == UniPoly({-1, 1}));
        CHECK(eg.s * a + eg.t * b == eg.gcd);
    }
}
