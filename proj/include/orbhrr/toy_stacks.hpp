#pragma once

#include "orbhrr/cyclotomic.hpp"
#include "orbhrr/group.hpp"
#include "orbhrr/polynomial.hpp"
#include "orbhrr/rational.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace orbhrr {

/// Element sum_j f_j x^j of R(mu_n) = Z[x]/(x^n - 1) (rational coefficients allowed).
class GroupRingElement {
public:
    GroupRingElement(std::uint32_t n, std::vector<Rational> coeffs);

    static GroupRingElement x_power(std::uint32_t n, std::int64_t k);

    std::uint32_t n() const { return n_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    GroupRingElement& operator+=(const GroupRingElement& o);
    /// Cyclic convolution.
    GroupRingElement& operator*=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator*(GroupRingElement a, const GroupRingElement& b) { return a *= b; }
    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
    void check_same_n(const GroupRingElement& o) const;

    std::uint32_t n_;
    std::vector<Rational> coeffs_;
};

/// f_hat(k) = sum_j omega^{jk} f_j with omega = zeta_n, for k = 0..n-1.
std::vector<CyclotomicNumber> dft_inverse(const GroupRingElement& f);

/// (1/n) sum_i conj(a_i) b_i. DimensionMismatchError on length mismatch.
CyclotomicNumber weighted_inner_product(const std::vector<CyclotomicNumber>& a, const std::vector<CyclotomicNumber>& b);

/// sum_j f_j g_j, the pairing in which the monomials x^j are orthonormal.
Rational coefficient_pairing(const GroupRingElement& f, const GroupRingElement& g);

/// coefficient_pairing(f, g) == weighted_inner_product(dft_inverse(f), dft_inverse(g)).
bool parseval_check(const GroupRingElement& f, const GroupRingElement& g);

/// Random element with integer coefficients in [-bound, bound].
GroupRingElement random_group_ring_element(std::uint32_t n, std::mt19937_64& rng, std::int64_t bound = 10);

/// K-ring of the weighted projective stack P(a_0, ..., a_k):
/// Z[x] / prod_i (x^{a_i} - 1), x the class of O(1).
QuotientRing wps_ring(const std::vector<std::uint32_t>& weights);

struct WPSElement {
    std::vector<std::uint32_t> weights;
    QuotientRingElement residue;

    std::string to_string() const { return residue.to_string("x"); }
};

/// sum_i prod_{j != i} (1 - x^{-a_j}). SchemaError for fewer than two weights
/// or a zero weight.
WPSElement wps_euler_class_tangent(const std::vector<std::uint32_t>& weights);

/// prod_i (1 - x^{-a_i}); zero in the ring.
WPSElement wps_relation(const std::vector<std::uint32_t>& weights);

/// Orbifold Chow ring of P(2,3): c0 + c1 h in C[h]/(h^2) on the untwisted
/// sector, plus one value per twisted sector (mu_2 point, then the two
/// nontrivial elements at the mu_3 point). Entries live in Q(zeta_6).
struct ChowP23Element {
    CyclotomicNumber c0;
    CyclotomicNumber c1;
    std::array<CyclotomicNumber, 3> twisted;

    friend ChowP23Element operator*(const ChowP23Element& a, const ChowP23Element& b);
    friend bool operator==(const ChowP23Element&, const ChowP23Element&) = default;
};

/// orbch(x^k) = ((1 + h)^k mod h^2, (-1)^k, zeta_6^k, zeta_6^{5k}).
ChowP23Element orbch_p23(std::int64_t k);

/// Number of degree-d points of the moduli of Bmu_n sheaves: C(n + d - 1, n - 1).
Integer bg_moduli_count(std::int64_t n, std::int64_t d);

/// chi(V, W) on BG by orbifold HRR: the centralizer-weighted character pairing.
Rational bg_euler_pairing(const Character& chi, const Character& psi);

}  // namespace orbhrr
