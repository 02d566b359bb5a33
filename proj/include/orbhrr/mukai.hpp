#pragma once

#include "orbhrr/polynomial.hpp"
#include "orbhrr/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbhrr {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Class in the Picard lattice, in the lattice's coordinates. An empty
/// coordinate vector stands for the zero class of any rank.
struct NSClass {
    std::vector<std::int64_t> coords;

    bool is_zero() const;
    NSClass operator-() const;
    friend bool operator==(const NSClass&, const NSClass&) = default;
};

/// Picard lattice of a K3 surface (or its G-invariant part) with a fixed
/// polarization h. The Gram matrix is symmetric with even diagonal and (h^2) > 0.
class PicardLattice {
public:
    PicardLattice(IntMatrix gram, std::vector<std::int64_t> ample);

    std::size_t rank() const { return gram_.size(); }
    const IntMatrix& gram() const { return gram_; }
    NSClass ample() const { return NSClass{ample_}; }
    /// (h^2)
    std::int64_t polarization_degree() const;

    friend bool operator==(const PicardLattice&, const PicardLattice&) = default;

private:
    IntMatrix gram_;
    std::vector<std::int64_t> ample_;
};

/// Rank one lattice Z*h with (h^2) = degree.
PicardLattice rank_one_lattice(std::int64_t degree);

/// Elliptic K3 with section s and fibre f: (s^2) = -2, (sf) = 1, (f^2) = 0,
/// polarized by h = s + 3f so that (h^2) = 4.
PicardLattice elliptic_k3_lattice();

/// Mukai vector (r, c1, s) with s = r + ch_2.
struct MukaiVector {
    std::int64_t r = 0;
    NSClass c1;
    std::int64_t s = 0;

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

std::string to_string(const MukaiVector& v);

std::int64_t intersect(const PicardLattice& lattice, const NSClass& a, const NSClass& b);

/// r_v s_w - (c1_v . c1_w) + s_v r_w
std::int64_t mukai_pairing(const PicardLattice& lattice, const MukaiVector& v, const MukaiVector& w);

/// (r, -c1, s)
MukaiVector mukai_dual(const MukaiVector& v);

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator*(std::int64_t k, const MukaiVector& v);

/// Polynomial over Q taking integer values at every integer; validated on construction.
class NumericalPolynomial {
public:
    explicit NumericalPolynomial(UniPoly poly);

    const UniPoly& poly() const { return poly_; }
    Rational operator()(const Rational& z) const { return poly_.evaluate(z); }
    std::string to_string() const { return poly_.to_string("z"); }

    friend bool operator==(const NumericalPolynomial&, const NumericalPolynomial&) = default;

private:
    UniPoly poly_;
};

/// True when all forward differences at 0 are integers, i.e. the polynomial
/// has integer coordinates in the binomial basis C(z, k).
bool is_numerical(const UniPoly& p);

/// P(z) = r (h^2)/2 z^2 + (c1.h) z + r + s
NumericalPolynomial hilbert_polynomial(const PicardLattice& lattice, const MukaiVector& v);

/// P divided by its leading coefficient. Throws DivisionByZeroError for P = 0.
UniPoly reduced_hilbert_polynomial(const NumericalPolynomial& p);

struct DegreeSlope {
    std::int64_t degree = 0;
    /// nullopt encodes slope = infinity (rank zero).
    std::optional<Rational> slope;

    bool infinite() const { return !slope.has_value(); }
    std::string slope_string() const { return slope ? slope->to_string() : "inf"; }
};

/// d = c1.h and mu = d/r, infinite when r = 0.
DegreeSlope degree_and_slope(const PicardLattice& lattice, const MukaiVector& v);

/// gcd(r, c1 coordinates, s) == 1. The zero vector is not primitive.
bool is_primitive(const MukaiVector& v);

struct HypothesisReport {
    bool rank_positive = false;
    bool primitive = false;
    bool degree_positive = false;
    bool rank_degree_coprime = false;     // gcd(r, d) == 1
    bool rank_degree_s_coprime = false;   // gcd(r, d, s) == 1
    bool generic_polarization = false;    // caller's assertion, never computed
    /// r > 0, v primitive with generic polarization, and d > 0 or gcd(r, d) = 1:
    /// the moduli space is then deformation equivalent to a Hilbert scheme of points.
    bool hilbert_deformation_type = false;
    /// gcd(r, d, s) = 1, or v primitive with generic polarization: semistable = stable.
    bool smooth_projective = false;
};

HypothesisReport check_hypotheses(const PicardLattice& lattice, const MukaiVector& v, bool generic_polarization);

/// Same predicates from raw numbers, for callers without a lattice (degree given directly).
HypothesisReport check_hypotheses(std::int64_t r, const NSClass& c1, std::int64_t s, std::int64_t degree,
                                  bool generic_polarization);

/// p(z) <= q(z) for all z >> 0.
bool poly_leq_eventually(const UniPoly& p, const UniPoly& q);

}  // namespace orbhrr
