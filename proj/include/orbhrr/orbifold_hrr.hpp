#pragma once

#include "orbhrr/cyclotomic.hpp"
#include "orbhrr/inertia.hpp"
#include "orbhrr/mukai.hpp"
#include "orbhrr/rational.hpp"

#include <span>
#include <vector>

namespace orbhrr {

/// Numerical data of a G-equivariant sheaf: its Mukai vector on X and, per
/// sector entry, the value chi_{phi_ij}(g_i) of the local character.
struct EquivariantClass {
    MukaiVector mukai;
    std::vector<CyclotomicNumber> local_chars;
};

struct OrbifoldMukaiVector {
    MukaiVector global;
    std::vector<CyclotomicNumber> twisted;

    friend bool operator==(const OrbifoldMukaiVector&, const OrbifoldMukaiVector&) = default;
};

OrbifoldMukaiVector operator+(const OrbifoldMukaiVector& a, const OrbifoldMukaiVector& b);
OrbifoldMukaiVector operator*(std::int64_t k, const OrbifoldMukaiVector& v);
EquivariantClass operator+(const EquivariantClass& a, const EquivariantClass& b);

/// Throws DimensionMismatchError if the class does not have one entry per sector.
OrbifoldMukaiVector orbifold_mukai_vector(const K3GModel& model, const EquivariantClass& x);

/// (1/2) sum_j mult_j conj(a_j) b_j / (|G_ij| (1 - Re lambda_ij)).
/// Sesquilinear: conjugate-linear in a, linear in b.
CyclotomicNumber twisted_pairing(const K3GModel& model, std::span<const CyclotomicNumber> a,
                                 std::span<const CyclotomicNumber> b);

/// <v, w>_X / |G| + twisted_pairing, as a cyclotomic number.
CyclotomicNumber orbifold_mukai_pairing_exact(const K3GModel& model, const OrbifoldMukaiVector& v,
                                              const OrbifoldMukaiVector& w);

/// Same value as a rational; ExactnessError if it is not rational.
Rational orbifold_mukai_pairing(const K3GModel& model, const OrbifoldMukaiVector& v, const OrbifoldMukaiVector& w);

/// chi(x, y) by orbifold HRR.
Rational euler_pairing(const K3GModel& model, const EquivariantClass& x, const EquivariantClass& y);

/// 2 - chi(x, x).
Rational moduli_dimension(const K3GModel& model, const EquivariantClass& x);

/// O_X with the trivial linearization: v = (1, 0, 1), every local value 1.
EquivariantClass structure_sheaf_class(const K3GModel& model);

/// Structure sheaf of a free orbit: v = (0, 0, |G|), every local value 0.
EquivariantClass point_class(const K3GModel& model);

/// Tangent bundle: v = (2, 0, -22), local value lambda + lambda^{-1} = 2 Re lambda.
EquivariantClass tangent_class(const K3GModel& model);

/// Line bundle with first Chern class c1 in the invariant lattice and trivial
/// action at the fixed points: v = (1, c1, 1 + c1^2/2), every local value 1.
EquivariantClass line_bundle_class(const K3GModel& model, const NSClass& c1);

}  // namespace orbhrr
