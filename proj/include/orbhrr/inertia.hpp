#pragma once

#include "orbhrr/cyclotomic.hpp"
#include "orbhrr/group.hpp"
#include "orbhrr/mukai.hpp"
#include "orbhrr/rational.hpp"

#include <cstdint>
#include <vector>

namespace orbhrr {

/// One group of identical orbits in the fixed locus of a nontrivial class g_i.
/// The eigenvalue of dg_i at the fixed point is zeta_{eig_order}^{eig_exp}.
struct SectorEntry {
    /// 0-based index into the nontrivial conjugacy classes, i.e. class
    /// class_index + 1 of the group.
    std::size_t class_index = 0;
    std::uint64_t stabilizer_order = 1;
    std::uint32_t eig_order = 1;
    std::int64_t eig_exp = 0;
    std::uint64_t multiplicity = 1;

    friend bool operator==(const SectorEntry&, const SectorEntry&) = default;
};

/// Symplectic action of a finite group on a K3 surface, recorded through its
/// twisted sectors and the G-invariant Picard lattice.
///
/// Construction checks each entry against the group (class range, eigenvalue
/// order equal to the order of g_i, coprime exponent, order(g_i) | stabilizer |
/// centralizer order) and throws SchemaError on violation. The unit identity is
/// not checked here; see validate_identity and check_identity.
class K3GModel {
public:
    K3GModel(GroupPtr group, std::vector<SectorEntry> sectors, PicardLattice lattice);

    const GroupPtr& group() const { return group_; }
    const std::vector<SectorEntry>& sectors() const { return sectors_; }
    const PicardLattice& lattice() const { return lattice_; }
    /// lcm of the eigenvalue orders; every sector weight lives in Q(zeta_L).
    std::uint32_t ambient_order() const { return ambient_; }

    /// lambda for sector j, embedded in Q(zeta_L) with L = ambient_order().
    CyclotomicNumber eigenvalue(std::size_t j, std::uint32_t field_order) const;
    /// 1 / (|G_ij| (1 - Re lambda_ij)) for a single orbit of sector j.
    /// Computed once in Q(zeta_L) at construction and embedded on request.
    CyclotomicNumber orbit_weight(std::size_t j, std::uint32_t field_order) const;

    friend bool operator==(const K3GModel& a, const K3GModel& b)
    {
        return *a.group_ == *b.group_ && a.sectors_ == b.sectors_ && a.lattice_ == b.lattice_;
    }

private:
    GroupPtr group_;
    std::vector<SectorEntry> sectors_;
    PicardLattice lattice_;
    std::uint32_t ambient_ = 1;
    std::vector<CyclotomicNumber> weights_;
};

/// Number of fixed points f_n of a symplectic automorphism of order n, n = 2..8,
/// as tabulated (independent of the solver below).
std::int64_t fixed_point_count(std::uint32_t n);

/// Z/n acting with per-power fixed counts f_{ord(g^k)} and eigenvalue zeta_n^k
/// on the sector of g^k, stored orbit-level. Throws SchemaError unless 2 <= n <= 8.
K3GModel preset_cyclic(std::uint32_t n, PicardLattice lattice = rank_one_lattice(2));

/// Trivial group: no twisted sectors.
K3GModel preset_trivial(PicardLattice lattice = rank_one_lattice(2));

/// Same model with every entry of multiplicity m split into m entries of
/// multiplicity 1, so that each orbit has its own twisted coordinate.
K3GModel expand_orbits(const K3GModel& model);

/// 1/|G| + (1/4) sum_j mult_j / (|G_ij| (1 - Re lambda_ij)), exactly.
CyclotomicNumber identity_value(const K3GModel& model);

/// identity_value as a rational. Throws ModelIntegrityError if it is irrational.
Rational validate_identity(const K3GModel& model);

/// Throws ModelIntegrityError carrying value - 1 unless the identity equals 1.
void check_identity(const K3GModel& model);

/// Solves the unit identity for f_n, using recursively solved counts for the
/// proper powers. Throws ModelIntegrityError if the solution is not a positive
/// integer and SchemaError unless 2 <= n <= 8.
std::int64_t solve_fixed_points_cyclic(std::uint32_t n);

/// 24/n * prod over primes p | n of p/(p+1).
Rational fixed_points_closed_form(std::uint32_t n);

}  // namespace orbhrr
