#pragma once

#include "orbhrr/inertia.hpp"
#include "orbhrr/mukai.hpp"
#include "orbhrr/orbifold_hrr.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace orbhrr {

/// Numerical class n*b + sum m_i b_i of a mu_2-equivariant Hilbert scheme on a
/// K3 with a Nikulin involution (eight fixed points p_1..p_8).
struct HilbClassMu2 {
    std::int64_t n = 0;
    std::array<std::int64_t, 8> m{};
};

/// Sign of the twisted entries 1 +/- 4 m_i. Plus is the value of b_i =
/// [O_{p_i} (x) rho_1], whose local character at p_i is -4. Minus is the
/// value obtained from [O_{p_i}] with local character +4; it does not
/// reproduce 2(n - sum m_i^2) unless sum m_i = 0.
enum class SignConvention { Plus, Minus };

inline constexpr SignConvention kDefaultSignConvention = SignConvention::Plus;

/// Nikulin involution with one sector entry per fixed point.
K3GModel nikulin_model();

/// 2n + sum m_i
std::int64_t length_mu2(const HilbClassMu2& c);

/// (1, 0, 1 - l) with twisted entries 1 + 4 m_i (Plus) or 1 - 4 m_i (Minus).
OrbifoldMukaiVector omv_of_class_mu2(const HilbClassMu2& c, SignConvention sign = kDefaultSignConvention);

/// 2(n - sum m_i^2), checked against 2 - <v(n,m)^2> on nikulin_model().
/// Throws ConsistencyError if the two disagree.
std::int64_t dim_mu2(const HilbClassMu2& c, SignConvention sign = kDefaultSignConvention);

struct HilbRow {
    std::int64_t n = 0;
    std::uint64_t count = 0;
    /// dimension -> number of classes with that dimension
    std::map<std::int64_t, std::uint64_t> dims;
};

/// For n = 0..l, the classes m in Z^8 with sum m_i = l - 2n and sum m_i^2 <= n.
/// Rows with no solutions are included with count 0.
std::vector<HilbRow> enumerate_mu2(std::int64_t l);

/// Calls visit(m) for every m in S(l, n), in lexicographic order.
template <typename Visit>
void for_each_mu2_solution(std::int64_t l, std::int64_t n, Visit&& visit);

enum class ADEType { A, D, E };

/// Negative Cartan matrix of a simply laced root system.
struct ADEForm {
    ADEType type;
    std::size_t rank;
    IntMatrix matrix;
};

/// A_k (k >= 1), D_k (k >= 4), E_k (k = 6, 7, 8). SchemaError otherwise.
ADEForm ade_form(ADEType type, std::size_t rank);

/// 2n + sum_i D_i^T M_i D_i. DimensionMismatchError on length mismatch.
std::int64_t dim_ade(std::int64_t n, const std::vector<std::vector<std::int64_t>>& divisors,
                     const std::vector<ADEForm>& forms);

/// One orbit of points with nontrivial stabilizer G_i, described by the
/// degrees of the nontrivial irreducible representations of G_i.
struct OrbifoldPoint {
    std::uint64_t stabilizer_order = 1;
    std::vector<std::int64_t> irrep_degrees;
};

/// Point with cyclic stabilizer of order e: e - 1 nontrivial characters of degree 1.
OrbifoldPoint cyclic_orbifold_point(std::uint64_t e);

struct GeneralHilbClass {
    std::int64_t n = 0;
    std::vector<std::vector<std::int64_t>> m;  // one vector per orbifold point
};

/// n |G| + sum_i |G / G_i| sum_j m_ij deg rho_ij.
std::int64_t general_length(std::uint64_t group_order, const std::vector<OrbifoldPoint>& points,
                            const GeneralHilbClass& c);

// Implementation of the template above.
namespace detail {

template <typename Visit>
void mu2_search(std::array<std::int64_t, 8>& m, std::size_t i, std::int64_t remaining_sum,
                std::int64_t remaining_sq, std::int64_t bound, Visit& visit)
{
    if (i == 8) {
        if (remaining_sum == 0) visit(static_cast<const std::array<std::int64_t, 8>&>(m));
        return;
    }
    const auto slots = static_cast<std::int64_t>(8 - i);
    for (std::int64_t x = -bound; x <= bound; ++x) {
        const std::int64_t sq = remaining_sq - x * x;
        if (sq < 0) continue;
        const std::int64_t rest = remaining_sum - x;
        // Cauchy-Schwarz: (sum of the rest)^2 <= (slots - 1) * (sum of their squares)
        if (rest * rest > (slots - 1) * sq) continue;
        m[i] = x;
        mu2_search(m, i + 1, rest, sq, bound, visit);
    }
    m[i] = 0;
}

std::int64_t isqrt(std::int64_t n);

}  // namespace detail

template <typename Visit>
void for_each_mu2_solution(std::int64_t l, std::int64_t n, Visit&& visit)
{
    if (n < 0) return;
    std::array<std::int64_t, 8> m{};
    detail::mu2_search(m, 0, l - 2 * n, n, detail::isqrt(n), visit);
}

}  // namespace orbhrr
