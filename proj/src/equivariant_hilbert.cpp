#include "orbhrr/equivariant_hilbert.hpp"

#include "orbhrr/errors.hpp"

#include <numeric>

namespace orbhrr {

namespace detail {

std::int64_t isqrt(std::int64_t n)
{
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace detail

K3GModel nikulin_model() { return expand_orbits(preset_cyclic(2)); }

std::int64_t length_mu2(const HilbClassMu2& c)
{
    return 2 * c.n + std::accumulate(c.m.begin(), c.m.end(), std::int64_t{0});
}

OrbifoldMukaiVector omv_of_class_mu2(const HilbClassMu2& c, SignConvention sign)
{
    OrbifoldMukaiVector v{{1, {}, 1 - length_mu2(c)}, {}};
    const std::int64_t s = sign == SignConvention::Plus ? 4 : -4;
    for (auto mi : c.m) v.twisted.emplace_back(1, Rational(1 + s * mi));
    return v;
}

std::int64_t dim_mu2(const HilbClassMu2& c, SignConvention sign)
{
    static const K3GModel model = nikulin_model();
    std::int64_t squares = 0;
    for (auto mi : c.m) squares += mi * mi;
    const std::int64_t displayed = 2 * (c.n - squares);

    const auto v = omv_of_class_mu2(c, sign);
    const Rational paired = Rational(2) - orbifold_mukai_pairing(model, v, v);
    if (paired != displayed) {
        throw ConsistencyError("dimension " + std::to_string(displayed) + " disagrees with 2 - <v^2> = " +
                               paired.to_string());
    }
    return displayed;
}

std::vector<HilbRow> enumerate_mu2(std::int64_t l)
{
    if (l < 0) {
        throw SchemaError("length must be non-negative");
    }
    std::vector<HilbRow> rows;
    for (std::int64_t n = 0; n <= l; ++n) {
        HilbRow row{n, 0, {}};
        for_each_mu2_solution(l, n, [&](const std::array<std::int64_t, 8>& m) {
            std::int64_t squares = 0;
            for (auto mi : m) squares += mi * mi;
            ++row.count;
            ++row.dims[2 * (n - squares)];
        });
        rows.push_back(std::move(row));
    }
    return rows;
}

ADEForm ade_form(ADEType type, std::size_t rank)
{
    IntMatrix m(rank, std::vector<std::int64_t>(rank, 0));
    auto join = [&](std::size_t a, std::size_t b) { m[a][b] = m[b][a] = 1; };
    for (std::size_t i = 0; i < rank; ++i) m[i][i] = -2;
    switch (type) {
    case ADEType::A:
        if (rank < 1) throw SchemaError("A_k needs k >= 1");
        for (std::size_t i = 0; i + 1 < rank; ++i) join(i, i + 1);
        break;
    case ADEType::D:
        // chain 0 - 1 - ... - (k-2) with node k-1 attached to k-3
        if (rank < 4) throw SchemaError("D_k needs k >= 4");
        for (std::size_t i = 0; i + 2 < rank; ++i) join(i, i + 1);
        join(rank - 3, rank - 1);
        break;
    case ADEType::E:
        // chain 0 - 1 - ... - (k-2) with node k-1 attached to node 2
        if (rank < 6 || rank > 8) throw SchemaError("E_k needs k in {6, 7, 8}");
        for (std::size_t i = 0; i + 2 < rank; ++i) join(i, i + 1);
        join(2, rank - 1);
        break;
    }
    return {type, rank, std::move(m)};
}

std::int64_t dim_ade(std::int64_t n, const std::vector<std::vector<std::int64_t>>& divisors,
                     const std::vector<ADEForm>& forms)
{
    if (divisors.size() != forms.size()) {
        throw DimensionMismatchError("one divisor vector is needed per singular point");
    }
    std::int64_t d = 2 * n;
    for (std::size_t p = 0; p < forms.size(); ++p) {
        const auto& D = divisors[p];
        const auto& M = forms[p].matrix;
        if (D.size() != forms[p].rank) {
            throw DimensionMismatchError("divisor length " + std::to_string(D.size()) + " differs from rank " +
                                         std::to_string(forms[p].rank));
        }
        for (std::size_t i = 0; i < D.size(); ++i)
            for (std::size_t j = 0; j < D.size(); ++j) d += D[i] * M[i][j] * D[j];
    }
    return d;
}

OrbifoldPoint cyclic_orbifold_point(std::uint64_t e)
{
    return {e, std::vector<std::int64_t>(e - 1, 1)};
}

std::int64_t general_length(std::uint64_t group_order, const std::vector<OrbifoldPoint>& points,
                            const GeneralHilbClass& c)
{
    if (c.m.size() != points.size()) {
        throw DimensionMismatchError("class has " + std::to_string(c.m.size()) + " point vectors, expected " +
                                     std::to_string(points.size()));
    }
    std::int64_t l = c.n * static_cast<std::int64_t>(group_order);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        if (c.m[i].size() != pt.irrep_degrees.size()) {
            throw DimensionMismatchError("point " + std::to_string(i) + " needs " +
                                         std::to_string(pt.irrep_degrees.size()) + " coefficients");
        }
        if (pt.stabilizer_order == 0 || group_order % pt.stabilizer_order != 0) {
            throw SchemaError("stabilizer order must divide the group order");
        }
        const auto orbit = static_cast<std::int64_t>(group_order / pt.stabilizer_order);
        for (std::size_t j = 0; j < c.m[i].size(); ++j) l += orbit * c.m[i][j] * pt.irrep_degrees[j];
    }
    return l;
}

}  // namespace orbhrr
