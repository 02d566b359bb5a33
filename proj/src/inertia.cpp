#include "orbhrr/inertia.hpp"

#include "orbhrr/errors.hpp"

#include <map>
#include <numeric>

namespace orbhrr {

namespace {

void require_preset_order(std::uint32_t n)
{
    if (n < 2 || n > 8) {
        throw SchemaError("cyclic order must be between 2 and 8, got " + std::to_string(n));
    }
}

std::int64_t normalized_exponent(std::int64_t a, std::uint32_t n)
{
    const auto m = static_cast<std::int64_t>(n);
    return ((a % m) + m) % m;
}

}  // namespace

K3GModel::K3GModel(GroupPtr group, std::vector<SectorEntry> sectors, PicardLattice lattice)
    : group_(std::move(group)), sectors_(std::move(sectors)), lattice_(std::move(lattice))
{
    if (!group_) {
        throw SchemaError("model has no group");
    }
    const std::size_t nontrivial = group_->class_count() - 1;
    for (std::size_t j = 0; j < sectors_.size(); ++j) {
        auto& e = sectors_[j];
        const std::string where = "sector " + std::to_string(j) + ": ";
        if (e.class_index >= nontrivial) {
            throw SchemaError(where + "class index " + std::to_string(e.class_index) + " out of range (" +
                              std::to_string(nontrivial) + " nontrivial classes)");
        }
        const auto& cls = group_->classes()[e.class_index + 1];
        const std::size_t g_order = group_->element_order(cls.representative);
        if (e.eig_order != g_order) {
            throw SchemaError(where + "eigenvalue order " + std::to_string(e.eig_order) +
                              " differs from the class order " + std::to_string(g_order));
        }
        e.eig_exp = normalized_exponent(e.eig_exp, e.eig_order);
        if (gcd(e.eig_exp, static_cast<std::int64_t>(e.eig_order)) != 1) {
            throw SchemaError(where + "eigenvalue exponent is not coprime to its order");
        }
        if (e.stabilizer_order == 0 || cls.centralizer_order % e.stabilizer_order != 0) {
            throw SchemaError(where + "stabilizer order " + std::to_string(e.stabilizer_order) +
                              " does not divide the centralizer order " + std::to_string(cls.centralizer_order));
        }
        if (e.stabilizer_order % g_order != 0) {
            throw SchemaError(where + "stabilizer order is not a multiple of the class order");
        }
        if (e.multiplicity == 0) {
            throw SchemaError(where + "multiplicity must be positive");
        }
        ambient_ = std::lcm(ambient_, e.eig_order);
    }
    const CyclotomicNumber one(ambient_, Rational(1));
    for (std::size_t j = 0; j < sectors_.size(); ++j) {
        const CyclotomicNumber denom = (one - eigenvalue(j, ambient_).real_part()) *
                                       Rational(static_cast<long long>(sectors_[j].stabilizer_order));
        weights_.push_back(denom.inverse());
    }
}

CyclotomicNumber K3GModel::eigenvalue(std::size_t j, std::uint32_t field_order) const
{
    const auto& e = sectors_.at(j);
    return cyclo_root_of_unity(e.eig_order, e.eig_exp, field_order);
}

CyclotomicNumber K3GModel::orbit_weight(std::size_t j, std::uint32_t field_order) const
{
    const CyclotomicNumber& w = weights_.at(j);
    return field_order == ambient_ ? w : w.embed(field_order);
}

std::int64_t fixed_point_count(std::uint32_t n)
{
    static constexpr std::int64_t table[] = {0, 0, 8, 6, 4, 4, 2, 3, 2};
    require_preset_order(n);
    return table[n];
}

K3GModel preset_cyclic(std::uint32_t n, PicardLattice lattice)
{
    require_preset_order(n);
    // t[e]: points whose stabilizer is exactly the subgroup of order e.
    std::map<std::uint32_t, std::int64_t, std::greater<>> exact;
    for (std::uint32_t e = n; e >= 2; --e) {
        if (n % e != 0) continue;
        std::int64_t t = fixed_point_count(e);
        for (const auto& [bigger, count] : exact)
            if (bigger % e == 0) t -= count;
        if (t < 0 || (t * e) % n != 0) {
            throw ConsistencyError("fixed-point counts do not split into orbits for n = " + std::to_string(n));
        }
        exact[e] = t;
    }

    std::vector<SectorEntry> sectors;
    for (std::uint32_t k = 1; k < n; ++k) {
        const std::uint32_t g = std::gcd(n, k);
        const std::uint32_t nk = n / g;
        for (const auto& [e, t] : exact) {
            if (e % nk != 0 || t == 0) continue;
            sectors.push_back({k - 1, e, nk, static_cast<std::int64_t>(k / g), static_cast<std::uint64_t>(t * e / n)});
        }
    }
    return K3GModel(std::make_shared<const FiniteGroup>(cyclic_group(n)), std::move(sectors), std::move(lattice));
}

K3GModel preset_trivial(PicardLattice lattice)
{
    return K3GModel(std::make_shared<const FiniteGroup>(cyclic_group(1)), {}, std::move(lattice));
}

K3GModel expand_orbits(const K3GModel& model)
{
    std::vector<SectorEntry> sectors;
    for (const auto& e : model.sectors()) {
        for (std::uint64_t i = 0; i < e.multiplicity; ++i) {
            SectorEntry single = e;
            single.multiplicity = 1;
            sectors.push_back(single);
        }
    }
    return K3GModel(model.group(), std::move(sectors), model.lattice());
}

CyclotomicNumber identity_value(const K3GModel& model)
{
    const std::uint32_t L = model.ambient_order();
    CyclotomicNumber sum(L, Rational(0));
    for (std::size_t j = 0; j < model.sectors().size(); ++j) {
        sum += model.orbit_weight(j, L) * Rational(static_cast<long long>(model.sectors()[j].multiplicity));
    }
    return CyclotomicNumber(L, Rational(1, static_cast<long long>(model.group()->order()))) + sum * Rational(1, 4);
}

Rational validate_identity(const K3GModel& model)
{
    const CyclotomicNumber value = identity_value(model);
    if (!value.is_rational()) {
        const CyclotomicNumber residual = value - CyclotomicNumber(value.field_order(), Rational(1));
        throw ModelIntegrityError("unit identity evaluates to an irrational number", residual.to_string());
    }
    return value.to_rational();
}

void check_identity(const K3GModel& model)
{
    const Rational value = validate_identity(model);
    if (value != 1) {
        const Rational residual = value - 1;
        throw ModelIntegrityError("unit identity fails: value " + value.to_string() + ", residual " +
                                      residual.to_string(),
                                  residual.to_string());
    }
}

std::int64_t solve_fixed_points_cyclic(std::uint32_t n)
{
    require_preset_order(n);
    // 1/n + (1/4n) sum_k s_k / (1 - Re zeta_n^k) = 1, i.e. sum_k ... = 4(n - 1).
    const CyclotomicNumber one(n, Rational(1));
    CyclotomicNumber unknown_coeff(n, Rational(0));
    CyclotomicNumber known(n, Rational(0));
    for (std::uint32_t k = 1; k < n; ++k) {
        const std::uint32_t nk = n / std::gcd(n, k);
        const CyclotomicNumber w = (one - cyclo_root_of_unity(n, k, n).real_part()).inverse();
        if (nk == n) {
            unknown_coeff += w;
        } else {
            known += w * Rational(solve_fixed_points_cyclic(nk));
        }
    }
    const Rational f = (Rational(4 * (static_cast<long long>(n) - 1)) - known.to_rational()) / unknown_coeff.to_rational();
    if (!f.is_integer() || f.sign() <= 0) {
        throw ModelIntegrityError("fixed-point count for n = " + std::to_string(n) + " is not a positive integer",
                                  f.to_string());
    }
    return f.to_int64();
}

Rational fixed_points_closed_form(std::uint32_t n)
{
    Rational value(24, static_cast<long long>(n));
    std::uint32_t m = n;
    for (std::uint32_t p = 2; p <= m; ++p) {
        if (m % p != 0) continue;
        value *= Rational(p, p + 1);
        while (m % p == 0) m /= p;
    }
    return value;
}

}  // namespace orbhrr
