#include "orbhrr/orbifold_hrr.hpp"

#include "orbhrr/errors.hpp"

#include <numeric>

namespace orbhrr {

namespace {

void check_twisted_length(const K3GModel& model, std::size_t length, const char* what)
{
    if (length != model.sectors().size()) {
        throw DimensionMismatchError(std::string(what) + " has " + std::to_string(length) +
                                     " twisted entries, model has " + std::to_string(model.sectors().size()) +
                                     " sectors");
    }
}

std::vector<CyclotomicNumber> add_entries(const std::vector<CyclotomicNumber>& a,
                                          const std::vector<CyclotomicNumber>& b)
{
    if (a.size() != b.size()) {
        throw DimensionMismatchError("twisted parts have different lengths");
    }
    std::vector<CyclotomicNumber> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint32_t L = std::lcm(a[i].field_order(), b[i].field_order());
        out.push_back(a[i].embed(L) + b[i].embed(L));
    }
    return out;
}

std::vector<CyclotomicNumber> constant_entries(const K3GModel& model, std::int64_t value)
{
    return std::vector<CyclotomicNumber>(model.sectors().size(), CyclotomicNumber(1, Rational(value)));
}

}  // namespace

OrbifoldMukaiVector operator+(const OrbifoldMukaiVector& a, const OrbifoldMukaiVector& b)
{
    return {a.global + b.global, add_entries(a.twisted, b.twisted)};
}

OrbifoldMukaiVector operator*(std::int64_t k, const OrbifoldMukaiVector& v)
{
    OrbifoldMukaiVector out{k * v.global, v.twisted};
    for (auto& t : out.twisted) t *= Rational(k);
    return out;
}

EquivariantClass operator+(const EquivariantClass& a, const EquivariantClass& b)
{
    return {a.mukai + b.mukai, add_entries(a.local_chars, b.local_chars)};
}

OrbifoldMukaiVector orbifold_mukai_vector(const K3GModel& model, const EquivariantClass& x)
{
    check_twisted_length(model, x.local_chars.size(), "class");
    return {x.mukai, x.local_chars};
}

CyclotomicNumber twisted_pairing(const K3GModel& model, std::span<const CyclotomicNumber> a,
                                 std::span<const CyclotomicNumber> b)
{
    check_twisted_length(model, a.size(), "left vector");
    check_twisted_length(model, b.size(), "right vector");
    const std::uint32_t L =
        std::lcm(common_field_order(a, model.ambient_order()), common_field_order(b, model.ambient_order()));
    CyclotomicNumber sum(L, Rational(0));
    for (std::size_t j = 0; j < a.size(); ++j) {
        const auto mult = static_cast<long long>(model.sectors()[j].multiplicity);
        sum += a[j].embed(L).conjugate() * b[j].embed(L) * model.orbit_weight(j, L) * Rational(mult);
    }
    return sum * Rational(1, 2);
}

CyclotomicNumber orbifold_mukai_pairing_exact(const K3GModel& model, const OrbifoldMukaiVector& v,
                                              const OrbifoldMukaiVector& w)
{
    const CyclotomicNumber t = twisted_pairing(model, v.twisted, w.twisted);
    const Rational untwisted(mukai_pairing(model.lattice(), v.global, w.global),
                             static_cast<long long>(model.group()->order()));
    return t + CyclotomicNumber(t.field_order(), untwisted);
}

Rational orbifold_mukai_pairing(const K3GModel& model, const OrbifoldMukaiVector& v, const OrbifoldMukaiVector& w)
{
    return orbifold_mukai_pairing_exact(model, v, w).to_rational();
}

Rational euler_pairing(const K3GModel& model, const EquivariantClass& x, const EquivariantClass& y)
{
    return orbifold_mukai_pairing(model, orbifold_mukai_vector(model, x), orbifold_mukai_vector(model, y));
}

Rational moduli_dimension(const K3GModel& model, const EquivariantClass& x)
{
    return Rational(2) - euler_pairing(model, x, x);
}

EquivariantClass structure_sheaf_class(const K3GModel& model)
{
    return {{1, {}, 1}, constant_entries(model, 1)};
}

EquivariantClass point_class(const K3GModel& model)
{
    return {{0, {}, static_cast<std::int64_t>(model.group()->order())}, constant_entries(model, 0)};
}

EquivariantClass tangent_class(const K3GModel& model)
{
    EquivariantClass x{{2, {}, -22}, {}};
    const std::uint32_t L = model.ambient_order();
    for (std::size_t j = 0; j < model.sectors().size(); ++j) {
        x.local_chars.push_back(model.eigenvalue(j, L).real_part() * Rational(2));
    }
    return x;
}

EquivariantClass line_bundle_class(const K3GModel& model, const NSClass& c1)
{
    const std::int64_t square = intersect(model.lattice(), c1, c1);
    return {{1, c1, 1 + square / 2}, constant_entries(model, 1)};
}

}  // namespace orbhrr
