// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "orbhrr/cyclotomic.hpp"
#include "orbhrr/equivariant_hilbert.hpp"
#include "orbhrr/errors.hpp"
#include "orbhrr/group.hpp"
#include "orbhrr/inertia.hpp"
#include "orbhrr/json_io.hpp"
#include "orbhrr/mukai.hpp"
#include "orbhrr/orbifold_hrr.hpp"
#include "orbhrr/toy_stacks.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace orbhrr;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Verdict fixed_point_counts()
{
    Verdict v;
    const std::int64_t expected[] = {8, 6, 4, 4, 2, 3, 2};
    std::ostringstream got;
    for (std::uint32_t n = 2; n <= 8; ++n) {
        const std::int64_t f = solve_fixed_points_cyclic(n);
        got << (n > 2 ? "," : "") << f;
        v.require(f == expected[n - 2], "f_" + std::to_string(n) + " = " + std::to_string(f));
        v.require(Rational(f) == fixed_points_closed_form(n), "closed form differs at n = " + std::to_string(n));
    }
    if (v.ok) v.detail = "f_2..f_8 = " + got.str() + ", closed form agrees";
    return v;
}

Verdict unit_identity()
{
    Verdict v;
    for (std::uint32_t n = 2; n <= 8; ++n) {
        const Rational value = validate_identity(preset_cyclic(n));
        v.require(value == 1, "n = " + std::to_string(n) + " gives " + value.to_string());
    }
    if (v.ok) v.detail = "identity = 1 exactly for cyclic:2..cyclic:8";
    return v;
}

Verdict trig_identity()
{
    Verdict v;
    for (std::uint32_t n = 2; n <= 50; ++n) {
        const Rational s = sum_inverse_one_minus_cos(n);
        v.require(s == Rational(static_cast<long long>(n) * n - 1, 6), "n = " + std::to_string(n) + " gives " + s.to_string());
    }
    if (v.ok) v.detail = "sum 1/(1 - cos(2 pi k/n)) = (n^2 - 1)/6 for n = 2..50";
    return v;
}

Verdict worked_dimensions()
{
    Verdict v;
    auto expect = [&](const K3GModel& m, const EquivariantClass& x, long long pairing, long long dim, const char* name) {
        const Rational p = euler_pairing(m, x, x);
        const Rational d = moduli_dimension(m, x);
        v.require(p == pairing && d == dim, std::string(name) + ": <v^2> = " + p.to_string() + ", dim = " + d.to_string());
    };
    const auto mu2 = preset_cyclic(2);
    const auto triv = preset_trivial();
    expect(mu2, tangent_class(mu2), -40, 42, "TX on cyclic:2");
    expect(triv, tangent_class(triv), -88, 90, "TX on trivial");
    expect(mu2, point_class(mu2), 0, 2, "O_p on cyclic:2");
    expect(mu2, structure_sheaf_class(mu2), 2, 0, "O_X on cyclic:2");
    if (v.ok) v.detail = "TX -40/42, trivial TX -88/90, O_p 0/2, O_X 2/0";
    return v;
}

Verdict hilbert_tables()
{
    Verdict v;
    using Row = std::pair<std::uint64_t, std::vector<std::int64_t>>;
    const std::vector<std::vector<Row>> expected = {
        {{1, {0}}},
        {{8, {0}}},
        {{1, {2}}, {28, {0}}},
        {{8, {0}}, {8, {2}}, {56, {0}}},
    };
    for (std::int64_t l = 0; l <= 3; ++l) {
        std::vector<Row> got;
        for (const auto& row : enumerate_mu2(l)) {
            if (row.count == 0) continue;
            std::vector<std::int64_t> dims;
            for (const auto& [d, c] : row.dims) dims.push_back(d);
            got.emplace_back(row.count, dims);
        }
        v.require(got == expected[static_cast<std::size_t>(l)], "table for l = " + std::to_string(l) + " differs");
    }
    if (v.ok) v.detail = "counts (1), (8), (1,28), (8,8,56); dims (0), (0), (2,0), (0,2,0)";
    return v;
}

// The Nikulin model has eight identical sector entries, so the pairing is
// symmetric in m_1..m_8. Every class with |m_i| <= 3 is a permutation of a
// non-increasing m, and those representatives are evaluated with the library
// pairing; a random sample of unsorted classes is evaluated as well.
Verdict dimension_cross_check()
{
    Verdict v;
    const K3GModel model = nikulin_model();
    for (const auto& e : model.sectors()) v.require(e == model.sectors().front(), "sectors are not identical");

    std::uint64_t representatives = 0, covered = 0;
    auto check = [&](const HilbClassMu2& c) {
        const auto omv = omv_of_class_mu2(c);
        const Rational d = Rational(2) - orbifold_mukai_pairing(model, omv, omv);
        std::int64_t squares = 0;
        for (auto mi : c.m) squares += mi * mi;
        v.require(d == 2 * (c.n - squares) && d.is_integer() && d.to_int64() % 2 == 0,
                  "class n = " + std::to_string(c.n) + " gives " + d.to_string());
    };
    // number of distinct permutations of a sorted vector
    auto orbit_size = [](const std::array<std::int64_t, 8>& m) {
        std::uint64_t size = 40320;
        for (std::size_t i = 0; i < 8;) {
            std::size_t j = i;
            std::uint64_t fact = 1;
            while (j < 8 && m[j] == m[i]) fact *= ++j - i;
            size /= fact;
            i = j;
        }
        return size;
    };
    for (std::int64_t n = 0; n <= 10; ++n) {
        std::array<std::int64_t, 8> m{};
        std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t hi) {
            if (i == 8) {
                check(HilbClassMu2{n, m});
                ++representatives;
                covered += orbit_size(m);
                return;
            }
            for (std::int64_t x = hi; x >= -3; --x) {
                m[i] = x;
                rec(i + 1, x);
            }
        };
        rec(0, 3);
    }
    v.require(covered == 11ULL * 5764801ULL, "representatives cover " + std::to_string(covered) + " classes");

    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::int64_t> entry(-3, 3), level(0, 10);
    for (int t = 0; t < 20000; ++t) {
        HilbClassMu2 c{level(rng), {}};
        for (auto& mi : c.m) mi = entry(rng);
        check(c);
    }
    if (v.ok) {
        v.detail = std::to_string(representatives) + " sorted representatives covering " + std::to_string(covered) +
                   " classes, plus 20000 random classes";
    }
    return v;
}

Verdict parseval_property()
{
    Verdict v;
    const std::uint64_t seed = 1;
    std::mt19937_64 rng(seed);
    for (std::uint32_t n = 2; n <= 12; ++n) {
        for (int t = 0; t < 100; ++t) {
            const auto f = random_group_ring_element(n, rng), g = random_group_ring_element(n, rng);
            v.require(parseval_check(f, g), "failure at n = " + std::to_string(n) + ", trial " + std::to_string(t));
        }
    }
    if (v.ok) v.detail = "100 random pairs for each n = 2..12, seed " + std::to_string(seed);
    return v;
}

Verdict weighted_projective()
{
    Verdict v;
    for (const auto& w : std::vector<std::vector<std::uint32_t>>{{2, 3}, {1, 1, 2}, {2, 2}}) {
        v.require(wps_relation(w).residue.is_zero(), "relation nonzero for some weights");
    }
    for (std::uint32_t n = 1; n <= 6; ++n) {
        const auto e = wps_euler_class_tangent(std::vector<std::uint32_t>(n + 1, 1));
        const QuotientRing ring = e.residue.ring();
        QuotientRingElement closed = ring.one();
        for (std::uint32_t i = 0; i < n; ++i) closed *= ring.one() - ring.x_inverse();
        closed *= Rational(static_cast<long long>(n + 1));
        v.require(e.residue == closed, "Euler class of P^" + std::to_string(n) + " differs");
    }
    if (v.ok) v.detail = "relations vanish for (2,3), (1,1,2), (2,2); e(TP^n) = (n+1)(1 - x^-1)^n for n <= 6";
    return v;
}

Verdict character_oracle()
{
    Verdict v;
    auto share = [](FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); };
    std::vector<GroupPtr> groups;
    for (std::size_t n = 1; n <= 12; ++n) groups.push_back(share(cyclic_group(n)));
    groups.push_back(share(direct_product(cyclic_group(2), cyclic_group(2))));
    groups.push_back(share(direct_product(cyclic_group(2), cyclic_group(4))));
    groups.push_back(share(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2))));
    groups.push_back(share(direct_product(cyclic_group(3), cyclic_group(3))));
    groups.push_back(share(direct_product(cyclic_group(2), cyclic_group(6))));

    std::vector<std::vector<Character>> tables;
    for (const auto& g : groups) tables.push_back(abelian_character_table(g));
    tables.push_back(json_io::character_table_from_json(json_io::Json::parse(R"({
        "group": {"type": "symmetric", "degree": 3},
        "characters": [[1, 1, 1], [1, -1, 1], [2, 0, -1]]})")));

    std::size_t pairs = 0;
    for (const auto& table : tables) {
        for (std::size_t i = 0; i < table.size(); ++i) {
            for (std::size_t j = 0; j < table.size(); ++j) {
                const Rational weighted = char_inner_product(table[i], table[j]);
                v.require(weighted == char_inner_product_direct(table[i], table[j]), "pairing forms disagree");
                v.require(weighted == Rational(i == j ? 1 : 0), "irreducibles are not orthonormal");
                ++pairs;
            }
        }
    }
    if (v.ok) v.detail = std::to_string(tables.size()) + " groups, " + std::to_string(pairs) + " character pairs";
    return v;
}

Verdict hilbert_polynomials()
{
    Verdict v;
    const auto fermat = rank_one_lattice(16);
    for (std::int64_t n = 0; n <= 20; ++n) {
        const auto p = hilbert_polynomial(fermat, {1, {}, 1 - n});
        v.require(p.poly() == UniPoly({Rational(2 - n), 0, 8}), "n = " + std::to_string(n) + ": " + p.to_string());
    }
    const auto elliptic = elliptic_k3_lattice();
    const auto p = hilbert_polynomial(elliptic, {0, elliptic.ample(), 0});
    v.require(p.poly() == UniPoly({0, 4}), "elliptic: " + p.to_string());
    if (v.ok) v.detail = "(h^2)=16: 8z^2 + 2 - n for n = 0..20; elliptic v = (0,h,0): " + p.to_string();
    return v;
}

Verdict hypothesis_predicates()
{
    Verdict v;
    for (const auto& lattice : {rank_one_lattice(16), elliptic_k3_lattice()}) {
        const auto tx = check_hypotheses(lattice, {2, {}, -22}, true);
        v.require(!tx.primitive, "TX reported primitive");
        v.require(!tx.hilbert_deformation_type, "TX passes the deformation-type check");
        for (std::int64_t n = 0; n <= 20; ++n) {
            v.require(check_hypotheses(lattice, {1, {}, 1 - n}, true).hilbert_deformation_type,
                      "(1,0,1-n) fails at n = " + std::to_string(n));
        }
    }
    if (v.ok) v.detail = "(2,0,-22) not primitive; (1,0,1-n) passes with generic polarization, n = 0..20";
    return v;
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"fixed-point counts", fixed_point_counts},
        {"unit identity", unit_identity},
        {"trigonometric identity", trig_identity},
        {"worked dimensions", worked_dimensions},
        {"Hilbert enumeration", hilbert_tables},
        {"dimension cross-check", dimension_cross_check},
        {"Parseval", parseval_property},
        {"weighted projective identities", weighted_projective},
        {"character-theory oracle", character_oracle},
        {"Hilbert polynomial", hilbert_polynomials},
        {"hypothesis predicates", hypothesis_predicates},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += v.ok ? 0 : 1;
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << secs;
        std::cout << (v.ok ? "PASS" : "FAIL") << "  [" << (i + 1) << "] " << criteria[i].first << ": " << v.detail
                  << " (" << time.str() << "s)" << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
