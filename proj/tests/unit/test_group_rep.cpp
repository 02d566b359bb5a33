#include "doctest.h"

#include "orbhrr/errors.hpp"
#include "orbhrr/group.hpp"

#include <algorithm>
#include <set>

using namespace orbhrr;

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// Every abelian group of order <= 12, up to isomorphism.
std::vector<GroupPtr> small_abelian_groups()
{
    std::vector<GroupPtr> groups;
    for (std::size_t n = 1; n <= 12; ++n) groups.push_back(share(cyclic_group(n)));
    groups.push_back(share(direct_product(cyclic_group(2), cyclic_group(2))));
    groups.push_back(share(direct_product(cyclic_group(2), cyclic_group(4))));
    groups.push_back(share(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2))));
    groups.push_back(share(direct_product(cyclic_group(3), cyclic_group(3))));
    groups.push_back(share(direct_product(cyclic_group(2), cyclic_group(6))));
    return groups;
}

std::vector<Character> s3_table(const GroupPtr& s3)
{
    auto row = [&](std::initializer_list<int> v) {
        std::vector<CyclotomicNumber> vals;
        for (int x : v) vals.emplace_back(1, Rational(x));
        return Character(s3, vals);
    };
    // classes: identity, transpositions, 3-cycles
    return {row({1, 1, 1}), row({1, -1, 1}), row({2, 0, -1})};
}

}  // namespace

TEST_CASE("Cayley table validation")
{
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), GroupError);  // no inverse for 1
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0}}), GroupError);
    CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 0}}), GroupError);
    CHECK_THROWS_AS(FiniteGroup({{0, 2}, {1, 0}}), GroupError);
    // x*y = 0 for all x,y is associative but has no identity
    CHECK_THROWS_AS(FiniteGroup({{0, 0}, {0, 0}}), GroupError);
}

TEST_CASE("cyclic groups")
{
    CHECK(cyclic_group(1).class_count() == 1);
    const auto z2 = cyclic_group(2);
    REQUIRE(z2.class_count() == 2);
    CHECK(z2.classes()[0].centralizer_order == 2);
    CHECK(z2.classes()[1].centralizer_order == 2);
    const auto z6 = cyclic_group(6);
    CHECK(z6.class_count() == 6);
    for (const auto& c : z6.classes()) CHECK(c.size() == 1);
    CHECK(z6.element_order(2) == 3);
    CHECK(z6.exponent() == 6);
    CHECK(z6.labels()[2] == "g^2");
    for (const auto& c : conjugacy_data(cyclic_group(4))) CHECK(c.centralizer_order == 4);
}

TEST_CASE("S3 conjugacy classes against brute-force conjugation")
{
    const auto s3 = symmetric_group(3);
    REQUIRE(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());

    // Oracle: conjugate permutations directly.
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(3);
        for (int x = 0; x < 3; ++x) c[x] = a[b[x]];
        return c;
    };
    auto invert = [](const std::vector<int>& a) {
        std::vector<int> c(3);
        for (int x = 0; x < 3; ++x) c[a[x]] = x;
        return c;
    };
    std::set<std::set<std::vector<int>>> oracle_classes;
    for (const auto& x : perms) {
        std::set<std::vector<int>> cls;
        for (const auto& g : perms) cls.insert(compose(compose(g, x), invert(g)));
        oracle_classes.insert(cls);
    }
    std::multiset<std::size_t> oracle_sizes;
    for (const auto& c : oracle_classes) oracle_sizes.insert(c.size());

    const auto& classes = s3.classes();
    REQUIRE(classes.size() == 3);
    std::multiset<std::size_t> sizes;
    for (const auto& c : classes) sizes.insert(c.size());
    CHECK(sizes == oracle_sizes);
    CHECK(classes[0].size() == 1);
    CHECK(classes[1].size() == 3);
    CHECK(classes[2].size() == 2);
    CHECK(classes[0].centralizer_order == 6);
    CHECK(classes[1].centralizer_order == 2);
    CHECK(classes[2].centralizer_order == 3);
}

TEST_CASE("class equation")
{
    auto groups = small_abelian_groups();
    groups.push_back(share(symmetric_group(3)));
    groups.push_back(share(symmetric_group(4)));
    for (const auto& g : groups) {
        std::size_t total = 0;
        for (const auto& c : g->classes()) {
            total += c.size();
            CHECK(g->order() % c.size() == 0);
            CHECK(c.size() * c.centralizer_order == g->order());
        }
        CHECK(total == g->order());
        CHECK(g->classes()[0].representative == g->identity());
    }
}

TEST_CASE("abelian character tables")
{
    const auto mu2 = share(cyclic_group(2));
    const auto t2 = abelian_character_table(mu2);
    REQUIRE(t2.size() == 2);
    CHECK(t2[0].at_class(1).to_rational() == 1);
    CHECK(t2[1].at_class(1).to_rational() == -1);

    const auto mu3 = share(cyclic_group(3));
    const auto t3 = abelian_character_table(mu3);
    for (std::int64_t k = 0; k < 3; ++k) {
        for (std::int64_t j = 0; j < 3; ++j) {
            CHECK(t3[k].at(j) == cyclo_root_of_unity(3, j * k, 3));
        }
    }

    CHECK_THROWS_AS(abelian_character_table(share(symmetric_group(3))), UnsupportedError);
}

TEST_CASE("both inner product forms agree and give delta on irreducibles")
{
    for (const auto& g : small_abelian_groups()) {
        const auto table = abelian_character_table(g);
        REQUIRE(table.size() == g->order());
        for (std::size_t i = 0; i < table.size(); ++i) {
            for (std::size_t j = 0; j < table.size(); ++j) {
                const Rational weighted = char_inner_product(table[i], table[j]);
                CHECK(weighted == char_inner_product_direct(table[i], table[j]));
                CHECK(weighted == Rational(i == j ? 1 : 0));
            }
        }
    }
    const auto s3 = share(symmetric_group(3));
    const auto table = s3_table(s3);
    CHECK_NOTHROW(validate_character_table(table));
    for (const auto& a : table)
        for (const auto& b : table) CHECK(char_inner_product(a, b) == char_inner_product_direct(a, b));
}

TEST_CASE("external table validation rejects bad rows")
{
    const auto s3 = share(symmetric_group(3));
    auto table = s3_table(s3);
    table[2] = table[2] + table[0];
    CHECK_THROWS_AS(validate_character_table(table), GroupError);
    table.pop_back();
    CHECK_THROWS_AS(validate_character_table(table), GroupError);
}

TEST_CASE("inner products of special characters")
{
    const auto mu2 = share(cyclic_group(2));
    CHECK(char_inner_product(trivial_character(mu2), trivial_character(mu2)) == 1);
    CHECK(char_inner_product(regular_character(mu2), regular_character(mu2)) == 2);
    CHECK_THROWS_AS(char_inner_product(trivial_character(mu2), trivial_character(share(cyclic_group(3)))),
                    GroupError);
}

TEST_CASE("character operations")
{
    const auto mu3 = share(cyclic_group(3));
    const auto t3 = abelian_character_table(mu3);
    CHECK(t3[1].dual() == t3[2]);
    CHECK(t3[1] * trivial_character(mu3) == t3[1]);

    const auto mu4 = share(cyclic_group(4));
    const auto t4 = abelian_character_table(mu4);
    Character sum = t4[0];
    for (std::size_t k = 1; k < 4; ++k) sum += t4[k] * t4[k].degree();
    CHECK(sum == regular_character(mu4));

    // dual is an involution and a ring homomorphism
    for (const auto& g : small_abelian_groups()) {
        const auto t = abelian_character_table(g);
        for (std::size_t i = 0; i < t.size(); ++i) {
            const auto& a = t[i];
            const auto& b = t[(i * 5 + 1) % t.size()];
            CHECK(a.dual().dual() == a);
            CHECK((a * b).dual() == a.dual() * b.dual());
            CHECK((a + b).dual() == a.dual() + b.dual());
            for (std::size_t c = 0; c < g->class_count(); ++c) {
                CHECK(a.dual().at_class(c) == a.at_class(c).conjugate());
            }
        }
    }
}

TEST_CASE("invariant dimension")
{
    const auto mu5 = share(cyclic_group(5));
    CHECK(invariant_dimension(trivial_character(mu5)) == 1);
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(invariant_dimension(regular_character(share(cyclic_group(n)))) == 1);
    }
    const auto mu2 = share(cyclic_group(2));
    CHECK(invariant_dimension(abelian_character_table(mu2)[1]) == 0);

    for (const auto& g : small_abelian_groups()) {
        for (const auto& chi : abelian_character_table(g)) {
            CHECK(invariant_dimension(chi) == char_inner_product(trivial_character(g), chi));
        }
    }

    std::vector<CyclotomicNumber> bogus{CyclotomicNumber(1, Rational(1)), CyclotomicNumber(1, Rational(0))};
    CHECK_THROWS_AS(invariant_dimension(Character(mu2, bogus)), GroupError);
}
