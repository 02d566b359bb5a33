#include "orbhrr/group.hpp"

#include "orbhrr/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace orbhrr {

FiniteGroup::FiniteGroup(std::vector<std::vector<ElementIndex>> cayley, std::vector<std::string> labels)
    : cayley_(std::move(cayley)), labels_(std::move(labels))
{
    const std::size_t n = cayley_.size();
    if (n == 0) {
        throw GroupError("group must have at least one element");
    }
    for (const auto& row : cayley_) {
        if (row.size() != n) {
            throw GroupError("Cayley table must be square");
        }
        for (ElementIndex x : row) {
            if (x >= n) {
                throw GroupError("Cayley table entry out of range");
            }
        }
    }
    if (labels_.empty()) {
        for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    }
    if (labels_.size() != n) {
        throw GroupError("label count does not match group order");
    }

    bool found_identity = false;
    for (ElementIndex e = 0; e < n && !found_identity; ++e) {
        bool is_identity = true;
        for (ElementIndex a = 0; a < n && is_identity; ++a) {
            is_identity = cayley_[e][a] == a && cayley_[a][e] == a;
        }
        if (is_identity) {
            identity_ = e;
            found_identity = true;
        }
    }
    if (!found_identity) {
        throw GroupError("Cayley table has no identity element");
    }

    for (ElementIndex a = 0; a < n; ++a)
        for (ElementIndex b = 0; b < n; ++b)
            for (ElementIndex c = 0; c < n; ++c)
                if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]]) {
                    throw GroupError("Cayley table is not associative");
                }

    inverse_.resize(n);
    for (ElementIndex a = 0; a < n; ++a) {
        std::size_t count = 0;
        for (ElementIndex b = 0; b < n; ++b) {
            if (cayley_[a][b] == identity_) {
                if (cayley_[b][a] != identity_) {
                    throw GroupError("element has a one-sided inverse only");
                }
                inverse_[a] = b;
                ++count;
            }
        }
        if (count != 1) {
            throw GroupError("element " + labels_[a] + " lacks a unique inverse");
        }
    }

    element_order_.resize(n);
    for (ElementIndex a = 0; a < n; ++a) {
        std::size_t k = 1;
        for (ElementIndex x = a; x != identity_; x = cayley_[x][a]) ++k;
        element_order_[a] = k;
        exponent_ = std::lcm(exponent_, k);
    }
    for (ElementIndex a = 0; a < n && abelian_; ++a)
        for (ElementIndex b = 0; b < n && abelian_; ++b) abelian_ = cayley_[a][b] == cayley_[b][a];

    // Conjugacy classes by brute-force conjugation. Seeds are the identity and
    // then unassigned elements in increasing index order.
    class_of_.assign(n, n);
    auto build_class = [&](ElementIndex seed) {
        ConjugacyClassInfo info{seed, {}, 0};
        for (ElementIndex g = 0; g < n; ++g) {
            info.members.push_back(cayley_[cayley_[g][seed]][inverse_[g]]);
        }
        std::sort(info.members.begin(), info.members.end());
        info.members.erase(std::unique(info.members.begin(), info.members.end()), info.members.end());
        for (ElementIndex g = 0; g < n; ++g) {
            if (cayley_[g][seed] == cayley_[seed][g]) ++info.centralizer_order;
        }
        for (ElementIndex m : info.members) class_of_[m] = classes_.size();
        classes_.push_back(std::move(info));
    };
    build_class(identity_);
    for (ElementIndex a = 0; a < n; ++a) {
        if (class_of_[a] == n) build_class(a);
    }
}

ElementIndex FiniteGroup::power(ElementIndex a, std::int64_t e) const
{
    const auto ord = static_cast<std::int64_t>(element_order_[a]);
    std::int64_t k = ((e % ord) + ord) % ord;
    ElementIndex x = identity_;
    while (k-- > 0) x = cayley_[x][a];
    return x;
}

FiniteGroup cyclic_group(std::size_t n)
{
    if (n == 0) {
        throw GroupError("cyclic group order must be positive");
    }
    std::vector<std::vector<ElementIndex>> table(n, std::vector<ElementIndex>(n));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
        labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    }
    return FiniteGroup(std::move(table), std::move(labels));
}

FiniteGroup symmetric_group(std::size_t k)
{
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<std::vector<std::size_t>, ElementIndex> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        index[perms[i]] = i;
        std::string label = "[";
        for (std::size_t j = 0; j < k; ++j) label += (j ? "," : "") + std::to_string(perms[i][j]);
        labels.push_back(label + "]");
    }
    // (p*q)(x) = p(q(x))
    std::vector<std::vector<ElementIndex>> table(perms.size(), std::vector<ElementIndex>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a) {
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<std::size_t> c(k);
            for (std::size_t x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
            table[a][b] = index.at(c);
        }
    }
    return FiniteGroup(std::move(table), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h)
{
    const std::size_t n = g.order() * h.order();
    std::vector<std::vector<ElementIndex>> table(n, std::vector<ElementIndex>(n));
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t ag = a / h.order(), ah = a % h.order();
        labels[a] = "(" + g.labels()[ag] + "," + h.labels()[ah] + ")";
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t bg = b / h.order(), bh = b % h.order();
            table[a][b] = g.multiply(ag, bg) * h.order() + h.multiply(ah, bh);
        }
    }
    return FiniteGroup(std::move(table), std::move(labels));
}

std::vector<ConjugacyClassInfo> conjugacy_data(const FiniteGroup& group) { return group.classes(); }

// ---- Character ----

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && *a == *b); }

Character::Character(GroupPtr group, std::vector<CyclotomicNumber> values)
    : group_(std::move(group)), values_(std::move(values))
{
    if (!group_) {
        throw GroupError("character needs a group");
    }
    if (values_.size() != group_->class_count()) {
        throw GroupError("character has " + std::to_string(values_.size()) + " values but the group has " +
                         std::to_string(group_->class_count()) + " classes");
    }
    const std::uint32_t L = common_field_order(values_);
    for (auto& v : values_) v = v.embed(L);
}

Character Character::dual() const
{
    std::vector<CyclotomicNumber> v(values_.size());
    for (std::size_t c = 0; c < values_.size(); ++c) v[c] = values_[group_->inverse_class(c)];
    return Character(group_, std::move(v));
}

Character Character::embed(std::uint32_t field_order) const
{
    std::vector<CyclotomicNumber> v;
    v.reserve(values_.size());
    for (const auto& x : values_) v.push_back(x.embed(field_order));
    return Character(group_, std::move(v));
}

void Character::check_same_group(const Character& o) const
{
    if (!same_group(group_, o.group_)) {
        throw GroupError("characters belong to different groups");
    }
}

void Character::align(Character& o)
{
    check_same_group(o);
    const auto L = static_cast<std::uint32_t>(lcm(std::int64_t{field_order()}, std::int64_t{o.field_order()}));
    if (L != field_order()) *this = embed(L);
    if (L != o.field_order()) o = o.embed(L);
}

Character& Character::operator+=(const Character& o)
{
    Character other = o;
    align(other);
    for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += other.values_[c];
    return *this;
}

Character& Character::operator*=(const Character& o)
{
    Character other = o;
    align(other);
    for (std::size_t c = 0; c < values_.size(); ++c) values_[c] *= other.values_[c];
    return *this;
}

Character& Character::operator*=(const Rational& c)
{
    for (auto& v : values_) v *= c;
    return *this;
}

bool operator==(const Character& a, const Character& b)
{
    if (!same_group(a.group_, b.group_)) return false;
    Character x = a, y = b;
    x.align(y);
    return x.values_ == y.values_;
}

Character trivial_character(GroupPtr group)
{
    const std::size_t k = group->class_count();
    return Character(std::move(group), std::vector<CyclotomicNumber>(k, CyclotomicNumber(1, Rational(1))));
}

Character regular_character(GroupPtr group)
{
    std::vector<CyclotomicNumber> v(group->class_count(), CyclotomicNumber(1, Rational(0)));
    v[0] = CyclotomicNumber(1, Rational(static_cast<long long>(group->order())));
    return Character(std::move(group), std::move(v));
}

std::vector<Character> abelian_character_table(const GroupPtr& group)
{
    if (!group->is_abelian()) {
        throw UnsupportedError("character tables are only computed for abelian groups; supply one externally");
    }
    const FiniteGroup& G = *group;
    const std::size_t n = G.order();
    const auto e = static_cast<std::int64_t>(G.exponent());

    // Homomorphisms G -> Z/e, grown one generator at a time. `members` lists the
    // current subgroup H; each hom is stored as a full table over G (valid on H).
    std::vector<ElementIndex> members{G.identity()};
    std::vector<bool> in_subgroup(n, false);
    in_subgroup[G.identity()] = true;
    std::vector<std::vector<std::int64_t>> homs{std::vector<std::int64_t>(n, 0)};

    for (ElementIndex g = 0; g < n; ++g) {
        if (in_subgroup[g]) continue;
        // t = index of H in <H, g>: least t with g^t in H.
        std::int64_t t = 1;
        ElementIndex gt = g;
        while (!in_subgroup[gt]) {
            gt = G.multiply(gt, g);
            ++t;
        }
        std::vector<std::vector<std::int64_t>> extended;
        for (const auto& hom : homs) {
            const std::int64_t target = hom[gt];  // need t*c == target (mod e)
            for (std::int64_t c = 0; c < e; ++c) {
                if ((t * c - target) % e != 0) continue;
                std::vector<std::int64_t> next = hom;
                ElementIndex gj = G.identity();
                for (std::int64_t j = 0; j < t; ++j) {
                    for (ElementIndex h : members) {
                        next[G.multiply(h, gj)] = ((hom[h] + j * c) % e + e) % e;
                    }
                    gj = G.multiply(gj, g);
                }
                extended.push_back(std::move(next));
            }
        }
        homs = std::move(extended);
        std::vector<ElementIndex> grown;
        ElementIndex gj = G.identity();
        for (std::int64_t j = 0; j < t; ++j) {
            for (ElementIndex h : members) grown.push_back(G.multiply(h, gj));
            gj = G.multiply(gj, g);
        }
        members = std::move(grown);
        for (ElementIndex m : members) in_subgroup[m] = true;
    }

    std::vector<Character> table;
    table.reserve(homs.size());
    const auto L = static_cast<std::uint32_t>(e);
    for (const auto& hom : homs) {
        std::vector<CyclotomicNumber> values;
        for (const auto& cls : G.classes()) {
            values.push_back(cyclo_root_of_unity(L, hom[cls.representative], L));
        }
        table.emplace_back(group, std::move(values));
    }
    return table;
}

namespace {

CyclotomicNumber aligned_product(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    const auto L = static_cast<std::uint32_t>(lcm(std::int64_t{a.field_order()}, std::int64_t{b.field_order()}));
    return a.embed(L) * b.embed(L);
}

void require_same_group(const Character& chi, const Character& psi)
{
    if (!same_group(chi.group(), psi.group())) {
        throw GroupError("inner product of characters on different groups");
    }
}

}  // namespace

Rational char_inner_product(const Character& chi, const Character& psi)
{
    require_same_group(chi, psi);
    const FiniteGroup& G = *chi.group();
    const auto L = static_cast<std::uint32_t>(lcm(std::int64_t{chi.field_order()}, std::int64_t{psi.field_order()}));
    CyclotomicNumber total(L, Rational(0));
    for (std::size_t c = 0; c < G.class_count(); ++c) {
        const auto term = aligned_product(chi.at_class(G.inverse_class(c)), psi.at_class(c));
        total += term.embed(L) * Rational(1, static_cast<long long>(G.classes()[c].centralizer_order));
    }
    return total.to_rational();
}

Rational char_inner_product_direct(const Character& chi, const Character& psi)
{
    require_same_group(chi, psi);
    const FiniteGroup& G = *chi.group();
    const auto L = static_cast<std::uint32_t>(lcm(std::int64_t{chi.field_order()}, std::int64_t{psi.field_order()}));
    CyclotomicNumber total(L, Rational(0));
    for (ElementIndex g = 0; g < G.order(); ++g) {
        total += aligned_product(chi.at(G.inverse(g)), psi.at(g)).embed(L);
    }
    return total.to_rational() / Rational(static_cast<long long>(G.order()));
}

Rational invariant_dimension(const Character& chi)
{
    const FiniteGroup& G = *chi.group();
    CyclotomicNumber total(chi.field_order(), Rational(0));
    for (ElementIndex g = 0; g < G.order(); ++g) total += chi.at(g);
    const Rational dim = total.to_rational() / Rational(static_cast<long long>(G.order()));
    if (!dim.is_integer() || dim.sign() < 0) {
        throw GroupError("invariant dimension " + dim.to_string() + " is not a non-negative integer; invalid character");
    }
    return dim;
}

void validate_character_table(const std::vector<Character>& table)
{
    if (table.empty()) {
        throw GroupError("empty character table");
    }
    const GroupPtr& group = table.front().group();
    if (table.size() != group->class_count()) {
        throw GroupError("character table needs one row per conjugacy class");
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = 0; j < table.size(); ++j) {
            const Rational expected = i == j ? 1 : 0;
            if (char_inner_product(table[i], table[j]) != expected) {
                throw GroupError("character table rows " + std::to_string(i) + " and " + std::to_string(j) +
                                 " are not orthonormal");
            }
        }
    }
}

}  // namespace orbhrr
