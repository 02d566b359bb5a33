#pragma once

#include "orbhrr/cyclotomic.hpp"
#include "orbhrr/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace orbhrr {

using ElementIndex = std::size_t;

struct ConjugacyClassInfo {
    ElementIndex representative;
    std::vector<ElementIndex> members;  // ascending
    std::size_t centralizer_order;

    std::size_t size() const { return members.size(); }
};

/// Finite group given by its Cayley table. Construction validates closure,
/// associativity, identity and inverses, then derives the conjugacy classes.
///
/// Classes are ordered identity class first, then by smallest member index.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<ElementIndex>> cayley, std::vector<std::string> labels = {});

    std::size_t order() const { return cayley_.size(); }
    ElementIndex identity() const { return identity_; }
    ElementIndex multiply(ElementIndex a, ElementIndex b) const { return cayley_[a][b]; }
    ElementIndex inverse(ElementIndex a) const { return inverse_[a]; }
    ElementIndex power(ElementIndex a, std::int64_t e) const;
    std::size_t element_order(ElementIndex a) const { return element_order_[a]; }
    /// lcm of all element orders.
    std::size_t exponent() const { return exponent_; }
    bool is_abelian() const { return abelian_; }

    const std::vector<std::vector<ElementIndex>>& cayley() const { return cayley_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const std::vector<ConjugacyClassInfo>& classes() const { return classes_; }
    std::size_t class_count() const { return classes_.size(); }
    std::size_t class_of(ElementIndex a) const { return class_of_[a]; }
    /// Index of the class containing the inverses of class `c`.
    std::size_t inverse_class(std::size_t c) const { return class_of(inverse(classes_[c].representative)); }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b)
    {
        return a.cayley_ == b.cayley_ && a.labels_ == b.labels_;
    }

private:
    std::vector<std::vector<ElementIndex>> cayley_;
    std::vector<std::string> labels_;
    ElementIndex identity_ = 0;
    std::vector<ElementIndex> inverse_;
    std::vector<std::size_t> element_order_;
    std::size_t exponent_ = 1;
    bool abelian_ = true;
    std::vector<ConjugacyClassInfo> classes_;
    std::vector<std::size_t> class_of_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Z/nZ with element i = g^i, labelled "1", "g", "g^2", ...
FiniteGroup cyclic_group(std::size_t n);

/// Symmetric group on k letters; elements are permutations in lexicographic
/// order of their one-line notation (identity first).
FiniteGroup symmetric_group(std::size_t k);

/// G x H with element (g, h) at index g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Same as FiniteGroup::classes(); kept as a free function for symmetry with the other operations.
std::vector<ConjugacyClassInfo> conjugacy_data(const FiniteGroup& group);

/// Class function on a finite group with exact cyclotomic values, one per conjugacy class.
/// All values share one ambient cyclotomic field.
class Character {
public:
    Character(GroupPtr group, std::vector<CyclotomicNumber> values);

    const GroupPtr& group() const { return group_; }
    const std::vector<CyclotomicNumber>& values() const { return values_; }
    const CyclotomicNumber& at_class(std::size_t c) const { return values_.at(c); }
    const CyclotomicNumber& at(ElementIndex g) const { return values_.at(group_->class_of(g)); }
    std::uint32_t field_order() const { return values_.front().field_order(); }
    /// Value at the identity.
    Rational degree() const { return values_.front().to_rational(); }

    /// chi(g^{-1}); equals the complex conjugate for genuine characters.
    Character dual() const;
    Character embed(std::uint32_t field_order) const;

    Character& operator+=(const Character& o);
    Character& operator*=(const Character& o);
    Character& operator*=(const Rational& c);
    friend Character operator+(Character a, const Character& b) { return a += b; }
    friend Character operator*(Character a, const Character& b) { return a *= b; }
    friend Character operator*(Character a, const Rational& c) { return a *= c; }
    friend bool operator==(const Character& a, const Character& b);

private:
    void align(Character& o);
    void check_same_group(const Character& o) const;

    GroupPtr group_;
    std::vector<CyclotomicNumber> values_;
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

Character trivial_character(GroupPtr group);
/// |G| at the identity, 0 elsewhere.
Character regular_character(GroupPtr group);

/// Irreducible characters of an abelian group, |G| of them, in a deterministic
/// order. For cyclic_group(n): chi_k(g^j) = zeta_n^{jk}, k = 0..n-1.
/// Throws UnsupportedError for nonabelian groups.
std::vector<Character> abelian_character_table(const GroupPtr& group);

/// Centralizer-weighted form: sum over classes of chi(g_i^{-1}) psi(g_i) / |Z_{g_i}|.
Rational char_inner_product(const Character& chi, const Character& psi);

/// Group-average form: (1/|G|) sum over g of chi(g^{-1}) psi(g).
Rational char_inner_product_direct(const Character& chi, const Character& psi);

/// (1/|G|) sum over g of chi(g): dimension of the invariant subspace.
/// Throws GroupError unless the value is a non-negative integer.
Rational invariant_dimension(const Character& chi);

/// Checks an externally supplied table (e.g. for a nonabelian group):
/// as many rows as classes and orthonormal rows. Throws GroupError otherwise.
void validate_character_table(const std::vector<Character>& table);

}  // namespace orbhrr
