#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gdm {

// Element of a finite Abelian group written as a product of cyclic factors;
// residues[k] lies in [0, factors[k]).
struct Element {
    std::vector<std::int64_t> residues;

    auto operator<=>(const Element&) const = default;
    bool operator==(const Element&) const = default;
};

// "(1,0,2)" for rank >= 2, "6" for rank 1, "()" for the trivial group.
std::string to_string(const Element& e);

// A finite Abelian group as an ordered product Z_{n_1} x ... x Z_{n_t}.
// The factor list given at construction is kept verbatim and element
// arithmetic is componentwise over it; canonical_factors() is the primary
// decomposition (prime ascending, exponent descending) used for isomorphism
// tests and for factor selection in the labeling constructions.
class GroupSpec {
  public:
    GroupSpec() = default;  // trivial group, order 1
    explicit GroupSpec(std::vector<std::int64_t> factors);

    // Factors joined by 'x' ("4x2x5") or a bare integer ("40", cyclic).
    // "1" denotes the trivial group. No whitespace.
    static GroupSpec parse(std::string_view text);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::int64_t order() const { return order_; }
    std::string str() const;

    const std::vector<std::int64_t>& canonical_factors() const { return canonical_; }
    GroupSpec canonical() const { return GroupSpec(canonical_); }
    bool isomorphic_to(const GroupSpec& other) const { return canonical_ == other.canonical_; }

    Element zero() const;
    bool contains(const Element& x) const;
    Element add(const Element& x, const Element& y) const;
    Element neg(const Element& x) const;

    // Lexicographic enumeration over the declared factors; element(0) is zero.
    Element element(std::int64_t index) const;
    std::int64_t index_of(const Element& x) const;
    std::vector<Element> elements() const;

    // All x != 0 with 2x = 0, in lexicographic order.
    std::vector<Element> involutions() const;

    // Sum of all group elements: the unique involution when there is exactly
    // one, zero otherwise.
    Element sum_all() const;

    bool operator==(const GroupSpec& other) const { return factors_ == other.factors_; }

  private:
    std::vector<std::int64_t> factors_;
    std::vector<std::int64_t> canonical_;
    std::int64_t order_ = 1;
};

// One representative per isomorphism class of Abelian groups of the given
// order (partitions of each prime's exponent), each in canonical form, in a
// fixed deterministic order.
std::vector<GroupSpec> enumerate_groups(std::int64_t order);

// Position (in the canonical form) of a primary factor of order exactly
// 2^alpha together with the complementary group, or nullopt if absent.
std::optional<std::pair<int, GroupSpec>> split_cyclic_two_factor(const GroupSpec& g, int alpha);

// True iff the canonical form contains at least two factors of order 2,
// i.e. the group is Z2 x Z2 x A for some A.
bool has_z2_z2_summand(const GroupSpec& g);

}  // namespace gdm
