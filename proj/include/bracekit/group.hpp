#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "bracekit/error.hpp"
#include "bracekit/rational.hpp"

namespace bracekit {

using Element = std::uint32_t;
inline constexpr Element kNoElement = std::numeric_limits<Element>::max();

/// Sorted, duplicate-free subset of 0..ambient-1.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(Element ambient, std::vector<Element> members);

  static ElementSet full(Element n);
  static ElementSet identity_only(Element n);
  static ElementSet from_mask(const std::vector<char>& mask);

  Element ambient() const { return ambient_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Element x) const;
  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  std::vector<char> mask() const;

  const std::vector<Element>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  Element ambient_ = 0;
  std::vector<Element> members_;
};

/// A permutation of 0..n-1 stored as its image list.
struct Bijection {
  std::vector<Element> map;

  static Bijection identity(Element n);

  Element size() const { return static_cast<Element>(map.size()); }
  Element operator()(Element x) const { return map[x]; }
  bool is_permutation() const;
  Bijection inverse() const;
  /// this ∘ first, i.e. x ↦ this(first(x)).
  Bijection after(const Bijection& first) const;

  friend bool operator==(const Bijection&, const Bijection&) = default;
  friend auto operator<=>(const Bijection&, const Bijection&) = default;
};

struct Holomorph;

// A finite group given by its Cayley table; the identity is always element 0.
class GroupTable {
 public:
  using Rows = std::vector<std::vector<Element>>;

  /// The one-element group.
  GroupTable() : n_(1), op_{0}, inv_{0} {}

  /// Validates the table: square, entries in range, identity at 0, Latin, associative.
  static GroupTable validate(const Rows& rows);
  static GroupTable validate(Element n, std::vector<Element> flat);

  Element order() const { return n_; }
  Element op(Element x, Element y) const { return op_[std::size_t{x} * n_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  Element element_order(Element x) const;
  bool is_abelian() const;

  const std::vector<Element>& flat() const { return op_; }
  Rows rows() const;

  /// Table transported along f (old label -> new label); f must fix 0.
  GroupTable relabeled(const Bijection& f) const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.n_ == b.n_ && a.op_ == b.op_;
  }

 private:
  // Unchecked; callers guarantee the group axioms.
  GroupTable(Element n, std::vector<Element> flat);

  friend Holomorph holomorph(const GroupTable& g);
  friend GroupTable direct_product(const GroupTable& g, const GroupTable& h);

  Element n_ = 0;
  std::vector<Element> op_;
  std::vector<Element> inv_;
};

inline GroupTable validate_group(const GroupTable::Rows& rows) { return GroupTable::validate(rows); }

// Standard groups. Elements are numbered so that 0 is the identity.
GroupTable trivial_group();
GroupTable cyclic_group(Element n);
/// Dihedral group of the given (even) order: r^k = k, s r^k = order/2 + k.
GroupTable dihedral_group(Element order);
/// Q8 with 0=1, 1=-1, 2=i, 3=-i, 4=j, 5=-j, 6=k, 7=-k.
GroupTable quaternion_group();
/// Componentwise product; the pair (i, j) is element i + |G|*j.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);
GroupTable abelian_group(std::span<const Element> invariant_factors);

Element commutator(const GroupTable& g, Element x, Element y);
ElementSet centralizer(const GroupTable& g, Element x);
ElementSet center(const GroupTable& g);
ElementSet subgroup_closure(const GroupTable& g, const ElementSet& generators);
ElementSet commutator_subgroup(const GroupTable& g);
bool is_subgroup(const GroupTable& g, const ElementSet& s);
bool is_normal(const GroupTable& g, const ElementSet& h);
bool is_homomorphism(const GroupTable& from, const GroupTable& to, const Bijection& f);

struct GroupQuotient {
  GroupTable group;
  std::vector<Element> coset_of;         // element -> coset index
  std::vector<Element> representatives;  // coset index -> minimal element
};

GroupQuotient quotient_group(const GroupTable& g, const ElementSet& h);

/// All isomorphisms g -> h, sorted lexicographically by image list.
std::vector<Bijection> isomorphisms(const GroupTable& g, const GroupTable& h);
std::vector<Bijection> automorphism_group(const GroupTable& g);

/// Hol(G) = G ⋊ Aut(G). Element a + n*k is the permutation x ↦ a·φ_k(x),
/// where φ_0 is the identity automorphism.
struct Holomorph {
  Element base_order = 0;
  GroupTable group;
  std::vector<Bijection> automorphisms;
  std::vector<Bijection> action;

  Element moves_identity_to(Element k) const { return k % base_order; }
};

Holomorph holomorph(const GroupTable& g);

/// Subgroups of Hol(G) acting regularly on G, as sorted sets of Hol indices.
std::vector<ElementSet> regular_subgroups(const Holomorph& hol);

Rational group_commuting_probability(const GroupTable& g);

struct CanonicalGroup {
  Bijection labeling;  // old label -> canonical label
  GroupTable table;
};

/// Lexicographically minimal relabeling fixing 0.
CanonicalGroup canonical_form(const GroupTable& g);

}  // namespace bracekit
