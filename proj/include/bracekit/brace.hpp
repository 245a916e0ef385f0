#pragma once

#include <optional>
#include <vector>

#include "bracekit/group.hpp"
#include "bracekit/rational.hpp"

namespace bracekit {

// A finite skew left brace (B, +, ∘) on 0..n-1. Both groups have identity 0
// and a∘(b+c) = (a∘b) − a + (a∘c) for all a, b, c.
class SkewBrace {
 public:
  /// The one-element brace.
  SkewBrace();

  /// validate_skew_brace: checks skew left distributivity on all n³ triples.
  static SkewBrace validate(GroupTable add, GroupTable mul);
  static SkewBrace validate(const GroupTable::Rows& add, const GroupTable::Rows& mul);
  /// Skips the distributivity check; the caller guarantees it holds.
  static SkewBrace unchecked(GroupTable add, GroupTable mul);

  Element order() const { return add_.order(); }
  const GroupTable& additive() const { return add_; }
  const GroupTable& multiplicative() const { return mul_; }

  Element plus(Element a, Element b) const { return add_.op(a, b); }
  Element neg(Element a) const { return add_.inv(a); }
  Element minus(Element a, Element b) const { return add_.op(a, add_.inv(b)); }
  Element circ(Element a, Element b) const { return mul_.op(a, b); }
  Element circ_inv(Element a) const { return mul_.inv(a); }

  /// λ_a(b) = −a + (a∘b)
  Element lambda(Element a, Element b) const { return lambda_[std::size_t{a} * order() + b]; }
  /// a∗b = λ_a(b) − b
  Element star(Element a, Element b) const { return minus(lambda(a, b), b); }
  /// [a,b]⁺ = a + b − a − b
  Element gamma_plus(Element a, Element b) const { return commutator(add_, a, b); }
  /// [a,b]∘ = a∘b∘a⁻¹∘b⁻¹
  Element gamma_circ(Element a, Element b) const { return commutator(mul_, a, b); }

  Bijection lambda_map(Element a) const;

  friend bool operator==(const SkewBrace& x, const SkewBrace& y) {
    return x.add_ == y.add_ && x.mul_ == y.mul_;
  }

 private:
  SkewBrace(GroupTable add, GroupTable mul);

  GroupTable add_;
  GroupTable mul_;
  std::vector<Element> lambda_;
};

inline SkewBrace validate_skew_brace(const GroupTable& add, const GroupTable& mul) {
  return SkewBrace::validate(add, mul);
}

struct Commutators {
  Element gamma_plus;
  Element gamma_circ;
};

/// Range-checked a∗b.
Element star(const SkewBrace& b, Element x, Element y);
Commutators commutators(const SkewBrace& b, Element x, Element y);

SkewBrace trivial_brace(const GroupTable& g);
/// (G, +, +ₒₚ) with a +ₒₚ b = b + a.
SkewBrace opposite_brace(const GroupTable& g);
/// ℤ/n with x∘y = x + y + dxy; needs p | d | n for every prime p | n.
SkewBrace cyclic_brace(Element n, Element d);
bool is_valid_cyclic_parameter(Element n, Element d);
/// Componentwise; the pair (i, j) is element i + |B1|*j.
SkewBrace direct_product(const SkewBrace& b1, const SkewBrace& b2);

struct StructureFlags {
  bool trivial = false;
  bool two_sided = false;
  bool symmetric = false;
  bool lambda_homomorphic = false;
};

StructureFlags structure_flags(const SkewBrace& b);

struct SocleData {
  ElementSet ker_lambda;
  ElementSet socle;
  ElementSet annihilator;
};

SocleData socle_and_annihilator(const SkewBrace& b);
ElementSet annihilator(const SkewBrace& b);

struct SubsetClass {
  bool is_sub_brace = false;
  bool is_left_ideal = false;
  bool is_ideal = false;
};

/// Throws InvalidSubset for the empty set.
SubsetClass classify_subset(const SkewBrace& b, const ElementSet& s);
ElementSet sub_brace_closure(const SkewBrace& b, const ElementSet& s);
ElementSet ideal_closure(const SkewBrace& b, const ElementSet& s);

/// Every sub-brace (subgroup of both groups), sorted.
std::vector<ElementSet> sub_braces(const SkewBrace& b);
std::vector<ElementSet> ideals(const SkewBrace& b);

struct BraceQuotient {
  SkewBrace brace;
  std::vector<Element> coset_of;         // element -> coset index
  std::vector<Element> representatives;  // coset index -> minimal element
};

BraceQuotient quotient_brace(const SkewBrace& b, const ElementSet& ideal);

struct SubBrace {
  SkewBrace brace;
  std::vector<Element> elements;  // new index -> element of the ambient brace
};

/// Induced tables on a sub-brace, relabeled in increasing element order.
SubBrace induced_sub_brace(const SkewBrace& b, const ElementSet& h);

enum class SeriesKind { Ann, Gamma, StarLeft, StarRight };

/// Ann ascends from Ann₁ = Ann(B); the others descend from B. Terms are
/// listed until two consecutive terms coincide (the repeat is not listed).
std::vector<ElementSet> series(const SkewBrace& b, SeriesKind kind);
/// The k-th term (1-based), constant past stabilization.
ElementSet series_term(const SkewBrace& b, SeriesKind kind, unsigned k);

/// Nilpotency class from the annihilator series (0 for the one-element
/// brace); nullopt when the series never reaches B.
std::optional<unsigned> nilpotency(const SkewBrace& b);

/// Bijections that are isomorphisms of both groups, sorted.
std::vector<Bijection> brace_isomorphisms(const SkewBrace& a, const SkewBrace& b);

struct CanonicalBrace {
  Bijection labeling;  // old label -> canonical label
  SkewBrace brace;
};

/// Lexicographically minimal (add, mul) over relabelings fixing 0.
CanonicalBrace canonical_form(const SkewBrace& b);
/// Same, reusing a precomputed Aut(B,+).
CanonicalBrace canonical_form(const SkewBrace& b, const std::vector<Bijection>& additive_automorphisms);

struct BraceReport {
  ElementSet ker_lambda;
  ElementSet socle;
  ElementSet annihilator;
  StructureFlags flags;
  std::optional<unsigned> nilpotency_class;
  Rational pb;
};

}  // namespace bracekit
