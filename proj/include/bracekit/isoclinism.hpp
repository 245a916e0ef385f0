#pragma once

#include <optional>
#include <vector>

#include "bracekit/brace.hpp"

namespace bracekit {

// Commutator data of B: the quotient B/Ann(B), the ideal Γ₂(B) as a brace,
// and the maps (ā, b̄) ↦ [a,b]⁺ and (ā, b̄) ↦ a∗b into Γ₂(B).
struct IsoclinismData {
  BraceQuotient quotient;         // B / Ann(B)
  ElementSet annihilator;
  SubBrace gamma2;                // Γ₂(B) relabeled 0..k-1
  std::vector<Element> phi_plus;  // [i * |quotient| + j] -> gamma2 index
  std::vector<Element> phi_star;

  Element quotient_order() const { return quotient.brace.order(); }
  Element plus_at(Element i, Element j) const { return phi_plus[std::size_t{i} * quotient_order() + j]; }
  Element star_at(Element i, Element j) const { return phi_star[std::size_t{i} * quotient_order() + j]; }
};

IsoclinismData isoclinism_data(const SkewBrace& b);

struct IsoclinismWitness {
  Bijection xi;     // on quotient elements
  Bijection theta;  // on gamma2 elements

  friend bool operator==(const IsoclinismWitness&, const IsoclinismWitness&) = default;
};

/// First commuting (ξ, θ) in lexicographic order, or nullopt.
std::optional<IsoclinismWitness> are_isoclinic(const SkewBrace& a, const SkewBrace& b);
std::optional<IsoclinismWitness> are_isoclinic(const IsoclinismData& a, const IsoclinismData& b);

/// Re-checks a witness against both diagrams.
bool is_isoclinism(const IsoclinismData& a, const IsoclinismData& b, const IsoclinismWitness& w);

/// Ann(B) ⊆ Γ₂(B).
bool is_stem(const SkewBrace& b);

}  // namespace bracekit
