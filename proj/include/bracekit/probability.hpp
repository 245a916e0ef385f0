#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/rational.hpp"

namespace bracekit {

/// Brace centralizers of a fixed element x.
struct CentralizerSuite {
  ElementSet cb;         // x∗b = [x,b]∘ = [x,b]⁺ = 0
  ElementSet cb_left;    // Fixˡ(x) ∩ C_(B,∘)(x)
  ElementSet cb_right;   // Fixʳ(x) ∩ C_(B,+)(x)
  ElementSet fix_left;   // λ_b(x) = x
  ElementSet fix_right;  // λ_x(b) = b
};

CentralizerSuite centralizer_suite(const SkewBrace& b, Element x);
ElementSet brace_centralizer(const SkewBrace& b, Element x);

/// Pb(B): fraction of pairs with a∗b = b∗a = [a,b]⁺ = 0. Computed by direct
/// pair count and by the centralizer sum; the two must agree.
Rational commuting_probability(const SkewBrace& b);

/// (1/n²) Σ_x gcd(dx mod n, n) with gcd(0, n) = n.
Rational cyclic_pb_formula(Element n, Element d);

Element smallest_prime_divisor(Element n);
std::vector<Element> prime_divisors(Element n);
bool is_prime(Element n);
bool is_prime_power(Element n);

/// One inequality with both sides recorded. `applicable` is false when the
/// hypotheses of the bound do not hold for this brace.
struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
  Rational lhs;
  Rational rhs;
  std::string relation;  // "<=", "<", "=", ">="
};

struct BoundReport {
  Element order = 1;
  Element d = 1;  // |B / Ann(B)|
  Rational pb;
  std::vector<BoundCheck> checks;

  bool all_hold() const;
  const BoundCheck* find(const std::string& name) const;
};

BoundReport bound_report(const SkewBrace& b);

enum class GapClass { One, ThreeQuarters, AtMostFiveEighths };

const char* to_string(GapClass c);

/// Throws GapViolation if Pb lies in (5/8, 1) \ {3/4}, or if the 3/4 and
/// 5/8 characterizations fail.
GapClass gap_classify(const SkewBrace& b);

BraceReport brace_report(const SkewBrace& b);

}  // namespace bracekit
