#include "bracekit/brace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace bracekit {

SkewBrace::SkewBrace() : SkewBrace(GroupTable(), GroupTable()) {}

SkewBrace::SkewBrace(GroupTable add, GroupTable mul) : add_(std::move(add)), mul_(std::move(mul)) {
  const Element n = add_.order();
  lambda_.resize(std::size_t{n} * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      lambda_[std::size_t{a} * n + b] = add_.op(add_.inv(a), mul_.op(a, b));
    }
  }
}

SkewBrace SkewBrace::unchecked(GroupTable add, GroupTable mul) {
  return SkewBrace(std::move(add), std::move(mul));
}

SkewBrace SkewBrace::validate(GroupTable add, GroupTable mul) {
  if (add.order() != mul.order()) {
    throw BraceError(ErrorKind::IdentityMismatch,
                     "additive and multiplicative tables have " + std::to_string(add.order()) +
                         " and " + std::to_string(mul.order()) + " elements");
  }
  const Element n = add.order();
  for (Element a = 0; a < n; ++a) {
    const Element na = add.inv(a);
    for (Element b = 0; b < n; ++b) {
      const Element ab_minus_a = add.op(mul.op(a, b), na);
      for (Element c = 0; c < n; ++c) {
        if (mul.op(a, add.op(b, c)) != add.op(ab_minus_a, mul.op(a, c))) {
          throw BraceError(ErrorKind::DistributivityFails,
                           "(a,b,c) = (" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ")");
        }
      }
    }
  }
  return SkewBrace(std::move(add), std::move(mul));
}

SkewBrace SkewBrace::validate(const GroupTable::Rows& add, const GroupTable::Rows& mul) {
  return validate(GroupTable::validate(add), GroupTable::validate(mul));
}

Bijection SkewBrace::lambda_map(Element a) const {
  Bijection f;
  f.map.resize(order());
  for (Element b = 0; b < order(); ++b) f.map[b] = lambda(a, b);
  return f;
}

namespace {

void check_index(const SkewBrace& b, Element x) {
  if (x >= b.order()) {
    throw BraceError(ErrorKind::IndexOutOfRange,
                     "element " + std::to_string(x) + " in a brace of order " +
                         std::to_string(b.order()));
  }
}

}  // namespace

Element star(const SkewBrace& b, Element x, Element y) {
  check_index(b, x);
  check_index(b, y);
  return b.star(x, y);
}

Commutators commutators(const SkewBrace& b, Element x, Element y) {
  check_index(b, x);
  check_index(b, y);
  return {b.gamma_plus(x, y), b.gamma_circ(x, y)};
}

// ---------------------------------------------------------------------------
// Constructors

SkewBrace trivial_brace(const GroupTable& g) { return SkewBrace::unchecked(g, g); }

SkewBrace opposite_brace(const GroupTable& g) {
  const Element n = g.order();
  std::vector<Element> flat(std::size_t{n} * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) flat[std::size_t{a} * n + b] = g.op(b, a);
  }
  return SkewBrace::validate(g, GroupTable::validate(n, std::move(flat)));
}

bool is_valid_cyclic_parameter(Element n, Element d) {
  if (n == 0 || d == 0 || n % d != 0) return false;
  Element m = n;
  for (Element p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    if (d % p != 0) return false;
    while (m % p == 0) m /= p;
  }
  return m == 1 || d % m == 0;
}

SkewBrace cyclic_brace(Element n, Element d) {
  if (!is_valid_cyclic_parameter(n, d)) {
    throw BraceError(ErrorKind::BadCyclicParameter,
                     "d = " + std::to_string(d) + ", n = " + std::to_string(n));
  }
  std::vector<Element> flat(std::size_t{n} * n);
  const std::uint64_t dn = d % n;
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      flat[x * n + y] = static_cast<Element>((x + y + (dn * x % n) * y) % n);
    }
  }
  return SkewBrace::validate(cyclic_group(n), GroupTable::validate(n, std::move(flat)));
}

SkewBrace direct_product(const SkewBrace& b1, const SkewBrace& b2) {
  return SkewBrace::unchecked(direct_product(b1.additive(), b2.additive()),
                              direct_product(b1.multiplicative(), b2.multiplicative()));
}

// ---------------------------------------------------------------------------
// Flags and distinguished ideals

StructureFlags structure_flags(const SkewBrace& b) {
  const Element n = b.order();
  StructureFlags f;
  f.trivial = b.additive() == b.multiplicative();

  f.two_sided = true;
  for (Element a = 0; a < n && f.two_sided; ++a) {
    const Element na = b.neg(a);
    for (Element x = 0; x < n && f.two_sided; ++x) {
      for (Element y = 0; y < n; ++y) {
        // (x+y)∘a = (x∘a) − a + (y∘a)
        if (b.circ(b.plus(x, y), a) != b.plus(b.plus(b.circ(x, a), na), b.circ(y, a))) {
          f.two_sided = false;
          break;
        }
      }
    }
  }

  f.symmetric = true;
  for (Element a = 0; a < n && f.symmetric; ++a) {
    const Element ai = b.circ_inv(a);
    for (Element x = 0; x < n && f.symmetric; ++x) {
      const Element left = b.circ(b.plus(a, x), ai);
      for (Element y = 0; y < n; ++y) {
        // (B, ∘, +): a + (x∘y) = (a+x) ∘ a⁻¹ ∘ (a+y)
        if (b.plus(a, b.circ(x, y)) != b.circ(left, b.plus(a, y))) {
          f.symmetric = false;
          break;
        }
      }
    }
  }

  f.lambda_homomorphic = true;
  for (Element x = 0; x < n && f.lambda_homomorphic; ++x) {
    for (Element y = 0; y < n && f.lambda_homomorphic; ++y) {
      const Element s = b.plus(x, y);
      for (Element z = 0; z < n; ++z) {
        if (b.lambda(s, z) != b.lambda(x, b.lambda(y, z))) {
          f.lambda_homomorphic = false;
          break;
        }
      }
    }
  }
  return f;
}

SocleData socle_and_annihilator(const SkewBrace& b) {
  const Element n = b.order();
  std::vector<Element> ker, soc, ann;
  for (Element a = 0; a < n; ++a) {
    bool in_ker = true, central_plus = true, central_circ = true;
    for (Element x = 0; x < n; ++x) {
      if (b.lambda(a, x) != x) in_ker = false;
      if (b.plus(a, x) != b.plus(x, a)) central_plus = false;
      if (b.circ(a, x) != b.circ(x, a)) central_circ = false;
    }
    if (!in_ker) continue;
    ker.push_back(a);
    if (!central_plus) continue;
    soc.push_back(a);
    if (central_circ) ann.push_back(a);
  }
  return {ElementSet(n, std::move(ker)), ElementSet(n, std::move(soc)),
          ElementSet(n, std::move(ann))};
}

ElementSet annihilator(const SkewBrace& b) { return socle_and_annihilator(b).annihilator; }

// ---------------------------------------------------------------------------
// Sub-braces and ideals

SubsetClass classify_subset(const SkewBrace& b, const ElementSet& s) {
  if (s.empty()) throw BraceError(ErrorKind::InvalidSubset, "empty subset");
  if (s.ambient() != b.order()) {
    throw BraceError(ErrorKind::IndexOutOfRange, "subset ambient size differs from brace order");
  }
  SubsetClass c;
  c.is_sub_brace = is_subgroup(b.additive(), s) && is_subgroup(b.multiplicative(), s);
  if (!c.is_sub_brace) return c;
  const auto in = s.mask();
  c.is_left_ideal = true;
  for (Element a = 0; a < b.order() && c.is_left_ideal; ++a) {
    for (Element x : s) {
      if (!in[b.lambda(a, x)]) {
        c.is_left_ideal = false;
        break;
      }
    }
  }
  c.is_ideal = c.is_left_ideal && is_normal(b.additive(), s) && is_normal(b.multiplicative(), s);
  return c;
}

namespace {

// Worklist closure: adds images of every member under the given closure
// steps until nothing new appears.
template <class Step>
ElementSet close_under(const SkewBrace& b, const ElementSet& s, Step step) {
  const Element n = b.order();
  std::vector<char> in(n, 0);
  std::vector<Element> members{0};
  in[0] = 1;
  for (Element x : s) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  }
  auto add = [&](Element y) {
    if (!in[y]) {
      in[y] = 1;
      members.push_back(y);
    }
  };
  // Pairwise products need revisiting as the set grows, so iterate to a fixpoint.
  std::size_t before = 0;
  while (before != members.size()) {
    before = members.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        add(b.plus(members[i], members[j]));
        add(b.circ(members[i], members[j]));
      }
      add(b.neg(members[i]));
      add(b.circ_inv(members[i]));
      step(members[i], add);
    }
  }
  return ElementSet(n, std::move(members));
}

}  // namespace

ElementSet sub_brace_closure(const SkewBrace& b, const ElementSet& s) {
  return close_under(b, s, [](Element, auto&&) {});
}

ElementSet ideal_closure(const SkewBrace& b, const ElementSet& s) {
  return close_under(b, s, [&b](Element x, auto&& add) {
    for (Element a = 0; a < b.order(); ++a) {
      add(b.lambda(a, x));
      add(b.minus(b.plus(a, x), a));
      add(b.circ(b.circ(a, x), b.circ_inv(a)));
    }
  });
}

std::vector<ElementSet> sub_braces(const SkewBrace& b) {
  const Element n = b.order();
  const GroupTable& mul = b.multiplicative();
  std::set<ElementSet> subgroups;
  std::vector<ElementSet> frontier{ElementSet::identity_only(n)};
  subgroups.insert(frontier.front());
  while (!frontier.empty()) {
    ElementSet h = std::move(frontier.back());
    frontier.pop_back();
    for (Element x = 0; x < n; ++x) {
      if (h.contains(x)) continue;
      auto gens = h.members();
      gens.push_back(x);
      ElementSet next = subgroup_closure(mul, ElementSet(n, std::move(gens)));
      if (subgroups.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<ElementSet> out;
  for (const auto& h : subgroups) {
    if (is_subgroup(b.additive(), h)) out.push_back(h);
  }
  return out;
}

std::vector<ElementSet> ideals(const SkewBrace& b) {
  std::vector<ElementSet> out;
  for (auto& h : sub_braces(b)) {
    if (classify_subset(b, h).is_ideal) out.push_back(std::move(h));
  }
  return out;
}

BraceQuotient quotient_brace(const SkewBrace& b, const ElementSet& ideal) {
  if (ideal.empty() || !classify_subset(b, ideal).is_ideal) {
    throw BraceError(ErrorKind::NotAnIdeal, "subset of size " + std::to_string(ideal.size()));
  }
  GroupQuotient q = quotient_group(b.additive(), ideal);
  const auto m = static_cast<Element>(q.representatives.size());
  std::vector<Element> flat(std::size_t{m} * m);
  for (Element i = 0; i < m; ++i) {
    for (Element j = 0; j < m; ++j) {
      flat[std::size_t{i} * m + j] =
          q.coset_of[b.circ(q.representatives[i], q.representatives[j])];
    }
  }
  BraceQuotient out;
  out.brace = SkewBrace::validate(q.group, GroupTable::validate(m, std::move(flat)));
  out.coset_of = std::move(q.coset_of);
  out.representatives = std::move(q.representatives);
  return out;
}

SubBrace induced_sub_brace(const SkewBrace& b, const ElementSet& h) {
  if (h.empty() || !classify_subset(b, h).is_sub_brace) {
    throw BraceError(ErrorKind::InvalidSubset, "not a sub-brace");
  }
  const auto m = static_cast<Element>(h.size());
  std::vector<Element> index(b.order(), kNoElement);
  for (Element i = 0; i < m; ++i) index[h.members()[i]] = i;
  std::vector<Element> add(std::size_t{m} * m), mul(std::size_t{m} * m);
  for (Element i = 0; i < m; ++i) {
    for (Element j = 0; j < m; ++j) {
      const Element x = h.members()[i], y = h.members()[j];
      add[std::size_t{i} * m + j] = index[b.plus(x, y)];
      mul[std::size_t{i} * m + j] = index[b.circ(x, y)];
    }
  }
  return {SkewBrace::validate(GroupTable::validate(m, std::move(add)),
                              GroupTable::validate(m, std::move(mul))),
          h.members()};
}

// ---------------------------------------------------------------------------
// Series

namespace {

ElementSet additive_span(const SkewBrace& b, std::vector<Element> elements) {
  return subgroup_closure(b.additive(), ElementSet(b.order(), std::move(elements)));
}

ElementSet next_ann(const SkewBrace& b, const ElementSet& prev) {
  const auto in = prev.mask();
  std::vector<Element> out;
  for (Element a = 0; a < b.order(); ++a) {
    bool ok = true;
    for (Element x = 0; x < b.order() && ok; ++x) {
      ok = in[b.star(a, x)] && in[b.star(x, a)] && in[b.gamma_plus(a, x)];
    }
    if (ok) out.push_back(a);
  }
  return ElementSet(b.order(), std::move(out));
}

ElementSet next_descending(const SkewBrace& b, const ElementSet& prev, SeriesKind kind) {
  std::vector<Element> gens;
  for (Element a = 0; a < b.order(); ++a) {
    for (Element u : prev) {
      if (kind == SeriesKind::Gamma || kind == SeriesKind::StarLeft) gens.push_back(b.star(a, u));
      if (kind == SeriesKind::Gamma || kind == SeriesKind::StarRight) gens.push_back(b.star(u, a));
      if (kind == SeriesKind::Gamma) gens.push_back(b.gamma_plus(a, u));
    }
  }
  return additive_span(b, std::move(gens));
}

void check_term(const SkewBrace& b, const ElementSet& term, SeriesKind kind) {
  const SubsetClass c = classify_subset(b, term);
  const bool ok = kind == SeriesKind::StarLeft ? c.is_left_ideal : c.is_ideal;
  if (!ok) throw std::logic_error("series term fails its ideal property");
}

}  // namespace

std::vector<ElementSet> series(const SkewBrace& b, SeriesKind kind) {
  const Element n = b.order();
  std::vector<ElementSet> terms;
  terms.push_back(kind == SeriesKind::Ann ? next_ann(b, ElementSet::identity_only(n))
                                          : ElementSet::full(n));
  check_term(b, terms.back(), kind);
  for (Element guard = 0; guard <= n; ++guard) {
    ElementSet next = kind == SeriesKind::Ann ? next_ann(b, terms.back())
                                              : next_descending(b, terms.back(), kind);
    if (next == terms.back()) return terms;
    check_term(b, next, kind);
    terms.push_back(std::move(next));
  }
  throw std::logic_error("series failed to stabilize within |B|+1 steps");
}

ElementSet series_term(const SkewBrace& b, SeriesKind kind, unsigned k) {
  if (k == 0) throw BraceError(ErrorKind::IndexOutOfRange, "series terms are 1-based");
  auto terms = series(b, kind);
  return k <= terms.size() ? std::move(terms[k - 1]) : std::move(terms.back());
}

std::optional<unsigned> nilpotency(const SkewBrace& b) {
  const auto ann = series(b, SeriesKind::Ann);
  const auto gamma = series(b, SeriesKind::Gamma);
  std::optional<unsigned> cls;
  if (b.order() == 1) {
    cls = 0;
  } else if (ann.back().size() == b.order()) {
    cls = static_cast<unsigned>(ann.size());
  }
  // Ann_c(B) = B exactly when Γ_{c+1}(B) = 1.
  const bool gamma_vanishes = gamma.back().size() == 1;
  const bool agree = cls ? gamma_vanishes && (b.order() == 1 || gamma.size() == *cls + 1)
                         : !gamma_vanishes;
  if (!agree) throw std::logic_error("annihilator and Γ-series nilpotency criteria disagree");
  return cls;
}

// ---------------------------------------------------------------------------
// Isomorphisms and canonical form

std::vector<Bijection> brace_isomorphisms(const SkewBrace& a, const SkewBrace& b) {
  if (a.order() != b.order()) return {};
  auto add = isomorphisms(a.additive(), b.additive());
  if (add.empty()) return {};
  auto mul = isomorphisms(a.multiplicative(), b.multiplicative());
  if (mul.empty()) return {};
  const bool filter_add = add.size() <= mul.size();
  auto& candidates = filter_add ? add : mul;
  const GroupTable& from = filter_add ? a.multiplicative() : a.additive();
  const GroupTable& to = filter_add ? b.multiplicative() : b.additive();
  std::vector<Bijection> out;
  for (auto& f : candidates) {
    if (is_homomorphism(from, to, f)) out.push_back(std::move(f));
  }
  return out;
}

CanonicalBrace canonical_form(const SkewBrace& b,
                              const std::vector<Bijection>& additive_automorphisms) {
  const CanonicalGroup base = canonical_form(b.additive());
  std::optional<GroupTable> best_mul;
  Bijection best_labeling;
  for (const Bijection& alpha : additive_automorphisms) {
    Bijection f = base.labeling.after(alpha);
    GroupTable mul = b.multiplicative().relabeled(f);
    if (!best_mul || mul.flat() < best_mul->flat()) {
      best_mul = std::move(mul);
      best_labeling = std::move(f);
    }
  }
  return {best_labeling, SkewBrace::unchecked(base.table, std::move(*best_mul))};
}

CanonicalBrace canonical_form(const SkewBrace& b) {
  return canonical_form(b, automorphism_group(b.additive()));
}

}  // namespace bracekit
