#include "bracekit/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace bracekit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::IdentityNotZero: return "IdentityNotZero";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::DistributivityFails: return "DistributivityFails";
    case ErrorKind::IdentityMismatch: return "IdentityMismatch";
    case ErrorKind::BadCyclicParameter: return "BadCyclicParameter";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::InvalidSubset: return "InvalidSubset";
    case ErrorKind::GapViolation: return "GapViolation";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

// ---------------------------------------------------------------------------
// ElementSet / Bijection

ElementSet::ElementSet(Element ambient, std::vector<Element> members)
    : ambient_(ambient), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= ambient_) {
    throw BraceError(ErrorKind::IndexOutOfRange,
                     "element " + std::to_string(members_.back()) + " outside 0.." +
                         std::to_string(ambient_ == 0 ? 0 : ambient_ - 1));
  }
}

ElementSet ElementSet::full(Element n) {
  std::vector<Element> all(n);
  std::iota(all.begin(), all.end(), Element{0});
  return ElementSet(n, std::move(all));
}

ElementSet ElementSet::identity_only(Element n) { return ElementSet(n, {0}); }

ElementSet ElementSet::from_mask(const std::vector<char>& mask) {
  std::vector<Element> members;
  for (Element x = 0; x < mask.size(); ++x) {
    if (mask[x]) members.push_back(x);
  }
  ElementSet s;
  s.ambient_ = static_cast<Element>(mask.size());
  s.members_ = std::move(members);
  return s;
}

bool ElementSet::contains(Element x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out;
  out.ambient_ = ambient_;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
  return out;
}

std::vector<char> ElementSet::mask() const {
  std::vector<char> m(ambient_, 0);
  for (Element x : members_) m[x] = 1;
  return m;
}

Bijection Bijection::identity(Element n) {
  Bijection b;
  b.map.resize(n);
  std::iota(b.map.begin(), b.map.end(), Element{0});
  return b;
}

bool Bijection::is_permutation() const {
  std::vector<char> seen(map.size(), 0);
  for (Element y : map) {
    if (y >= map.size() || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

Bijection Bijection::inverse() const {
  Bijection out;
  out.map.resize(map.size());
  for (Element x = 0; x < map.size(); ++x) out.map[map[x]] = x;
  return out;
}

Bijection Bijection::after(const Bijection& first) const {
  Bijection out;
  out.map.resize(first.map.size());
  for (Element x = 0; x < first.map.size(); ++x) out.map[x] = map[first.map[x]];
  return out;
}

// ---------------------------------------------------------------------------
// GroupTable

GroupTable::GroupTable(Element n, std::vector<Element> flat) : n_(n), op_(std::move(flat)) {
  inv_.assign(n_, 0);
  for (Element x = 0; x < n_; ++x) {
    for (Element y = 0; y < n_; ++y) {
      if (op(x, y) == 0) {
        inv_[x] = y;
        break;
      }
    }
  }
}

GroupTable GroupTable::validate(const Rows& rows) {
  const auto n = static_cast<Element>(rows.size());
  std::vector<Element> flat;
  flat.reserve(std::size_t{n} * n);
  for (Element x = 0; x < n; ++x) {
    if (rows[x].size() != n) {
      throw BraceError(ErrorKind::NotLatinSquare,
                       "row " + std::to_string(x) + " has " + std::to_string(rows[x].size()) +
                           " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), rows[x].begin(), rows[x].end());
  }
  return validate(n, std::move(flat));
}

GroupTable GroupTable::validate(Element n, std::vector<Element> flat) {
  auto cell = [n](Element x, Element y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  };
  if (n == 0) throw BraceError(ErrorKind::NotLatinSquare, "empty table");
  if (flat.size() != std::size_t{n} * n) {
    throw BraceError(ErrorKind::NotLatinSquare, "table is not square");
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (flat[std::size_t{x} * n + y] >= n) {
        throw BraceError(ErrorKind::IndexOutOfRange,
                         "entry at " + cell(x, y) + " is out of range");
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (flat[x] != x || flat[std::size_t{x} * n] != x) {
      throw BraceError(ErrorKind::IdentityNotZero,
                       "0 is not a two-sided identity at row/column " + std::to_string(x));
    }
  }
  for (Element x = 0; x < n; ++x) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (Element y = 0; y < n; ++y) {
      Element r = flat[std::size_t{x} * n + y];
      if (row_seen[r]) {
        throw BraceError(ErrorKind::NotLatinSquare, "row repeat at " + cell(x, y));
      }
      row_seen[r] = 1;
      Element c = flat[std::size_t{y} * n + x];
      if (col_seen[c]) {
        throw BraceError(ErrorKind::NotLatinSquare, "column repeat at " + cell(y, x));
      }
      col_seen[c] = 1;
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = flat[std::size_t{x} * n + y];
      for (Element z = 0; z < n; ++z) {
        const Element yz = flat[std::size_t{y} * n + z];
        if (flat[std::size_t{xy} * n + z] != flat[std::size_t{x} * n + yz]) {
          throw BraceError(ErrorKind::NotAssociative,
                           "triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
                               std::to_string(z) + ")");
        }
      }
    }
  }
  return GroupTable(n, std::move(flat));
}

Element GroupTable::element_order(Element x) const {
  Element k = 1;
  for (Element p = x; p != 0; p = op(p, x)) ++k;
  return k;
}

bool GroupTable::is_abelian() const {
  for (Element x = 0; x < n_; ++x) {
    for (Element y = x + 1; y < n_; ++y) {
      if (op(x, y) != op(y, x)) return false;
    }
  }
  return true;
}

GroupTable::Rows GroupTable::rows() const {
  Rows out(n_, std::vector<Element>(n_));
  for (Element x = 0; x < n_; ++x) {
    for (Element y = 0; y < n_; ++y) out[x][y] = op(x, y);
  }
  return out;
}

GroupTable GroupTable::relabeled(const Bijection& f) const {
  std::vector<Element> flat(op_.size());
  for (Element x = 0; x < n_; ++x) {
    for (Element y = 0; y < n_; ++y) {
      flat[std::size_t{f(x)} * n_ + f(y)] = f(op(x, y));
    }
  }
  return GroupTable(n_, std::move(flat));
}

// ---------------------------------------------------------------------------
// Standard groups

GroupTable trivial_group() { return GroupTable(); }

GroupTable cyclic_group(Element n) {
  std::vector<Element> flat(std::size_t{n} * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) flat[std::size_t{x} * n + y] = (x + y) % n;
  }
  return GroupTable::validate(n, std::move(flat));
}

GroupTable dihedral_group(Element order) {
  if (order < 2 || order % 2 != 0) {
    throw BraceError(ErrorKind::IndexOutOfRange, "dihedral order must be even and >= 2");
  }
  const Element m = order / 2;
  // (s^e r^k)(s^f r^l) = s^(e+f) r^((-1)^f k + l)
  std::vector<Element> flat(std::size_t{order} * order);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      const Element e = a / m, k = a % m, f = b / m, l = b % m;
      const Element rot = f == 0 ? (k + l) % m : (m - k + l) % m;
      flat[std::size_t{a} * order + b] = ((e + f) % 2) * m + rot;
    }
  }
  return GroupTable::validate(order, std::move(flat));
}

GroupTable quaternion_group() {
  // Element 2u + s is (-1)^s times the unit u in {1, i, j, k}.
  // unit_mul[u][v] = (unit, sign) of u*v.
  static constexpr int unit_mul[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<Element> flat(64);
  for (Element a = 0; a < 8; ++a) {
    for (Element b = 0; b < 8; ++b) {
      const auto& [unit, sign] = unit_mul[a / 2][b / 2];
      const Element s = static_cast<Element>((sign + a % 2 + b % 2) % 2);
      flat[a * 8 + b] = static_cast<Element>(2 * unit) + s;
    }
  }
  return GroupTable::validate(8, std::move(flat));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const Element n1 = g.order(), n2 = h.order(), n = n1 * n2;
  std::vector<Element> flat(std::size_t{n} * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      flat[std::size_t{x} * n + y] = g.op(x % n1, y % n1) + n1 * h.op(x / n1, y / n1);
    }
  }
  return GroupTable(n, std::move(flat));
}

GroupTable abelian_group(std::span<const Element> invariant_factors) {
  GroupTable out;
  for (Element k : invariant_factors) out = direct_product(out, cyclic_group(k));
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups

Element commutator(const GroupTable& g, Element x, Element y) {
  return g.op(g.op(x, y), g.op(g.inv(x), g.inv(y)));
}

ElementSet centralizer(const GroupTable& g, Element x) {
  if (x >= g.order()) {
    throw BraceError(ErrorKind::IndexOutOfRange, "element " + std::to_string(x));
  }
  std::vector<Element> out;
  for (Element y = 0; y < g.order(); ++y) {
    if (g.op(x, y) == g.op(y, x)) out.push_back(y);
  }
  return ElementSet(g.order(), std::move(out));
}

ElementSet center(const GroupTable& g) {
  ElementSet z = ElementSet::full(g.order());
  for (Element x = 0; x < g.order(); ++x) z = z.intersect(centralizer(g, x));
  return z;
}

ElementSet subgroup_closure(const GroupTable& g, const ElementSet& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  std::vector<Element> gens;
  for (Element s : generators) {
    if (s >= g.order()) throw BraceError(ErrorKind::IndexOutOfRange, std::to_string(s));
    gens.push_back(s);
    gens.push_back(g.inv(s));
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element x = members[i];
    for (Element s : gens) {
      const Element y = g.op(x, s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return ElementSet(g.order(), std::move(members));
}

ElementSet commutator_subgroup(const GroupTable& g) {
  std::vector<Element> comms;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) comms.push_back(commutator(g, x, y));
  }
  return subgroup_closure(g, ElementSet(g.order(), std::move(comms)));
}

bool is_subgroup(const GroupTable& g, const ElementSet& s) {
  if (!s.contains(0)) return false;
  const auto in = s.mask();
  for (Element x : s) {
    if (!in[g.inv(x)]) return false;
    for (Element y : s) {
      if (!in[g.op(x, y)]) return false;
    }
  }
  return true;
}

bool is_normal(const GroupTable& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) return false;
  const auto in = h.mask();
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y : h) {
      if (!in[g.op(g.op(x, y), g.inv(x))]) return false;
    }
  }
  return true;
}

bool is_homomorphism(const GroupTable& from, const GroupTable& to, const Bijection& f) {
  if (f.size() != from.order()) return false;
  for (Element x = 0; x < from.order(); ++x) {
    for (Element y = 0; y < from.order(); ++y) {
      if (f(from.op(x, y)) != to.op(f(x), f(y))) return false;
    }
  }
  return true;
}

GroupQuotient quotient_group(const GroupTable& g, const ElementSet& h) {
  if (h.ambient() != g.order() || !is_normal(g, h)) {
    throw BraceError(ErrorKind::NotNormal, "subgroup of size " + std::to_string(h.size()));
  }
  GroupQuotient q;
  q.coset_of.assign(g.order(), kNoElement);
  for (Element x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] != kNoElement) continue;
    const auto idx = static_cast<Element>(q.representatives.size());
    q.representatives.push_back(x);
    for (Element y : h) q.coset_of[g.op(x, y)] = idx;
  }
  const auto m = static_cast<Element>(q.representatives.size());
  std::vector<Element> flat(std::size_t{m} * m);
  for (Element i = 0; i < m; ++i) {
    for (Element j = 0; j < m; ++j) {
      flat[std::size_t{i} * m + j] =
          q.coset_of[g.op(q.representatives[i], q.representatives[j])];
    }
  }
  q.group = GroupTable::validate(m, std::move(flat));
  return q;
}

// ---------------------------------------------------------------------------
// Isomorphisms

namespace {

struct ElementProfile {
  Element order;
  std::size_t class_size;
  friend auto operator<=>(const ElementProfile&, const ElementProfile&) = default;
};

std::vector<ElementProfile> profiles(const GroupTable& g) {
  std::vector<ElementProfile> out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    out[x] = {g.element_order(x), g.order() / centralizer(g, x).size()};
  }
  return out;
}

// Greedy generating sequence: each step adds the element that enlarges the
// generated subgroup the most (smallest index on ties).
std::vector<Element> generating_sequence(const GroupTable& g) {
  std::vector<Element> gens;
  ElementSet current = ElementSet::identity_only(g.order());
  while (current.size() < g.order()) {
    Element best = kNoElement;
    ElementSet best_set;
    for (Element x = 1; x < g.order(); ++x) {
      if (current.contains(x)) continue;
      auto with = gens;
      with.push_back(x);
      ElementSet s = subgroup_closure(g, ElementSet(g.order(), with));
      if (best == kNoElement || s.size() > best_set.size()) {
        best = x;
        best_set = std::move(s);
      }
    }
    gens.push_back(best);
    current = std::move(best_set);
  }
  return gens;
}

// Extends generator images to the subgroup they generate by BFS over right
// multiplication. Returns false on an inconsistency or a non-injective map.
bool extend_by_generators(const GroupTable& g, const GroupTable& h,
                          std::span<const Element> gens, std::span<const Element> images,
                          std::vector<Element>& map) {
  map.assign(g.order(), kNoElement);
  std::vector<char> used(h.order(), 0);
  map[0] = 0;
  used[0] = 1;
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element y = g.op(x, gens[k]);
      const Element fy = h.op(map[x], images[k]);
      if (map[y] == kNoElement) {
        if (used[fy]) return false;
        map[y] = fy;
        used[fy] = 1;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Bijection> isomorphisms(const GroupTable& g, const GroupTable& h) {
  std::vector<Bijection> out;
  if (g.order() != h.order()) return out;
  const auto pg = profiles(g), ph = profiles(h);
  {
    auto sg = pg, sh = ph;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return out;
  }
  if (g.order() == 1) {
    out.push_back(Bijection::identity(1));
    return out;
  }
  const auto gens = generating_sequence(g);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (Element y = 0; y < h.order(); ++y) {
      if (ph[y] == pg[gens[k]]) candidates[k].push_back(y);
    }
  }
  std::vector<Element> images(gens.size());
  std::vector<Element> map;
  std::function<void(std::size_t)> search = [&](std::size_t level) {
    for (Element y : candidates[level]) {
      images[level] = y;
      std::span<const Element> gs(gens.data(), level + 1), is(images.data(), level + 1);
      if (!extend_by_generators(g, h, gs, is, map)) continue;
      if (level + 1 == gens.size()) {
        out.push_back(Bijection{map});
      } else {
        search(level + 1);
      }
    }
  };
  search(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bijection> automorphism_group(const GroupTable& g) { return isomorphisms(g, g); }

// ---------------------------------------------------------------------------
// Holomorph and regular subgroups

Holomorph holomorph(const GroupTable& g) {
  Holomorph hol;
  const Element n = g.order();
  hol.base_order = n;
  hol.automorphisms = automorphism_group(g);
  const auto m = static_cast<Element>(hol.automorphisms.size());
  std::map<std::vector<Element>, Element> aut_index;
  for (Element k = 0; k < m; ++k) aut_index.emplace(hol.automorphisms[k].map, k);
  std::vector<Element> aut_mul(std::size_t{m} * m);
  for (Element i = 0; i < m; ++i) {
    for (Element j = 0; j < m; ++j) {
      aut_mul[std::size_t{i} * m + j] =
          aut_index.at(hol.automorphisms[i].after(hol.automorphisms[j]).map);
    }
  }
  const Element size = n * m;
  // (a, φ)(b, ψ) = (a·φ(b), φψ)
  std::vector<Element> flat(std::size_t{size} * size);
  for (Element x = 0; x < size; ++x) {
    const Element a = x % n, i = x / n;
    for (Element y = 0; y < size; ++y) {
      const Element b = y % n, j = y / n;
      flat[std::size_t{x} * size + y] =
          g.op(a, hol.automorphisms[i](b)) + n * aut_mul[std::size_t{i} * m + j];
    }
  }
  hol.group = GroupTable(size, std::move(flat));
  hol.action.reserve(size);
  for (Element x = 0; x < size; ++x) {
    Bijection p;
    p.map.resize(n);
    for (Element b = 0; b < n; ++b) p.map[b] = g.op(x % n, hol.automorphisms[x / n](b));
    hol.action.push_back(std::move(p));
  }
  return hol;
}

namespace {

// Closure of members ∪ {extra} inside Hol that stays semiregular on the base
// set (distinct elements move 0 to distinct points). nullopt once it cannot.
std::optional<std::vector<Element>> semiregular_closure(const Holomorph& hol,
                                                        const std::vector<Element>& members,
                                                        Element extra) {
  const Element n = hol.base_order;
  std::vector<Element> point_owner(n, kNoElement);
  std::vector<Element> out;
  std::vector<Element> gens = members;
  gens.push_back(extra);
  auto add = [&](Element k) -> bool {
    const Element p = hol.moves_identity_to(k);
    if (point_owner[p] == k) return true;
    if (point_owner[p] != kNoElement) return false;
    point_owner[p] = k;
    out.push_back(k);
    return true;
  };
  add(0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element s : gens) {
      if (!add(hol.group.op(out[i], s))) return std::nullopt;
    }
  }
  if (n % out.size() != 0) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ElementSet> regular_subgroups(const Holomorph& hol) {
  const Element n = hol.base_order;
  const Element size = hol.group.order();
  std::set<std::vector<Element>> seen;
  std::set<std::vector<Element>> found;
  std::vector<std::vector<Element>> stack{{0}};
  seen.insert({0});
  if (n == 1) found.insert({0});
  while (!stack.empty()) {
    const auto current = std::move(stack.back());
    stack.pop_back();
    std::vector<char> covered(n, 0);
    for (Element k : current) covered[hol.moves_identity_to(k)] = 1;
    Element target = 0;
    while (target < n && covered[target]) ++target;
    if (target == n) continue;
    for (Element k = target; k < size; k += n) {
      auto next = semiregular_closure(hol, current, k);
      if (!next) continue;
      if (!seen.insert(*next).second) continue;
      if (next->size() == n) {
        found.insert(*next);
      } else {
        stack.push_back(std::move(*next));
      }
    }
  }
  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (const auto& members : found) out.emplace_back(size, members);
  return out;
}

// ---------------------------------------------------------------------------

Rational group_commuting_probability(const GroupTable& g) {
  std::int64_t count = 0;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      if (g.op(x, y) == g.op(y, x)) ++count;
    }
  }
  const std::int64_t n = g.order();
  return make_rational(count, n * n);
}

// ---------------------------------------------------------------------------
// Canonical form
//
// Cells are compared in row-major order. Row 0 and column 0 are fixed, and
// once row 1 is filled every label is assigned, so branching only happens in
// row 1: when a column index reaches the number of assigned labels, the next
// label is given to each unassigned element in turn. An unlabeled product
// always takes the next free label, which is forced for lexicographic
// minimality.

namespace {

struct CanonSearch {
  const GroupTable& g;
  Element n;
  std::vector<Element> best_table;
  std::vector<Element> best_labeling;
  bool have_best = false;

  struct State {
    std::vector<Element> label_of;  // old -> new
    std::vector<Element> old_of;    // new -> old
    Element assigned = 1;
    bool strictly_less = false;
  };

  void finish(const State& s) {
    std::vector<Element> table(std::size_t{n} * n);
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        table[std::size_t{i} * n + j] = s.label_of[g.op(s.old_of[i], s.old_of[j])];
      }
    }
    if (!have_best || table < best_table) {
      best_table = std::move(table);
      best_labeling = s.label_of;
      have_best = true;
    }
  }

  void fill(State s, Element j) {
    const Element prod = g.op(s.old_of[1], s.old_of[j]);
    if (s.label_of[prod] == kNoElement) {
      s.label_of[prod] = s.assigned;
      s.old_of[s.assigned] = prod;
      ++s.assigned;
    }
    const Element v = s.label_of[prod];
    if (have_best && !s.strictly_less) {
      const Element b = best_table[std::size_t{n} + j];
      if (v > b) return;
      if (v < b) s.strictly_less = true;
    }
    visit(std::move(s), j + 1);
  }

  void visit(State s, Element j) {
    if (j == n) {
      finish(s);
      return;
    }
    if (j < s.assigned) {
      fill(std::move(s), j);
      return;
    }
    for (Element e = 1; e < n; ++e) {
      if (s.label_of[e] != kNoElement) continue;
      State t = s;
      t.label_of[e] = j;
      t.old_of[j] = e;
      ++t.assigned;
      fill(std::move(t), j);
    }
  }
};

}  // namespace

CanonicalGroup canonical_form(const GroupTable& g) {
  const Element n = g.order();
  if (n == 1) return {Bijection::identity(1), g};
  CanonSearch search{g, n, {}, {}, false};
  CanonSearch::State s;
  s.label_of.assign(n, kNoElement);
  s.old_of.assign(n, kNoElement);
  s.label_of[0] = 0;
  s.old_of[0] = 0;
  search.visit(std::move(s), 1);
  Bijection labeling{search.best_labeling};
  return {labeling, g.relabeled(labeling)};
}

}  // namespace bracekit
