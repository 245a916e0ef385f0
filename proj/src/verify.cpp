#include "bracekit/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "bracekit/parallel.hpp"

namespace bracekit {

namespace {

struct Item {
  const CatalogEntry* entry;
  std::size_t catalog;
  std::size_t index;
};

struct Outcome {
  bool applicable = false;
  std::string violation;  // empty when the check held
};

using BraceCheck = std::function<Outcome(const CatalogEntry&)>;

std::vector<Item> flatten(const std::vector<BraceCatalog>& cats) {
  std::vector<Item> out;
  for (std::size_t c = 0; c < cats.size(); ++c) {
    for (std::size_t i = 0; i < cats[c].entries.size(); ++i) out.push_back({&cats[c].entries[i], c, i});
  }
  return out;
}

Outcome ok() { return {true, {}}; }
Outcome skip() { return {false, {}}; }
Outcome bad(std::string why) { return {true, std::move(why)}; }

// Runs `check` on every entry; exceptions count as violations.
void per_brace(TheoremVerdict& v, const std::vector<Item>& items, unsigned jobs, const BraceCheck& check) {
  std::vector<Outcome> results(items.size());
  parallel_for(jobs, items.size(), [&](std::size_t i) {
    try {
      results[i] = check(*items[i].entry);
    } catch (const std::exception& e) {
      results[i] = bad(std::string("exception: ") + e.what());
    }
  });
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!results[i].applicable) continue;
    ++v.checked;
    if (!results[i].violation.empty()) {
      v.violations.push_back({items[i].entry->id, results[i].violation, items[i].entry->brace});
    }
  }
}

Element quotient_size(const CatalogEntry& e) {
  return e.brace.order() / static_cast<Element>(e.report.annihilator.size());
}

bool is_klein(const GroupTable& g) {
  if (g.order() != 4) return false;
  for (Element x = 0; x < 4; ++x) {
    if (g.element_order(x) > 2) return false;
  }
  return true;
}

bool is_cyclic(const GroupTable& g) {
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == g.order()) return true;
  }
  return false;
}

std::string rel(const Rational& a, const char* op, const Rational& b) {
  return to_string(a) + " " + op + " " + to_string(b);
}

std::string count_note(const std::string& what, std::size_t k, std::size_t of) {
  return what + ": " + std::to_string(k) + " of " + std::to_string(of);
}

bool all_outer_half(const SkewBrace& b, const ElementSet& ann) {
  for (Element x = 0; x < b.order(); ++x) {
    if (ann.contains(x)) continue;
    if (2 * brace_centralizer(b, x).size() != b.order()) return false;
  }
  return true;
}

// --- suites ---------------------------------------------------------------

Outcome check_gap(const CatalogEntry& e) {
  const Rational& pb = e.report.pb;
  const bool ann_full = e.report.annihilator.size() == e.brace.order();
  try {
    gap_classify(e.brace);
  } catch (const BraceError& err) {
    return bad(err.what());
  }
  if (!(pb == 1 || pb == Rational(3, 4) || (pb > 0 && pb <= Rational(5, 8)))) {
    return bad("Pb = " + to_string(pb) + " lies in the gap");
  }
  if ((pb == 1) != ann_full) return bad("Pb = 1 disagrees with Ann(B) = B");
  return ok();
}

Outcome check_three_quarters(const CatalogEntry& e) {
  const bool q = e.report.pb == Rational(3, 4);
  const bool d2 = quotient_size(e) == 2;
  if (q != d2) return bad("Pb = " + to_string(e.report.pb) + ", d = " + std::to_string(quotient_size(e)));
  return ok();
}

Outcome check_five_eighths(const CatalogEntry& e) {
  const Rational& pb = e.report.pb;
  const bool half = quotient_size(e) == 4 && all_outer_half(e.brace, e.report.annihilator);
  if ((pb == Rational(5, 8)) != half) {
    return bad("Pb = " + to_string(pb) + " but d = 4 with index-2 outer centralizers is " +
               (half ? "true" : "false"));
  }
  if (pb == Rational(5, 8)) {
    const BraceQuotient q = quotient_brace(e.brace, e.report.annihilator);
    if (!is_klein(q.brace.additive()) || !is_klein(q.brace.multiplicative())) {
      return bad("Pb = 5/8 but B/Ann(B) is not Klein four in both groups");
    }
  }
  return ok();
}

Outcome check_bounds(const CatalogEntry& e) {
  const BoundReport r = bound_report(e.brace);
  std::string failed;
  for (const auto& c : r.checks) {
    if (c.applicable && !c.holds) {
      failed += (failed.empty() ? "" : "; ") + c.name + ": " + rel(c.lhs, c.relation.c_str(), c.rhs);
    }
  }
  return failed.empty() ? ok() : bad(failed);
}

Outcome check_monotonicity(const CatalogEntry& e) {
  const SkewBrace& b = e.brace;
  const Rational& pb = e.report.pb;
  for (const ElementSet& n : ideals(b)) {
    const Rational lhs = commuting_probability(induced_sub_brace(b, n).brace) *
                         commuting_probability(quotient_brace(b, n).brace);
    if (!(pb <= lhs)) return bad("ideal of size " + std::to_string(n.size()) + ": " + rel(pb, "<=", lhs) + " fails");
  }
  for (const ElementSet& h : sub_braces(b)) {
    const Rational ph = commuting_probability(induced_sub_brace(b, h).brace);
    if (!(pb <= ph)) return bad("sub-brace of size " + std::to_string(h.size()) + ": " + rel(pb, "<=", ph) + " fails");
    if (h.size() == b.order()) continue;
    const Rational index(static_cast<long long>(b.order() / h.size()));
    const Rational scaled = ph / (index * index);
    if (!(scaled < pb)) {
      return bad("sub-brace of size " + std::to_string(h.size()) + ": " + rel(scaled, "<", pb) + " fails");
    }
  }
  return ok();
}

Outcome check_prime_index(const CatalogEntry& e) {
  const Element n = e.brace.order();
  const Element d = quotient_size(e);
  if (d == 1) return skip();
  const Rational& pb = e.report.pb;
  if (is_prime(d)) {
    const Rational want(static_cast<long long>(2 * d - 1), static_cast<long long>(d) * d);
    if (pb != want) return bad("d = " + std::to_string(d) + " prime but " + rel(pb, "!=", want));
  }
  for (Element p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    const Rational value(static_cast<long long>(2 * p - 1), static_cast<long long>(p) * p);
    if (pb != value) continue;
    if (n % p != 0) return bad("Pb = (2p-1)/p^2 for p = " + std::to_string(p) + " not dividing |B|");
    if (p == smallest_prime_divisor(n)) {
      const BraceQuotient q = quotient_brace(e.brace, e.report.annihilator);
      if (q.brace.order() != p || !is_cyclic(q.brace.additive())) {
        return bad("Pb = (2p-1)/p^2 with p smallest but B/Ann(B) is not Z_" + std::to_string(p));
      }
    }
  }
  return ok();
}

Outcome check_p_squared(const CatalogEntry& e) {
  const Element n = e.brace.order();
  const Element p = n > 1 ? smallest_prime_divisor(n) : 0;
  if (n == 1 || p * p != n) return skip();
  if (!e.report.nilpotency_class) return bad("order p^2 brace is not nilpotent");
  const Rational alt(static_cast<long long>(2 * p - 1), static_cast<long long>(p) * p);
  if (e.report.pb != 1 && e.report.pb != alt) return bad("Pb = " + to_string(e.report.pb));
  return ok();
}

Outcome check_gamma2_class2(const CatalogEntry& e) {
  if (series_term(e.brace, SeriesKind::Gamma, 2).size() != 2) return skip();
  if (e.report.nilpotency_class != 2u) {
    return bad("|Gamma_2| = 2 but class is " +
               (e.report.nilpotency_class ? std::to_string(*e.report.nilpotency_class) : std::string("none")));
  }
  return ok();
}

Outcome check_two_sided_pn(const CatalogEntry& e) {
  const Element n = e.brace.order();
  if (n == 1 || !is_prime_power(n) || !e.report.flags.two_sided) return skip();
  return e.report.nilpotency_class ? ok() : bad("two-sided brace of prime-power order is not nilpotent");
}

Outcome check_65_128(const CatalogEntry& e) {
  if (!(e.report.pb > Rational(65, 128))) return skip();
  return e.report.nilpotency_class ? ok() : bad("Pb = " + to_string(e.report.pb) + " > 65/128 but not nilpotent");
}

Outcome check_gamma_ann(const CatalogEntry& e) {
  const SkewBrace& b = e.brace;
  const Element n = b.order();
  for (unsigned k = 1; k <= n + 1; ++k) {
    const bool ann_full = series_term(b, SeriesKind::Ann, k).size() == n;
    const bool gamma_trivial = series_term(b, SeriesKind::Gamma, k + 1).size() == 1;
    if (ann_full != gamma_trivial) {
      return bad("k = " + std::to_string(k) + ": Ann_k = B is " + (ann_full ? "true" : "false") +
                 ", Gamma_{k+1} = 1 is " + (gamma_trivial ? "true" : "false"));
    }
  }
  nilpotency(b);  // asserts its own agreement check
  return ok();
}

Outcome check_centralizers(const CatalogEntry& e) {
  const SkewBrace& b = e.brace;
  const Element n = b.order();
  std::vector<ElementSet> cb(n);
  for (Element x = 0; x < n; ++x) cb[x] = centralizer_suite(b, x).cb;
  const ElementSet& ann = e.report.annihilator;
  for (Element x = 0; x < n; ++x) {
    if ((cb[x].size() == n) != ann.contains(x)) return bad("Cb(" + std::to_string(x) + ") = B disagrees with Ann");
    if (cb[x] != cb[b.circ_inv(x)]) return bad("Cb(x) != Cb(x^-1) at x = " + std::to_string(x));
    for (Element y = 0; y < n; ++y) {
      if (!cb[x].intersect(cb[y]).is_subset_of(cb[b.circ(x, y)])) {
        return bad("Cb(x) ∩ Cb(y) not inside Cb(x∘y) at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
  if (e.report.flags.symmetric || e.report.flags.lambda_homomorphic) {
    for (Element x = 0; x < n; ++x) {
      if (!classify_subset(b, cb[x]).is_sub_brace) return bad("Cb(" + std::to_string(x) + ") is not a sub-brace");
    }
  }
  return ok();
}

bool has_non_additive_centralizer(const SkewBrace& b) {
  for (Element x = 0; x < b.order(); ++x) {
    if (!is_subgroup(b.additive(), brace_centralizer(b, x))) return true;
  }
  return false;
}

Outcome check_series(const CatalogEntry& e) {
  // series() asserts ideal / left-ideal status of every term.
  for (auto kind : {SeriesKind::Ann, SeriesKind::Gamma, SeriesKind::StarLeft, SeriesKind::StarRight}) series(e.brace, kind);
  return ok();
}

bool star_left_non_ideal(const SkewBrace& b) {
  const auto terms = series(b, SeriesKind::StarLeft);
  for (std::size_t k = 2; k < terms.size(); ++k) {
    if (!classify_subset(b, terms[k]).is_ideal) return true;
  }
  return false;
}

Outcome check_integrity(const CatalogEntry& e) {
  SkewBrace::validate(e.brace.additive(), e.brace.multiplicative());
  return ok();
}

// --- whole-catalog suites --------------------------------------------------

void add_pairwise_distinct(TheoremVerdict& v, const std::vector<BraceCatalog>& cats, unsigned jobs) {
  for (const auto& c : cats) {
    const std::size_t m = c.entries.size();
    std::vector<std::string> found(m);
    parallel_for(jobs, m, [&](std::size_t i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (!brace_isomorphisms(c.entries[i].brace, c.entries[j].brace).empty()) {
          found[i] = "isomorphic to entry " + std::to_string(j + 1);
          return;
        }
      }
    });
    for (std::size_t i = 0; i < m; ++i) {
      if (!found[i].empty()) v.violations.push_back({c.entries[i].id, found[i], c.entries[i].brace});
    }
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct PairTable {
  std::vector<Item> items;
  std::vector<IsoclinismData> data;
  std::vector<std::optional<IsoclinismWitness>> witness;  // [i * m + j]
  std::size_t tested = 0;

  std::size_t size() const { return items.size(); }
  const std::optional<IsoclinismWitness>& at(std::size_t i, std::size_t j) const { return witness[i * size() + j]; }
};

PairTable isoclinism_pairs(const std::vector<BraceCatalog>& cats, unsigned jobs) {
  PairTable t;
  t.items = flatten(cats);
  const std::size_t m = t.items.size();
  t.data.resize(m);
  parallel_for(jobs, m, [&](std::size_t i) { t.data[i] = isoclinism_data(t.items[i].entry->brace); });
  t.witness.assign(m * m, std::nullopt);
  std::vector<std::size_t> tested(m, 0);
  parallel_for(jobs, m, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (t.data[i].quotient_order() != t.data[j].quotient_order()) continue;
      if (t.data[i].gamma2.brace.order() != t.data[j].gamma2.brace.order()) continue;
      ++tested[i];
      t.witness[i * m + j] = are_isoclinic(t.data[i], t.data[j]);
    }
  });
  t.tested = std::accumulate(tested.begin(), tested.end(), std::size_t{0});
  return t;
}

IsoclinismClasses classes_from(const PairTable& t, const std::vector<BraceCatalog>& cats) {
  (void)cats;
  const std::size_t m = t.size();
  UnionFind uf(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (t.at(i, j)) uf.join(i, j);
    }
  }
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> groups;
  for (std::size_t i = 0; i < m; ++i) groups[uf.find(i)].push_back({t.items[i].catalog, t.items[i].index});
  IsoclinismClasses out;
  for (auto& [root, members] : groups) out.classes.push_back(std::move(members));
  out.pairs_tested = t.tested;
  return out;
}

std::size_t gamma_ann_meet(const IsoclinismData& d) {
  std::size_t k = 0;
  for (Element g : d.gamma2.elements) k += d.annihilator.contains(g) ? 1 : 0;
  return k;
}

void run_isoclinism(TheoremVerdict& v, const std::vector<BraceCatalog>& cats, unsigned jobs) {
  const PairTable t = isoclinism_pairs(cats, jobs);
  const std::size_t m = t.size();
  auto flag = [&](std::size_t i, std::string why) {
    v.violations.push_back({t.items[i].entry->id, std::move(why), t.items[i].entry->brace});
  };
  auto name = [&](std::size_t i) {
    const CatalogId id = t.items[i].entry->id;
    return "[" + std::to_string(id.order) + "," + std::to_string(id.rank) + "]";
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (!t.at(i, i)) flag(i, "not isoclinic to itself");
    for (std::size_t j = 0; j < m; ++j) {
      const auto& w = t.at(i, j);
      if (!w) continue;
      ++v.checked;
      if (!is_isoclinism(t.data[i], t.data[j], *w)) flag(i, "witness to " + name(j) + " does not commute");
      if (!t.at(j, i)) flag(i, "isoclinic to " + name(j) + " but not conversely");
      if (t.items[i].entry->report.pb != t.items[j].entry->report.pb) {
        flag(i, "isoclinic to " + name(j) + " with different Pb");
      }
      if (gamma_ann_meet(t.data[i]) != gamma_ann_meet(t.data[j])) {
        flag(i, "isoclinic to " + name(j) + " with different |Gamma_2 ∩ Ann|");
      }
    }
  }
  const IsoclinismClasses classes = classes_from(t, cats);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> where;
  for (std::size_t i = 0; i < m; ++i) where[{t.items[i].catalog, t.items[i].index}] = i;
  std::vector<bool> stem(m);
  for (std::size_t i = 0; i < m; ++i) stem[i] = is_stem(t.items[i].entry->brace);
  const bool from_one = !cats.empty() && cats.front().order == 1;
  for (const auto& cls : classes.classes) {
    std::vector<std::size_t> idx;
    for (const auto& key : cls) idx.push_back(where.at(key));
    for (std::size_t a : idx) {
      for (std::size_t b : idx) {
        if (!t.at(a, b)) flag(a, "same class as " + name(b) + " but no direct witness (transitivity)");
      }
    }
    std::vector<Element> stem_orders;
    for (std::size_t a : idx) {
      if (stem[a]) stem_orders.push_back(t.items[a].entry->brace.order());
      for (std::size_t b : idx) {
        if (a < b && t.items[a].entry->brace.order() == t.items[b].entry->brace.order() && stem[a] != stem[b]) {
          flag(a, "same order and class as " + name(b) + " but stem status differs");
        }
      }
    }
    if (from_one && stem_orders.empty()) flag(idx.front(), "isoclinism class without a stem brace");
    if (std::adjacent_find(stem_orders.begin(), stem_orders.end(), std::not_equal_to<>()) != stem_orders.end()) {
      flag(idx.front(), "stem braces of different orders in one class");
    }
  }
  v.notes.push_back(std::to_string(classes.classes.size()) + " isoclinism classes over " + std::to_string(m) +
                    " braces; " + std::to_string(t.tested) + " ordered pairs tested");
  if (!from_one) v.notes.push_back("stem existence per class checked only when the range starts at order 1");

  // A non-trivial simple brace B forces every isoclinic A to be B × C with Pb(C) = 1.
  std::size_t simple = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const SkewBrace& b = t.items[i].entry->brace;
    if (b.order() == 1 || t.data[i].gamma2.brace.order() == 1 || ideals(b).size() != 2) continue;
    ++simple;
    for (std::size_t j = 0; j < m; ++j) {
      if (!t.at(j, i)) continue;
      const SkewBrace& a = t.items[j].entry->brace;
      const SubBrace c = induced_sub_brace(a, t.items[j].entry->report.annihilator);
      if (commuting_probability(c.brace) != 1 || brace_isomorphisms(a, direct_product(b, c.brace)).empty()) {
        flag(j, "isoclinic to simple " + name(i) + " but not a product with an annihilator factor");
      }
    }
  }
  v.notes.push_back(count_note("non-trivial simple braces", simple, m));
}

void run_cyclic(TheoremVerdict& v, Element lo, Element hi) {
  for (Element n = lo; n <= hi; ++n) {
    for (Element d = 1; d <= n; ++d) {
      if (!is_valid_cyclic_parameter(n, d)) continue;
      ++v.checked;
      const Rational f = cyclic_pb_formula(n, d);
      const Rational pb = commuting_probability(cyclic_brace(n, d));
      if (f != pb) {
        v.violations.push_back({{n, d}, "cyclic_brace(" + std::to_string(n) + "," + std::to_string(d) + "): " +
                                            rel(f, "!=", pb), std::nullopt});
      }
    }
  }
}

std::size_t count_if_items(const std::vector<Item>& items, const std::function<bool(const CatalogEntry&)>& pred) {
  std::size_t k = 0;
  for (const auto& it : items) k += pred(*it.entry) ? 1 : 0;
  return k;
}

}  // namespace

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::Vacuous: return "vacuous";
  }
  return "?";
}

VerdictStatus TheoremVerdict::status() const {
  if (!violations.empty()) return VerdictStatus::Fail;
  if (checked == 0) return VerdictStatus::Vacuous;
  return VerdictStatus::Pass;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "catalog-integrity", "gap-5/8",          "three-quarters",     "five-eighths",
      "bounds",            "monotonicity",     "prime-index",        "p-squared",
      "gamma2-class2",     "two-sided-pn",     "nilpotent-65/128",   "gamma-ann-equivalence",
      "series-structure",  "centralizer-properties", "cyclic-formula", "isoclinism-invariance",
  };
  return ids;
}

IsoclinismClasses isoclinism_classes(const std::vector<BraceCatalog>& catalogs, unsigned jobs) {
  return classes_from(isoclinism_pairs(catalogs, jobs), catalogs);
}

std::vector<TheoremVerdict> verify(const std::vector<BraceCatalog>& catalogs,
                                   const std::vector<std::string>& theorems, unsigned jobs) {
  const auto& all = theorem_ids();
  std::vector<std::string> wanted = theorems.empty() ? all : theorems;
  for (const auto& t : wanted) {
    if (std::find(all.begin(), all.end(), t) == all.end()) {
      throw BraceError(ErrorKind::ParseError, "unknown theorem id \"" + t + "\"");
    }
  }
  const Element lo = catalogs.empty() ? 1 : catalogs.front().order;
  const Element hi = catalogs.empty() ? 0 : catalogs.back().order;
  const std::vector<Item> items = flatten(catalogs);
  const std::map<std::string, BraceCheck> per_brace_checks{
      {"catalog-integrity", check_integrity},
      {"gap-5/8", check_gap},
      {"three-quarters", check_three_quarters},
      {"five-eighths", check_five_eighths},
      {"bounds", check_bounds},
      {"monotonicity", check_monotonicity},
      {"prime-index", check_prime_index},
      {"p-squared", check_p_squared},
      {"gamma2-class2", check_gamma2_class2},
      {"two-sided-pn", check_two_sided_pn},
      {"nilpotent-65/128", check_65_128},
      {"gamma-ann-equivalence", check_gamma_ann},
      {"series-structure", check_series},
      {"centralizer-properties", check_centralizers},
  };

  std::vector<TheoremVerdict> out;
  for (const auto& id : all) {
    if (std::find(wanted.begin(), wanted.end(), id) == wanted.end()) continue;
    TheoremVerdict v;
    v.theorem_id = id;
    v.scope_lo = lo;
    v.scope_hi = hi;
    if (auto it = per_brace_checks.find(id); it != per_brace_checks.end()) per_brace(v, items, jobs, it->second);

    if (id == "catalog-integrity") {
      add_pairwise_distinct(v, catalogs, jobs);
    } else if (id == "five-eighths") {
      v.notes.push_back(count_note("Klein-four quotient in both groups with Pb != 5/8",
                                   count_if_items(items, [](const CatalogEntry& e) {
                                     if (e.report.pb == Rational(5, 8) || quotient_size(e) != 4) return false;
                                     const auto q = quotient_brace(e.brace, e.report.annihilator);
                                     return is_klein(q.brace.additive()) && is_klein(q.brace.multiplicative());
                                   }),
                                   items.size()));
    } else if (id == "bounds") {
      const std::size_t proper = count_if_items(items, [](const CatalogEntry& e) {
        const auto r = bound_report(e.brace);
        const BoundCheck* c = r.find("proper-centralizer-lower");
        return c && c->applicable && r.d > 1;
      });
      v.notes.push_back(count_note("braces with d > 1 and Ann ⊊ Cb(x) for all x", proper, items.size()));
    } else if (id == "nilpotent-65/128") {
      v.notes.push_back("scope-limited: checked on catalog orders " + std::to_string(lo) + ".." +
                        std::to_string(hi) + " only, not over all quotient orders the theorem ranges over");
    } else if (id == "series-structure") {
      v.notes.push_back(count_note("braces with some B^k (k >= 3) that is not an ideal",
                                   count_if_items(items, [](const CatalogEntry& e) {
                                     return star_left_non_ideal(e.brace);
                                   }),
                                   items.size()));
    } else if (id == "centralizer-properties") {
      v.notes.push_back(count_note("braces with a Cb(x) that is not a subgroup of (B,+)",
                                   count_if_items(items, [](const CatalogEntry& e) {
                                     return has_non_additive_centralizer(e.brace);
                                   }),
                                   items.size()));
    } else if (id == "cyclic-formula") {
      run_cyclic(v, lo, hi);
    } else if (id == "isoclinism-invariance") {
      run_isoclinism(v, catalogs, jobs);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Json verdict_json(const TheoremVerdict& v) {
  Json violations = Json::array();
  for (const auto& x : v.violations) {
    Json item{{"id", Json::array({x.id.order, x.id.rank})}, {"details", x.details}};
    if (x.brace) item["brace"] = brace_json(*x.brace);
    violations.push_back(std::move(item));
  }
  Json j{{"theorem_id", v.theorem_id},
         {"scope", Json::array({v.scope_lo, v.scope_hi})},
         {"checked", v.checked},
         {"violations", std::move(violations)},
         {"status", to_string(v.status())}};
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

Json verdicts_json(const std::vector<TheoremVerdict>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(verdict_json(v));
  return arr;
}

}  // namespace bracekit
