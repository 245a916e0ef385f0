#include "bracekit/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "bracekit/parallel.hpp"
#include "bracekit/probability.hpp"

namespace bracekit {

namespace {

// Above this the generator would miss non-solvable groups (order 60 is the
// first); the construction is only complete for solvable orders.
constexpr Element kSolvableLimit = 60;
constexpr Element kBruteForceLimit = 8;

using TableKey = std::vector<Element>;
using BraceKey = std::pair<std::vector<Element>, std::vector<Element>>;

BraceKey key_of(const SkewBrace& b) { return {b.additive().flat(), b.multiplicative().flat()}; }

std::vector<std::vector<Element>> partitions(Element e, Element max_part) {
  if (e == 0) return {{}};
  std::vector<std::vector<Element>> out;
  for (Element k = std::min(e, max_part); k >= 1; --k) {
    for (auto rest : partitions(e - k, k)) {
      rest.insert(rest.begin(), k);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

std::vector<GroupTable> abelian_groups(Element n) {
  std::vector<std::vector<Element>> factor_lists{{}};
  Element m = n;
  for (Element p : prime_divisors(n)) {
    Element e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    std::vector<std::vector<Element>> next;
    for (const auto& prefix : factor_lists) {
      for (const auto& part : partitions(e, e)) {
        auto lst = prefix;
        for (Element k : part) {
          Element q = 1;
          for (Element i = 0; i < k; ++i) q *= p;
          lst.push_back(q);
        }
        next.push_back(std::move(lst));
      }
    }
    factor_lists = std::move(next);
  }
  std::vector<GroupTable> out;
  for (const auto& f : factor_lists) out.push_back(abelian_group(f));
  return out;
}

// G = <N, g> with N normal of prime index p, g x g⁻¹ = φ(x), gᵖ = a.
// Element x·gⁱ is stored as x + |N|·i.
std::vector<GroupTable> cyclic_extensions(const GroupTable& base, Element p) {
  const Element m = base.order();
  const Element n = m * p;
  std::vector<GroupTable> out;
  for (const Bijection& phi : automorphism_group(base)) {
    std::vector<Bijection> powers{Bijection::identity(m)};
    for (Element i = 1; i <= p; ++i) powers.push_back(phi.after(powers.back()));
    for (Element a = 0; a < m; ++a) {
      if (phi(a) != a) continue;
      bool ok = true;
      for (Element x = 0; x < m && ok; ++x) {
        ok = powers[p](x) == base.op(base.op(a, x), base.inv(a));
      }
      if (!ok) continue;
      std::vector<Element> flat(std::size_t{n} * n);
      for (Element i = 0; i < p; ++i) {
        for (Element x = 0; x < m; ++x) {
          for (Element j = 0; j < p; ++j) {
            for (Element y = 0; y < m; ++y) {
              Element z = base.op(x, powers[i](y));
              Element k = i + j;
              if (k >= p) {
                z = base.op(z, a);
                k -= p;
              }
              flat[std::size_t{x + m * i} * n + y + m * j] = z + m * k;
            }
          }
        }
      }
      out.push_back(GroupTable::validate(n, std::move(flat)));
    }
  }
  return out;
}

std::vector<GroupTable> dedup_sorted(const std::vector<GroupTable>& tables) {
  std::map<TableKey, GroupTable> seen;
  for (const GroupTable& t : tables) {
    GroupTable c = canonical_form(t).table;
    TableKey key = c.flat();
    seen.try_emplace(std::move(key), std::move(c));
  }
  std::vector<GroupTable> out;
  for (auto& [key, t] : seen) out.push_back(std::move(t));
  return out;
}

std::vector<GroupTable> generate_groups(Element n, std::map<Element, std::vector<GroupTable>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<GroupTable> candidates;
  if (n == 1) {
    candidates.push_back(trivial_group());
  } else {
    candidates = abelian_groups(n);
    for (Element p : prime_divisors(n)) {
      for (const GroupTable& base : generate_groups(n / p, memo)) {
        for (auto& g : cyclic_extensions(base, p)) candidates.push_back(std::move(g));
      }
    }
  }
  auto out = dedup_sorted(candidates);
  memo[n] = out;
  return out;
}

// --- brute-force group search -------------------------------------------

struct RowSearch {
  Element n;
  std::vector<std::optional<Bijection>> rows;
  std::vector<GroupTable> found;

  // Adds every product row forced by the known rows; false on conflict.
  bool close(std::vector<Element>& known) {
    for (std::size_t i = 0; i < known.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
          const Element a = pass == 0 ? known[i] : known[j];
          const Element b = pass == 0 ? known[j] : known[i];
          Bijection prod = rows[a]->after(*rows[b]);
          const Element c = prod(0);
          if (rows[c]) {
            if (*rows[c] != prod) return false;
            continue;
          }
          for (Element k : known) {
            for (Element y = 0; y < n; ++y) {
              if ((*rows[k])(y) == prod(y)) return false;
            }
          }
          rows[c] = std::move(prod);
          known.push_back(c);
        }
      }
    }
    return true;
  }

  void candidates(Element c, const std::vector<Element>& known, std::vector<Element>& perm,
                  std::vector<char>& used, Element y, std::vector<Bijection>& out) {
    if (y == n) {
      out.push_back(Bijection{perm});
      return;
    }
    for (Element v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool clash = false;
      for (Element k : known) clash = clash || (*rows[k])(y) == v;
      if (clash) continue;
      used[v] = 1;
      perm[y] = v;
      candidates(c, known, perm, used, y + 1, out);
      used[v] = 0;
    }
  }

  void search(const std::vector<Element>& known) {
    Element c = 0;
    while (c < n && rows[c]) ++c;
    if (c == n) {
      std::vector<Element> flat(std::size_t{n} * n);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) flat[std::size_t{a} * n + b] = (*rows[a])(b);
      }
      found.push_back(GroupTable::validate(n, std::move(flat)));
      return;
    }
    std::vector<Element> perm(n);
    std::vector<char> used(n, 0);
    perm[0] = c;
    used[c] = 1;
    std::vector<Bijection> options;
    candidates(c, known, perm, used, 1, options);
    for (auto& pi : options) {
      auto saved = rows;
      auto next_known = known;
      rows[c] = std::move(pi);
      next_known.push_back(c);
      if (close(next_known)) search(next_known);
      rows = std::move(saved);
    }
  }
};

// --- braces -------------------------------------------------------------

std::vector<SkewBrace> sorted_unique(std::map<BraceKey, SkewBrace>& seen) {
  std::vector<SkewBrace> out;
  out.reserve(seen.size());
  for (auto& [key, b] : seen) out.push_back(std::move(b));
  return out;
}

GroupTable transported(const GroupTable& g, const std::vector<Element>& sigma,
                       const std::vector<Element>& sigma_inv) {
  const Element n = g.order();
  std::vector<Element> flat(std::size_t{n} * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      flat[std::size_t{x} * n + y] = sigma_inv[g.op(sigma[x], sigma[y])];
    }
  }
  return GroupTable::validate(n, std::move(flat));
}

bool distributive(const GroupTable& add, const std::vector<Element>& mul_flat) {
  const Element n = add.order();
  auto circ = [&](Element a, Element b) { return mul_flat[std::size_t{a} * n + b]; };
  for (Element a = 1; a < n; ++a) {
    const Element neg_a = add.inv(a);
    for (Element b = 1; b < n; ++b) {
      const Element ab = circ(a, b);
      for (Element c = 1; c < n; ++c) {
        if (circ(a, add.op(b, c)) != add.op(add.op(ab, neg_a), circ(a, c))) return false;
      }
    }
  }
  return true;
}

// Every bijection fixing 0, as (sigma, sigma⁻¹) pairs, visited in lexicographic order.
template <class Fn>
void for_each_pointed_bijection(Element n, Fn&& fn) {
  std::vector<Element> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Element> inv(n);
  do {
    for (Element i = 0; i < n; ++i) inv[sigma[i]] = i;
    fn(sigma, inv);
  } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
}

BraceCatalog finish_catalog(Element n, std::vector<SkewBrace> braces, EnumerationMethod method,
                            const EnumerationOptions& options) {
  std::sort(braces.begin(), braces.end(),
            [](const SkewBrace& x, const SkewBrace& y) { return key_of(x) < key_of(y); });
  BraceCatalog cat;
  cat.order = n;
  cat.method = method;
  cat.group_catalog_version = kGroupCatalogVersion;
  cat.entries.resize(braces.size());
  parallel_for(options.jobs, braces.size(), [&](std::size_t i) {
    cat.entries[i].id = {n, static_cast<Element>(i + 1)};
    cat.entries[i].report = brace_report(braces[i]);
    cat.entries[i].brace = std::move(braces[i]);
  });
  return cat;
}

void check_brute_force(Element n, const EnumerationOptions& options) {
  check_order(n, options.cap);
  if (n > kBruteForceLimit) {
    throw BraceError(ErrorKind::OrderCapExceeded,
                     "brute-force oracle supports n <= " + std::to_string(kBruteForceLimit) +
                         ", got " + std::to_string(n));
  }
}

}  // namespace

Element order_cap_from_env() {
  if (const char* env = std::getenv("BRACEKIT_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < kNoElement) return static_cast<Element>(v);
  }
  return kDefaultOrderCap;
}

void check_order(Element n, Element cap) {
  if (n == 0) throw BraceError(ErrorKind::OrderCapExceeded, "order must be positive");
  if (n > cap) {
    throw BraceError(ErrorKind::OrderCapExceeded,
                     "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  if (n >= kSolvableLimit) {
    throw BraceError(ErrorKind::OrderCapExceeded,
                     "group generator is complete only below order " + std::to_string(kSolvableLimit));
  }
}

const char* to_string(EnumerationMethod m) {
  switch (m) {
    case EnumerationMethod::Holomorph: return "holomorph";
    case EnumerationMethod::BruteForce: return "brute_force";
    case EnumerationMethod::BruteForceMulSide: return "brute_force_mul_side";
  }
  return "unknown";
}

std::vector<GroupTable> groups_of_order(Element n, const EnumerationOptions& options) {
  check_order(n, options.cap);
  static std::mutex memo_mutex;
  static std::map<Element, std::vector<GroupTable>> memo;
  std::lock_guard lock(memo_mutex);
  return generate_groups(n, memo);
}

std::vector<GroupTable> brute_force_groups(Element n, const EnumerationOptions& options) {
  check_brute_force(n, options);
  RowSearch s{n, std::vector<std::optional<Bijection>>(n), {}};
  s.rows[0] = Bijection::identity(n);
  s.search({0});
  return dedup_sorted(s.found);
}

std::vector<SkewBrace> skew_braces_on(const GroupTable& a, const EnumerationOptions& options) {
  check_order(a.order(), options.cap);
  const Element n = a.order();
  const Holomorph hol = holomorph(a);
  std::map<BraceKey, SkewBrace> seen;
  for (const ElementSet& r : regular_subgroups(hol)) {
    // r_x is the unique member sending 0 to x; x∘y = r_x(y).
    std::vector<Element> mover(n, kNoElement);
    for (Element k : r) mover[hol.moves_identity_to(k)] = k;
    std::vector<Element> flat(std::size_t{n} * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) flat[std::size_t{x} * n + y] = hol.action[mover[x]](y);
    }
    SkewBrace b = SkewBrace::validate(a, GroupTable::validate(n, std::move(flat)));
    SkewBrace c = canonical_form(b, hol.automorphisms).brace;
    BraceKey key = key_of(c);
    seen.try_emplace(std::move(key), std::move(c));
  }
  return sorted_unique(seen);
}

BraceCatalog skew_braces_of_order(Element n, const EnumerationOptions& options) {
  const auto groups = groups_of_order(n, options);
  std::vector<std::vector<SkewBrace>> per_group(groups.size());
  parallel_for(options.jobs, groups.size(),
               [&](std::size_t i) { per_group[i] = skew_braces_on(groups[i], options); });
  std::map<BraceKey, SkewBrace> seen;
  for (auto& list : per_group) {
    for (auto& b : list) {
      BraceKey key = key_of(b);
      seen.try_emplace(std::move(key), std::move(b));
    }
  }
  return finish_catalog(n, sorted_unique(seen), EnumerationMethod::Holomorph, options);
}

BraceCatalog brute_force_oracle(Element n, const EnumerationOptions& options) {
  check_brute_force(n, options);
  const auto groups = brute_force_groups(n, options);
  std::vector<std::map<BraceKey, SkewBrace>> per_add(groups.size());
  parallel_for(options.jobs, groups.size(), [&](std::size_t i) {
    const GroupTable& add = groups[i];
    const auto auts = automorphism_group(add);
    std::set<std::vector<Element>> tried;
    for (const GroupTable& m : groups) {
      for_each_pointed_bijection(n, [&](const std::vector<Element>& sigma, const std::vector<Element>& inv) {
        std::vector<Element> flat(std::size_t{n} * n);
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) flat[std::size_t{x} * n + y] = inv[m.op(sigma[x], sigma[y])];
        }
        if (!tried.insert(flat).second || !distributive(add, flat)) return;
        SkewBrace b = SkewBrace::validate(add, GroupTable::validate(n, std::move(flat)));
        SkewBrace c = canonical_form(b, auts).brace;
        BraceKey key = key_of(c);
        per_add[i].try_emplace(std::move(key), std::move(c));
      });
    }
  });
  std::map<BraceKey, SkewBrace> seen;
  for (auto& m : per_add) seen.merge(m);
  return finish_catalog(n, sorted_unique(seen), EnumerationMethod::BruteForce, options);
}

BraceCatalog brute_force_oracle_mul_side(Element n, const EnumerationOptions& options) {
  check_brute_force(n, options);
  const auto groups = brute_force_groups(n, options);
  std::vector<std::vector<Bijection>> auts(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) auts[i] = automorphism_group(groups[i]);
  std::vector<std::map<BraceKey, SkewBrace>> per_mul(groups.size());
  parallel_for(options.jobs, groups.size(), [&](std::size_t i) {
    const GroupTable& mul = groups[i];
    for (std::size_t j = 0; j < groups.size(); ++j) {
      std::set<std::vector<Element>> tried;
      for_each_pointed_bijection(n, [&](const std::vector<Element>& sigma, const std::vector<Element>& inv) {
        GroupTable add = transported(groups[j], sigma, inv);
        if (!tried.insert(add.flat()).second || !distributive(add, mul.flat())) return;
        // Aut of the transported table is σ⁻¹ Aut(A) σ.
        std::vector<Bijection> conj;
        conj.reserve(auts[j].size());
        const Bijection s{sigma};
        const Bijection s_inv{inv};
        for (const Bijection& alpha : auts[j]) conj.push_back(s_inv.after(alpha.after(s)));
        SkewBrace b = SkewBrace::validate(std::move(add), mul);
        SkewBrace c = canonical_form(b, conj).brace;
        BraceKey key = key_of(c);
        per_mul[i].try_emplace(std::move(key), std::move(c));
      });
    }
  });
  std::map<BraceKey, SkewBrace> seen;
  for (auto& m : per_mul) seen.merge(m);
  return finish_catalog(n, sorted_unique(seen), EnumerationMethod::BruteForceMulSide, options);
}

BraceCatalog enumerate(Element n, EnumerationMethod method, const EnumerationOptions& options) {
  switch (method) {
    case EnumerationMethod::Holomorph: return skew_braces_of_order(n, options);
    case EnumerationMethod::BruteForce: return brute_force_oracle(n, options);
    case EnumerationMethod::BruteForceMulSide: return brute_force_oracle_mul_side(n, options);
  }
  return skew_braces_of_order(n, options);
}

std::vector<BraceCatalog> catalogs(Element lo, Element hi, const EnumerationOptions& options) {
  std::vector<BraceCatalog> out;
  for (Element n = lo; n <= hi; ++n) out.push_back(skew_braces_of_order(n, options));
  return out;
}

}  // namespace bracekit
