#pragma once

#include <map>
#include <random>

#include "bracekit/enumeration.hpp"

namespace fixtures {

using namespace bracekit;

/// x∘y = x + y + 2xy on ℤ/4, built straight from the formula.
inline SkewBrace z4_example() {
  GroupTable::Rows add(4, std::vector<Element>(4)), mul(4, std::vector<Element>(4));
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) {
      add[x][y] = (x + y) % 4;
      mul[x][y] = (x + y + 2 * x * y) % 4;
    }
  }
  return SkewBrace::validate(add, mul);
}

inline GroupTable symmetric3() { return dihedral_group(6); }
inline GroupTable klein() { return abelian_group(std::vector<Element>{2, 2}); }

/// Cached holomorph catalogs.
inline const BraceCatalog& catalog(Element n) {
  static std::map<Element, BraceCatalog> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    EnumerationOptions o;
    o.cap = 15;
    it = cache.emplace(n, skew_braces_of_order(n, o)).first;
  }
  return it->second;
}

inline std::vector<const CatalogEntry*> entries_up_to(Element hi) {
  std::vector<const CatalogEntry*> out;
  for (Element n = 1; n <= hi; ++n) {
    for (const auto& e : catalog(n).entries) out.push_back(&e);
  }
  return out;
}

/// Uniform bijection of 0..n-1 fixing 0.
inline Bijection random_pointed_bijection(Element n, std::mt19937& rng) {
  Bijection f = Bijection::identity(n);
  std::shuffle(f.map.begin() + 1, f.map.end(), rng);
  return f;
}

inline SkewBrace relabel(const SkewBrace& b, const Bijection& f) {
  return SkewBrace::validate(b.additive().relabeled(f), b.multiplicative().relabeled(f));
}

}  // namespace fixtures
