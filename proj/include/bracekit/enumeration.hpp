#pragma once

#include <string>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/group.hpp"

namespace bracekit {

inline constexpr Element kDefaultOrderCap = 8;

/// BRACEKIT_CAP if set to a positive integer, otherwise kDefaultOrderCap.
Element order_cap_from_env();

/// Throws OrderCapExceeded when n > cap.
void check_order(Element n, Element cap);

struct EnumerationOptions {
  Element cap = kDefaultOrderCap;
  unsigned jobs = 1;
};

/// All groups of order n up to isomorphism, each in canonical labeling and
/// sorted by canonical table. Built from abelian invariant factors and
/// cyclic extensions of prime degree, so complete for every solvable order
/// (n < 60).
std::vector<GroupTable> groups_of_order(Element n, const EnumerationOptions& options = {});

/// Independent exhaustive Cayley-table search (rows as regular permutations),
/// deduplicated by canonical form. Intended for n <= 8.
std::vector<GroupTable> brute_force_groups(Element n, const EnumerationOptions& options = {});

/// Skew braces with additive group `a`, one per isomorphism class, in
/// canonical form and sorted. Built from regular subgroups of Hol(a).
std::vector<SkewBrace> skew_braces_on(const GroupTable& a, const EnumerationOptions& options = {});

struct CatalogId {
  Element order = 1;
  Element rank = 1;  // 1-based position in canonical order
  friend bool operator==(const CatalogId&, const CatalogId&) = default;
};

struct CatalogEntry {
  CatalogId id;
  SkewBrace brace;
  BraceReport report;
};

enum class EnumerationMethod { Holomorph, BruteForce, BruteForceMulSide };

const char* to_string(EnumerationMethod m);

struct BraceCatalog {
  Element order = 1;
  std::vector<CatalogEntry> entries;
  EnumerationMethod method = EnumerationMethod::Holomorph;
  std::string group_catalog_version;
};

inline constexpr const char* kGroupCatalogVersion = "cyclic-extension/1";

BraceCatalog skew_braces_of_order(Element n, const EnumerationOptions& options = {});

/// Additive group fixed, every multiplicative group relabeled by every
/// bijection fixing 0; no holomorph machinery. Requires n <= 8.
BraceCatalog brute_force_oracle(Element n, const EnumerationOptions& options = {});
/// Same scan with the multiplicative group fixed and additive structures relabeled.
BraceCatalog brute_force_oracle_mul_side(Element n, const EnumerationOptions& options = {});

BraceCatalog enumerate(Element n, EnumerationMethod method, const EnumerationOptions& options = {});

/// Catalogs for every order in [lo, hi].
std::vector<BraceCatalog> catalogs(Element lo, Element hi, const EnumerationOptions& options = {});

}  // namespace bracekit
