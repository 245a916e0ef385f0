#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bracekit/enumeration.hpp"
#include "bracekit/json_io.hpp"

namespace bracekit {

struct Violation {
  CatalogId id;
  std::string details;
  std::optional<SkewBrace> brace;  // serialized inline in reports
};

enum class VerdictStatus { Pass, Fail, Vacuous };

const char* to_string(VerdictStatus s);

struct TheoremVerdict {
  std::string theorem_id;
  Element scope_lo = 1;
  Element scope_hi = 1;
  std::size_t checked = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;  // scope limits and observed frequencies

  VerdictStatus status() const;
};

/// Every supported theorem id, in report order.
const std::vector<std::string>& theorem_ids();

/// Runs the requested suites (all when `theorems` is empty) over catalogs of
/// consecutive orders. Throws ParseError on an unknown id.
std::vector<TheoremVerdict> verify(const std::vector<BraceCatalog>& catalogs,
                                   const std::vector<std::string>& theorems, unsigned jobs = 1);

/// Isoclinism classes over the union of the catalogs as lists of
/// (catalog index, entry index), from union-find over pairwise tests.
struct IsoclinismClasses {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> classes;
  std::size_t pairs_tested = 0;
};

IsoclinismClasses isoclinism_classes(const std::vector<BraceCatalog>& catalogs, unsigned jobs = 1);

Json verdict_json(const TheoremVerdict& v);
Json verdicts_json(const std::vector<TheoremVerdict>& vs);

}  // namespace bracekit
