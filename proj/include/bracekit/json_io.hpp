#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bracekit/brace.hpp"
#include "bracekit/enumeration.hpp"
#include "bracekit/isoclinism.hpp"
#include "bracekit/probability.hpp"

namespace bracekit {

using Json = nlohmann::ordered_json;

/// {"num": "3", "den": "4"}
Json rational_json(const Rational& r);
Json element_set_json(const ElementSet& s);

/// {"n": int, "op": [[int]]}
Json group_json(const GroupTable& g);
/// {"n": int, "add": [[int]], "mul": [[int]]}
Json brace_json(const SkewBrace& b);

/// Malformed documents raise ParseError; structural failures raise the
/// validator's error kind.
GroupTable group_from_json(const Json& j);
SkewBrace brace_from_json(const Json& j);
SkewBrace read_brace_file(const std::string& path);
Json parse_json_text(const std::string& text);

Json brace_report_json(const BraceReport& r);
Json bound_report_json(const BoundReport& r);
/// {"xi": [int], "theta": [int]}
Json witness_json(const IsoclinismWitness& w);

/// Everything `analyze` prints: report, d, bounds, gap class, series.
Json analysis_json(const SkewBrace& b);

/// One JSON-lines record: {"id": [n, k], "add", "mul", "report"}.
std::string catalog_line(const CatalogEntry& e);
/// Concatenated records, newline-terminated, in id order.
std::string catalog_jsonl(const BraceCatalog& c);
std::vector<CatalogEntry> read_catalog_jsonl(std::istream& in);

std::string sha256_hex(const std::string& data);
/// {"order", "method", "group_catalog_version", "cap", "count", "sha256"}
Json catalog_manifest(const BraceCatalog& c, const std::string& jsonl, Element cap);

}  // namespace bracekit
