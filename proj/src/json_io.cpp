#include "bracekit/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace bracekit {

namespace {

Json rows_json(const GroupTable& g) {
  Json rows = Json::array();
  for (Element x = 0; x < g.order(); ++x) {
    Json row = Json::array();
    for (Element y = 0; y < g.order(); ++y) row.push_back(g.op(x, y));
    rows.push_back(std::move(row));
  }
  return rows;
}

[[noreturn]] void parse_error(const std::string& what) { throw BraceError(ErrorKind::ParseError, what); }

GroupTable::Rows rows_from_json(const Json& j, const char* field, std::size_t n) {
  if (!j.contains(field) || !j[field].is_array()) parse_error(std::string("missing array field \"") + field + "\"");
  const Json& arr = j[field];
  if (arr.size() != n) parse_error(std::string("\"") + field + "\" must have n rows");
  GroupTable::Rows rows;
  for (const Json& row : arr) {
    if (!row.is_array()) parse_error(std::string("\"") + field + "\" rows must be arrays");
    std::vector<Element> r;
    for (const Json& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        parse_error(std::string("\"") + field + "\" entries must be non-negative integers");
      }
      const auto x = v.get<unsigned long long>();
      if (x >= n) {
        throw BraceError(ErrorKind::IndexOutOfRange,
                         std::string("\"") + field + "\" entry " + std::to_string(x) + " out of range");
      }
      r.push_back(static_cast<Element>(x));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::size_t order_from_json(const Json& j) {
  if (!j.is_object()) parse_error("expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
    parse_error("field \"n\" must be a positive integer");
  }
  return j["n"].get<std::size_t>();
}

Json series_json(const std::vector<ElementSet>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(element_set_json(t));
  return out;
}

}  // namespace

Json rational_json(const Rational& r) {
  return Json{{"num", numerator_string(r)}, {"den", denominator_string(r)}};
}

Json element_set_json(const ElementSet& s) { return Json(s.members()); }

Json group_json(const GroupTable& g) { return Json{{"n", g.order()}, {"op", rows_json(g)}}; }

Json brace_json(const SkewBrace& b) {
  return Json{{"n", b.order()}, {"add", rows_json(b.additive())}, {"mul", rows_json(b.multiplicative())}};
}

GroupTable group_from_json(const Json& j) {
  const std::size_t n = order_from_json(j);
  return GroupTable::validate(rows_from_json(j, "op", n));
}

SkewBrace brace_from_json(const Json& j) {
  const std::size_t n = order_from_json(j);
  return SkewBrace::validate(rows_from_json(j, "add", n), rows_from_json(j, "mul", n));
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(e.what());
  }
}

SkewBrace read_brace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return brace_from_json(parse_json_text(ss.str()));
}

Json brace_report_json(const BraceReport& r) {
  Json j;
  j["ker_lambda"] = element_set_json(r.ker_lambda);
  j["socle"] = element_set_json(r.socle);
  j["annihilator"] = element_set_json(r.annihilator);
  j["flags"] = Json{{"trivial", r.flags.trivial},
                    {"two_sided", r.flags.two_sided},
                    {"symmetric", r.flags.symmetric},
                    {"lambda_homomorphic", r.flags.lambda_homomorphic}};
  j["nilpotency_class"] = r.nilpotency_class ? Json(*r.nilpotency_class) : Json(nullptr);
  j["pb"] = rational_json(r.pb);
  return j;
}

Json bound_report_json(const BoundReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json item{{"name", c.name}, {"applicable", c.applicable}};
    if (c.applicable) {
      item["holds"] = c.holds;
      item["lhs"] = rational_json(c.lhs);
      item["relation"] = c.relation;
      item["rhs"] = rational_json(c.rhs);
    }
    checks.push_back(std::move(item));
  }
  return Json{{"order", r.order}, {"d", r.d}, {"pb", rational_json(r.pb)}, {"all_hold", r.all_hold()},
              {"checks", std::move(checks)}};
}

Json witness_json(const IsoclinismWitness& w) { return Json{{"xi", w.xi.map}, {"theta", w.theta.map}}; }

Json analysis_json(const SkewBrace& b) {
  const BraceReport report = brace_report(b);
  const BoundReport bounds = bound_report(b);
  Json j;
  j["n"] = b.order();
  j["report"] = brace_report_json(report);
  j["pb"] = to_string(report.pb);
  j["d"] = bounds.d;
  j["nilpotency_class"] = report.nilpotency_class ? Json(*report.nilpotency_class) : Json(nullptr);
  try {
    j["gap_class"] = to_string(gap_classify(b));
  } catch (const BraceError& e) {
    j["gap_class"] = nullptr;
    j["gap_error"] = e.what();
  }
  Json cb = Json::array();
  for (Element x = 0; x < b.order(); ++x) cb.push_back(element_set_json(brace_centralizer(b, x)));
  j["centralizers"] = std::move(cb);
  j["series"] = Json{{"ann", series_json(series(b, SeriesKind::Ann))},
                     {"gamma", series_json(series(b, SeriesKind::Gamma))},
                     {"star_left", series_json(series(b, SeriesKind::StarLeft))},
                     {"star_right", series_json(series(b, SeriesKind::StarRight))}};
  j["stem"] = is_stem(b);
  j["bounds"] = bound_report_json(bounds);
  return j;
}

std::string catalog_line(const CatalogEntry& e) {
  Json j;
  j["id"] = Json::array({e.id.order, e.id.rank});
  j["add"] = rows_json(e.brace.additive());
  j["mul"] = rows_json(e.brace.multiplicative());
  j["report"] = brace_report_json(e.report);
  return j.dump();
}

std::string catalog_jsonl(const BraceCatalog& c) {
  std::string out;
  for (const auto& e : c.entries) {
    out += catalog_line(e);
    out += '\n';
  }
  return out;
}

std::vector<CatalogEntry> read_catalog_jsonl(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Json j = parse_json_text(line);
    if (!j.contains("id") || !j["id"].is_array() || j["id"].size() != 2) parse_error("catalog line needs \"id\": [n, k]");
    const auto n = j["id"][0].get<Element>();
    Json brace{{"n", n}, {"add", j.value("add", Json())}, {"mul", j.value("mul", Json())}};
    CatalogEntry e;
    e.id = {n, j["id"][1].get<Element>()};
    e.brace = brace_from_json(brace);
    e.report = brace_report(e.brace);
    out.push_back(std::move(e));
  }
  return out;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return os.str();
}

Json catalog_manifest(const BraceCatalog& c, const std::string& jsonl, Element cap) {
  return Json{{"order", c.order},
              {"method", to_string(c.method)},
              {"group_catalog_version", c.group_catalog_version},
              {"cap", cap},
              {"count", c.entries.size()},
              {"sha256", sha256_hex(jsonl)}};
}

}  // namespace bracekit
