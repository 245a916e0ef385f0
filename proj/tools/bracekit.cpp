#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bracekit/verify.hpp"

using namespace bracekit;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

std::pair<Element, Element> parse_orders(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto n = static_cast<Element>(std::stoul(s));
      return {n, n};
    }
    return {static_cast<Element>(std::stoul(s.substr(0, dots))), static_cast<Element>(std::stoul(s.substr(dots + 2)))};
  } catch (const std::exception&) {
    throw BraceError(ErrorKind::ParseError, "--orders expects A..B, got \"" + s + "\"");
  }
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

EnumerationMethod parse_method(const std::string& m) {
  if (m == "holomorph") return EnumerationMethod::Holomorph;
  if (m == "brute") return EnumerationMethod::BruteForce;
  throw BraceError(ErrorKind::ParseError, "--method must be holomorph or brute");
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew brace toolkit: invariants, catalogs and theorem checks"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned cap_flag = 0;
  unsigned jobs = 1;
  app.add_option("--cap", cap_flag, "Largest order to enumerate (overrides BRACEKIT_CAP)");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string path;
  auto* validate_cmd = app.add_subcommand("validate", "Check that a brace file satisfies the axioms");
  validate_cmd->add_option("path", path, "Brace JSON file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Print every invariant of a brace");
  analyze_cmd->add_option("path", path, "Brace JSON file")->required();

  unsigned order = 1;
  std::string method = "holomorph";
  std::string out_path;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Write the catalog of braces of one order");
  enumerate_cmd->add_option("n", order, "Order")->required();
  enumerate_cmd->add_option("--method", method, "holomorph or brute");
  enumerate_cmd->add_option("--out", out_path, "JSON-lines output (manifest written alongside)");

  std::string path_b;
  auto* isoclinic_cmd = app.add_subcommand("isoclinic", "Search for an isoclinism between two braces");
  isoclinic_cmd->add_option("a", path, "First brace JSON file")->required();
  isoclinic_cmd->add_option("b", path_b, "Second brace JSON file")->required();

  std::string orders = "1..8";
  std::string theorems;
  auto* verify_cmd = app.add_subcommand("verify", "Check the theorem suites over the catalog");
  verify_cmd->add_option("--orders", orders, "Order range A..B");
  verify_cmd->add_option("--theorems", theorems, "Comma-separated theorem ids (default: all)");
  verify_cmd->add_option("--method", method, "holomorph or brute");
  verify_cmd->add_option("--out", out_path, "Also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  EnumerationOptions options;
  options.cap = cap_flag > 0 ? cap_flag : order_cap_from_env();
  options.jobs = jobs;

  try {
    if (*validate_cmd) {
      const SkewBrace b = read_brace_file(path);
      const StructureFlags f = structure_flags(b);
      print(Json{{"valid", true},
                 {"n", b.order()},
                 {"flags",
                  {{"trivial", f.trivial}, {"two_sided", f.two_sided}, {"symmetric", f.symmetric},
                   {"lambda_homomorphic", f.lambda_homomorphic}}}});
      return 0;
    }
    if (*analyze_cmd) {
      print(analysis_json(read_brace_file(path)));
      return 0;
    }
    if (*enumerate_cmd) {
      const BraceCatalog cat = enumerate(order, parse_method(method), options);
      const std::string jsonl = catalog_jsonl(cat);
      const Json manifest = catalog_manifest(cat, jsonl, options.cap);
      if (out_path.empty()) {
        std::cout << jsonl;
      } else {
        std::ofstream(out_path, std::ios::binary) << jsonl;
        std::ofstream(out_path + ".manifest.json", std::ios::binary) << manifest.dump(2) << '\n';
        print(manifest);
      }
      return 0;
    }
    if (*isoclinic_cmd) {
      const auto w = are_isoclinic(read_brace_file(path), read_brace_file(path_b));
      if (w) {
        print(witness_json(*w));
      } else {
        std::cout << "none\n";
      }
      return 0;
    }
    if (*verify_cmd) {
      const auto [lo, hi] = parse_orders(orders);
      if (lo < 1 || hi < lo) throw BraceError(ErrorKind::ParseError, "empty order range " + orders);
      const EnumerationMethod m = parse_method(method);
      for (Element n = lo; n <= hi; ++n) check_order(n, options.cap);
      std::vector<BraceCatalog> cats;
      for (Element n = lo; n <= hi; ++n) cats.push_back(enumerate(n, m, options));
      const auto verdicts = verify(cats, split_csv(theorems), options.jobs);
      const Json report = verdicts_json(verdicts);
      print(report);
      if (!out_path.empty()) std::ofstream(out_path, std::ios::binary) << report.dump(2) << '\n';
      for (const auto& v : verdicts) {
        if (v.status() == VerdictStatus::Fail) return kExitViolation;
      }
      return 0;
    }
  } catch (const BraceError& e) {
    if (*validate_cmd && e.kind() != ErrorKind::ParseError) {
      print(Json{{"valid", false}, {"error", to_string(e.kind())}, {"message", e.what()}});
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return kExitInput;
  }
  return 0;
}
