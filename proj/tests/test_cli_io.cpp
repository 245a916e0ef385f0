#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bracekit/json_io.hpp"
#include "fixtures.hpp"

using namespace bracekit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BRACEKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, pipe)) out.append(buf, k);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("bracekit_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const BraceError& e) {
    return e.kind();
  }
  FAIL("expected a BraceError");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("rationals serialize as strings") {
  CHECK(rational_json(Rational(6, 8)).dump() == R"({"num":"3","den":"4"})");
  CHECK(to_string(Rational(1)) == "1/1");
  CHECK(to_string(Rational(-2, 6)) == "-1/3");
}

TEST_CASE("group and brace JSON round trips") {
  const GroupTable q8 = quaternion_group();
  CHECK(group_from_json(group_json(q8)) == q8);
  const SkewBrace b = fixtures::z4_example();
  const Json j = brace_json(b);
  CHECK(j["n"] == 4);
  CHECK(j["mul"][1][1] == 0);
  CHECK(brace_from_json(j) == b);
  CHECK(brace_from_json(parse_json_text(j.dump())) == b);
}

TEST_CASE("malformed documents") {
  CHECK(error_kind_of([] { parse_json_text("{nope"); }) == ErrorKind::ParseError);
  CHECK(error_kind_of([] { brace_from_json(Json::array()); }) == ErrorKind::ParseError);
  CHECK(error_kind_of([] { brace_from_json(parse_json_text(R"({"n": 2, "add": [[0,1],[1,0]]})")); }) ==
        ErrorKind::ParseError);
  CHECK(error_kind_of([] { group_from_json(parse_json_text(R"({"n": 2, "op": [[0,"x"],[1,0]]})")); }) ==
        ErrorKind::ParseError);
  CHECK(error_kind_of([] { group_from_json(parse_json_text(R"({"n": 2, "op": [[0,2],[1,0]]})")); }) ==
        ErrorKind::IndexOutOfRange);
  CHECK(error_kind_of([] { group_from_json(parse_json_text(R"({"n": 2, "op": [[0,1],[1,1]]})")); }) ==
        ErrorKind::NotLatinSquare);
  CHECK(error_kind_of([] { read_brace_file("/nonexistent/brace.json"); }) == ErrorKind::ParseError);
}

TEST_CASE("report JSON shapes") {
  const SkewBrace b = opposite_brace(quaternion_group());
  const Json r = brace_report_json(brace_report(b));
  CHECK(r["pb"] == Json{{"num", "5"}, {"den", "8"}});
  CHECK(r["annihilator"] == Json::array({0, 1}));
  const Json bounds = bound_report_json(bound_report(b));
  CHECK(bounds["d"] == 4);
  CHECK(bounds["all_hold"] == true);
  for (const auto& c : bounds["checks"]) {
    if (c["applicable"] == true) CHECK(c["lhs"].contains("num"));
  }
  const IsoclinismWitness w{Bijection::identity(2), Bijection{{0, 1, 2}}};
  CHECK(witness_json(w).dump() == R"({"xi":[0,1],"theta":[0,1,2]})");
}

TEST_CASE("catalog lines and manifest") {
  const BraceCatalog& c = fixtures::catalog(4);
  const std::string line = catalog_line(c.entries.front());
  const Json j = parse_json_text(line);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"id", "add", "mul", "report"});
  CHECK(j["id"] == Json::array({4, 1}));

  std::istringstream in(catalog_jsonl(c));
  const auto back = read_catalog_jsonl(in);
  REQUIRE(back.size() == c.entries.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].brace == c.entries[i].brace);
    CHECK(back[i].id == c.entries[i].id);
  }

  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const std::string jsonl = catalog_jsonl(c);
  const Json m = catalog_manifest(c, jsonl, 8);
  CHECK(m["count"] == 4);
  CHECK(m["method"] == "holomorph");
  CHECK(m["sha256"] == sha256_hex(jsonl));
}

TEST_CASE("cli analyze and validate") {
  const std::string z4 = write_file("z4.json", brace_json(fixtures::z4_example()).dump());
  const Run a = run("analyze " + z4);
  REQUIRE(a.status == 0);
  const Json rep = parse_json_text(a.out);
  CHECK(rep["pb"] == "3/4");
  CHECK(rep["d"] == 2);
  CHECK(rep["nilpotency_class"] == 2);
  CHECK(rep["gap_class"] == "THREE_QUARTERS");

  CHECK(run("validate " + z4).status == 0);
  // ℤ₄ with 1 and 2 swapped in ∘ is not distributive over ℤ₄.
  const GroupTable z = cyclic_group(4);
  const GroupTable swapped = z.relabeled(Bijection{{0, 2, 1, 3}});
  CHECK_THROWS_AS(SkewBrace::validate(z, swapped), BraceError);
  Json bad = brace_json(fixtures::z4_example());
  bad["mul"] = group_json(swapped)["op"];
  const Run v = run("validate " + write_file("bad.json", bad.dump()));
  CHECK(v.status == 2);
  CHECK(run("validate " + write_file("junk.json", "{not json")).status == 2);
  CHECK(run("analyze /nonexistent.json").status == 2);
}

TEST_CASE("cli enumerate and cap handling") {
  const Run one = run("enumerate 1");
  REQUIRE(one.status == 0);
  CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 1);
  CHECK(run("enumerate 9").status == 2);
  CHECK(run("--cap 9 enumerate 9").status == 0);
  const Run env = run("enumerate 9 --method holomorph");
  CHECK(env.status == 2);
  const std::string cmd = "env BRACEKIT_CAP=9 " + std::string(BRACEKIT_CLI) + " enumerate 9 > /dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);

  const fs::path out = scratch() / "c8.jsonl";
  REQUIRE(run("enumerate 8 --out " + out.string()).status == 0);
  const std::string holo = slurp(out);
  const Json manifest = parse_json_text(slurp(out.string() + ".manifest.json"));
  CHECK(manifest["count"] == 47);
  CHECK(manifest["sha256"] == sha256_hex(holo));
  REQUIRE(run("enumerate 8 --method brute --out " + out.string()).status == 0);
  CHECK(slurp(out) == holo);
  CHECK(run("enumerate 4 --method nonsense").status == 2);
  CHECK(run("enumerate").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("cli isoclinic") {
  const std::string z4 = write_file("z4i.json", brace_json(fixtures::z4_example()).dump());
  const std::string z2 = write_file("z2.json", brace_json(trivial_brace(cyclic_group(2))).dump());
  const Run same = run("isoclinic " + z4 + " " + z4);
  REQUIRE(same.status == 0);
  CHECK(parse_json_text(same.out) == Json{{"xi", {0, 1}}, {"theta", {0, 1}}});
  const Run none = run("isoclinic " + z2 + " " + z4);
  CHECK(none.status == 0);
  CHECK(none.out == "none\n");
}

TEST_CASE("cli verify") {
  const Run gap = run("verify --orders 1..8 --theorems gap-5/8");
  REQUIRE(gap.status == 0);
  const Json v = parse_json_text(gap.out);
  REQUIRE(v.size() == 1);
  CHECK(v[0]["theorem_id"] == "gap-5/8");
  CHECK(v[0]["status"] == "pass");
  CHECK(v[0]["checked"] == 62);
  CHECK(v[0]["violations"].empty());
  CHECK(v[0]["scope"] == Json::array({1, 8}));

  const Run all = run("verify --orders 1..8");
  CHECK(all.status == 0);
  CHECK(run("verify --orders 1..8").out == all.out);
  CHECK(parse_json_text(all.out).size() == 16);
  CHECK(run("verify --orders 1..8 --jobs 2").out == all.out);

  CHECK(run("verify --orders 1..8 --theorems no-such-theorem").status == 2);
  CHECK(run("verify --orders 1..9").status == 2);
  CHECK(run("verify --orders 8..1").status == 2);
  CHECK(run("verify --orders x..y").status == 2);
}
