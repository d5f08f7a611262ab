#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mvalg/corpus.hpp"
#include "mvalg/error.hpp"
#include "mvalg/io.hpp"
#include "support.hpp"

using namespace mvalg;
using namespace testsupport;

namespace {

const char* kQ2 = R"({
  "kind": "multiring",
  "name": "q2",
  "provenance": "sign multifield",
  "elements": ["0","1","-1"],
  "zero": "0",
  "one": "1",
  "neg": {"0": "0", "1": "-1", "-1": "1"},
  "add": [
    [["0"],["1"],["-1"]],
    [["1"],["1"],["0","1","-1"]],
    [["-1"],["0","1","-1"],["-1"]]
  ],
  "mul": [["0","0","0"],["0","1","-1"],["0","-1","1"]]
})";

std::string replaced(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

std::string error_of(const std::string& text) {
  try {
    parse_structure(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parsing the sign multifield") {
  const StructureFile f = parse_structure(kQ2);
  CHECK(f.name == "q2");
  CHECK(kind_name(f.value) == "multiring");
  const auto& r = std::get<FiniteMultiring>(f.value);
  CHECK(isomorphic(r, corpus::q2()));
  CHECK(r.carrier() == corpus::q2().carrier());
  CHECK(r.add(1, 2) == ElementSet::full(3));
}

TEST_CASE("canonical serialization is byte stable") {
  const StructureFile f = parse_structure(kQ2);
  const std::string once = serialize(f);
  CHECK(once.back() == '\n');
  CHECK(serialize(parse_structure(once)) == once);
  // Key order and whitespace in the input do not matter.
  const std::string shuffled = R"({"mul": [["0","0","0"],["0","1","-1"],["0","-1","1"]], "one": "1",
    "add": [[["0"],["1"],["-1"]],[["1"],["1"],["-1","0","1"]],[["-1"],["1","0","-1"],["-1"]]],
    "zero": "0", "neg": {"-1": "1", "1": "-1", "0": "0"}, "elements": ["0","1","-1"],
    "kind": "multiring", "name": "q2", "provenance": "sign multifield"})";
  CHECK(serialize(parse_structure(shuffled)) == once);
}

TEST_CASE("every corpus file is canonical and round trips") {
  const std::filesystem::path dir = MVALG_CORPUS_DIR;
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() != ".mrs") continue;
    ++files;
    INFO(e.path().filename().string());
    const std::string text = slurp(e.path());
    const StructureFile f = parse_structure(text);
    CHECK(serialize(f) == text);
    const auto named = corpus::find(f.name);
    REQUIRE(named.has_value());
    CHECK(serialize(*named) == text);
  }
  CHECK(files == corpus::all().size());
}

TEST_CASE("every corpus structure survives save and load") {
  const auto tmp = std::filesystem::temp_directory_path() / "mvalg_io_test";
  std::filesystem::create_directories(tmp);
  for (const StructureFile& f : corpus::all()) {
    INFO(f.name);
    const auto p = tmp / (f.name + ".mrs");
    save_structure(p, f);
    const StructureFile g = load_structure(p);
    CHECK(g.name == f.name);
    CHECK(g.provenance == f.provenance);
    CHECK(serialize(g) == serialize(f));
    CHECK(g.value.index() == f.value.index());
  }
  std::filesystem::remove_all(tmp);
}

TEST_CASE("input errors") {
  CHECK(error_of(replaced(kQ2, R"([["1"],["1"],["0","1","-1"]])", R"([["1"],[],["0","1","-1"]])"))
            .find("empty hyperoperation cell at (1,1)") != std::string::npos);
  CHECK(error_of(replaced(kQ2, R"(["0","1","-1"],)", R"(["0","1","1"],)")).find("duplicate element label") !=
        std::string::npos);
  CHECK(error_of(replaced(kQ2, R"("kind": "multiring")", R"("kind": "lattice")")).find("unknown kind") !=
        std::string::npos);
  CHECK(error_of(replaced(kQ2, R"(["0","-1","1"]])", R"(["0","-1","2"]])")).find("unknown element label '2'") !=
        std::string::npos);
  const std::string ragged = error_of(replaced(kQ2, R"(["0","-1","1"]])", R"(["0","-1"]])"));
  CHECK(ragged.find("expected 3 entries") != std::string::npos);
  CHECK(ragged.find("/mul/2") != std::string::npos);
  // Syntax errors carry a position.
  const std::string syntax = error_of(replaced(kQ2, R"("one": "1",)", R"("one": "1")"));
  CHECK(syntax.find("syntax error") != std::string::npos);
  CHECK(syntax.find("line") != std::string::npos);
  CHECK(syntax.find("column") != std::string::npos);
  CHECK_THROWS_AS(load_structure("/nonexistent/q2.mrs"), InputError);
  CHECK_THROWS_AS(parse_structure("[]"), InputError);
}

TEST_CASE("report rendering") {
  CheckReport r;
  r.pass("a", "first");
  r.fail(std::string("b"), corpus::q2().carrier(), {1, 2}, "second");
  Verdict v;
  v.id = "c";
  v.detail = "third";
  r.inform(v);
  CHECK_FALSE(r.overall());
  const std::string lines = r.to_json_lines();
  std::istringstream in(lines);
  std::string line;
  std::vector<std::string> all;
  while (std::getline(in, line)) all.push_back(line);
  REQUIRE(all.size() == 4);
  CHECK(all[0] == R"({"id":"a","status":"pass","informational":false,"witness":[],"detail":"first"})");
  CHECK(all[1] == R"({"id":"b","status":"fail","informational":false,"witness":["1","-1"],"detail":"second"})");
  CHECK(all[2].starts_with(R"({"id":"c","status":"pass","informational":true)"));
  CHECK(all[3].find(R"("overall")") != std::string::npos);
  CHECK(all[3].find(R"("fail")") != std::string::npos);
  CHECK(r.to_text().find("overall") != std::string::npos);
}
