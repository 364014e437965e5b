#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sapp/structure_io.hpp"
#include "sapp/util.hpp"

using namespace sapp;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    path = std::string("sapp_io_test_") + std::to_string(fnv1a64(content) & 0xffff) +
           ".json";
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("line sets round-trip through the record format") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<Line> lines = sample_FQ(rng.next(), 1 + rng.below(10));
    std::stringstream buf;
    save_lines(buf, lines);
    CHECK(load_lines(buf) == lines);
  }
}

TEST_CASE("line records accept unreduced rationals and emit reduced ones") {
  std::istringstream in(
      R"({"kind":"slanted","slope":"4/8","intercept":"-6/4"})" "\n"
      R"({"kind":"vertical","x":"3"})" "\n");
  const std::vector<Line> lines = load_lines(in);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == Line::slanted(Rational(1, 2), Rational(-3, 2)));
  CHECK(lines[1] == Line::vertical(Rational(3)));

  std::stringstream out;
  save_lines(out, lines);
  CHECK(out.str().find("\"slope\":\"1/2\"") != std::string::npos);
  CHECK(out.str().find("\"x\":\"3/1\"") != std::string::npos);
}

TEST_CASE("line record errors") {
  std::istringstream bad_kind(R"({"kind":"point","x":"1"})");
  CHECK_THROWS_AS(load_lines(bad_kind), Error);
  std::istringstream bad_json("{nope");
  CHECK_THROWS_AS(load_lines(bad_json), Error);
  std::istringstream bad_rat(R"({"kind":"vertical","x":"1/0"})");
  CHECK_THROWS_AS(load_lines(bad_rat), Error);
}

TEST_CASE("abstract structures round-trip") {
  const FiniteStructure m(4, {{0, 1}, {2, 3}});
  std::stringstream buf;
  save_abstract_structure(buf, m);
  const LoadedStructure loaded = load_abstract_structure(buf);
  CHECK(loaded.warnings.empty());
  CHECK(loaded.structure.size() == 4);
  CHECK(loaded.structure.pairs() == m.pairs());
}

TEST_CASE("loads symmetrize and de-reflexivize with warnings") {
  std::istringstream in(R"({"domain": 3, "O": [[0,1],[2,2]]})");
  const LoadedStructure loaded = load_abstract_structure(in);
  CHECK(loaded.structure.perp_at(0, 1));
  CHECK(loaded.structure.perp_at(1, 0));
  CHECK_FALSE(loaded.structure.perp_at(2, 2));
  REQUIRE(loaded.warnings.size() == 2);

  std::istringstream sym(R"({"domain": 2, "O": [[0,1],[1,0]]})");
  CHECK(load_abstract_structure(sym).warnings.empty());

  std::istringstream out_of_range(R"({"domain": 2, "O": [[0,5]]})");
  CHECK_THROWS_AS(load_abstract_structure(out_of_range), Error);
}

TEST_CASE("file loader sniffs both formats") {
  {
    TempFile f(R"({"domain": 3, "O": [[0,1]]})");
    const LoadedStructure loaded = load_structure_file(f.path);
    CHECK(loaded.structure.size() == 3);
  }
  {
    TempFile f(
        R"({"kind":"slanted","slope":"1/1","intercept":"1/1"})" "\n"
        R"({"kind":"slanted","slope":"-1/1","intercept":"2/1"})" "\n");
    const LoadedStructure loaded = load_structure_file(f.path);
    CHECK(loaded.structure.size() == 2);
    CHECK(loaded.structure.perp_at(0, 1));
  }
  CHECK_THROWS_AS(load_structure_file("definitely_missing_file.json"), Error);
}
