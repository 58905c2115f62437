#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "qdt/catalog.hpp"
#include "qdt/io.hpp"

using namespace qdt;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_space(text);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("json and line formats round trip") {
  for (const DistanceSpace& s : finite_catalog()) {
    CHECK(parse_space(space_to_json(s)) == s);
    CHECK(parse_space(space_to_lines(s)) == s);
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    DistanceSpace s = random_space(1 + seed % 6, seed, kAllProfiles[seed % 4]);
    CHECK(parse_space_json(space_to_json(s)) == s);
    CHECK(parse_space_lines(space_to_lines(s)) == s);
  }
}

TEST_CASE("json parsing") {
  DistanceSpace s = parse_space_json(R"({"name": "b", "points": ["p", "q"], "matrix": [[0, "1"], ["2", "0"]]})");
  CHECK(s.name() == "b");
  CHECK(s.d() == catalog_get("space-b").finite->d());
  CHECK(error_of("{").find("invalid JSON") != std::string::npos);
  CHECK(error_of(R"({"matrix": []})").find("points") != std::string::npos);
  CHECK(error_of(R"({"points": ["a"]})").find("matrix") != std::string::npos);
  CHECK(error_of(R"({"points": ["a"], "matrix": [["0", "1"]]})").find("row 0") != std::string::npos);
  CHECK(error_of(R"({"points": ["a"], "matrix": [[-1]]})").find("matrix[0][0]") != std::string::npos);
  CHECK(error_of(R"({"points": ["a"], "matrix": [["x"]]})").find("matrix[0][0]") != std::string::npos);
}

TEST_CASE("line format parsing") {
  DistanceSpace s = parse_space_lines(
      "# two points\n"
      "name demo\n"
      "points p q\n"
      "dist p p 0\n"
      "dist q q 0   # reflexive\n"
      "dist p q 1/2\n");
  CHECK(s.name() == "demo");
  CHECK(s.d()(0, 1) == ExtVal(Rational(1, 2)));
  CHECK(s.d()(1, 0).is_inf());
  DistanceSpace z = parse_space_lines("points a b\ndefault 0\n");
  CHECK(z.d() == GRel(2, 2, kZero));
}

TEST_CASE("line format errors carry line numbers") {
  CHECK(error_of("points a\nbogus 1\n") == "line 2: unknown keyword 'bogus'");
  CHECK(error_of("points a\n\ndist a z 1\n") == "line 3: unknown point 'z'");
  CHECK(error_of("points a\ndist a a -1\n").rfind("line 2:", 0) == 0);
  CHECK(error_of("points a\ndist a a\n") == "line 2: expected: dist FROM TO VALUE");
  CHECK(error_of("points a\npoints b\n") == "line 2: points given twice");
  CHECK(error_of("name x\n") == "no 'points' line");
}

TEST_CASE("parsed spaces are validated") {
  CHECK_THROWS_AS(parse_space("points a b c\ndefault 0\ndist a b 5\n"), TriangleViolation);
  CHECK_THROWS_AS(parse_space(R"({"points": ["a", "a"], "matrix": [["0", "0"], ["0", "0"]]})"), std::invalid_argument);
}

TEST_CASE("loading spaces") {
  CHECK(load_space("catalog:3-chain") == *catalog_get("3-chain").finite);
  CHECK_THROWS_AS(load_space("catalog:n-chain"), std::invalid_argument);
  CHECK_THROWS_AS(load_space("catalog:nothing"), std::out_of_range);
  CHECK_THROWS_AS(load_space("/nonexistent/space.json"), std::runtime_error);
  const std::string path = "qdt_io_test_space.txt";
  {
    std::ofstream out(path);
    out << space_to_lines(*catalog_get("space-b").finite);
  }
  CHECK(load_space(path) == *catalog_get("space-b").finite);
  std::remove(path.c_str());
}

TEST_CASE("relation output") {
  DistanceSpace chain = *catalog_get("3-chain").finite;
  CHECK(pairs_json(chain.d(), chain.labels()) == nlohmann::json::parse(R"([["a","b"],["a","c"],["b","c"]])"));
  CHECK(dot_relation("g", chain.labels(), chain.d()) ==
        "digraph \"g\" {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -> \"b\";\n  \"b\" -> \"c\";\n}\n");
  std::string z = dot_relation("z", {"x\"", "y"}, GRel(2, 2, kZero));
  CHECK(z.find("\"x\\\"\" -> \"y\"") != std::string::npos);
  CHECK(z.find("\"y\" -> \"x\\\"\"") != std::string::npos);
  CHECK(grel_json(GRel(1, 2, kInf)) == nlohmann::json::parse(R"([["inf","inf"]])"));
}
