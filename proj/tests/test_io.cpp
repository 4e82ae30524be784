#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmsts/constructions.hpp"
#include "mmsts/design.hpp"
#include "mmsts/design_io.hpp"
#include "mmsts/rational.hpp"

using namespace mmsts;

namespace {

SteinerTripleSystem sts7() {
  StructuredSystem s = construct_skolem(7);
  return apply_relabeling(s, skolem_mapping(2));
}

RawDesign parse(const std::string& text) {
  std::istringstream in(text);
  return read_design(in);
}

}  // namespace

TEST_CASE("read_design extracts n, blocks, and optional labels") {
  RawDesign design = parse(R"({"n": 7, "blocks": [[0,1,2],[3,4]], "extra": true})");
  CHECK(design.n == 7);
  REQUIRE(design.blocks.size() == 2);
  CHECK(design.blocks[0] == std::vector<int>{0, 1, 2});
  CHECK(design.blocks[1] == std::vector<int>{3, 4});
  CHECK_FALSE(design.block_labels.has_value());

  RawDesign labeled = parse(R"({"n": 3, "blocks": [[0,1,2]], "block_labels": [0]})");
  REQUIRE(labeled.block_labels.has_value());
  CHECK(*labeled.block_labels == std::vector<long long>{0});
}

TEST_CASE("read_design rejects malformed input") {
  CHECK_THROWS_AS(parse("{not json"), std::runtime_error);
  CHECK_THROWS_AS(parse("[1, 2, 3]"), std::runtime_error);
  CHECK_THROWS_AS(parse(R"({"blocks": [[0,1,2]]})"), std::runtime_error);
  CHECK_THROWS_AS(parse(R"({"n": 3})"), std::runtime_error);
  CHECK_THROWS_AS(parse(R"({"n": "three", "blocks": []})"), std::runtime_error);
  CHECK_THROWS_AS(parse(R"({"n": 3, "blocks": [["a",1,2]]})"), std::runtime_error);
  CHECK_THROWS_AS(parse(R"({"n": 3, "blocks": [[0,1,2]], "block_labels": ["a"]})"),
                  std::runtime_error);
}

TEST_CASE("canonical dump is two-space indented with sorted keys") {
  nlohmann::json j{{"b", nlohmann::json::array({1})}, {"a", 2}};
  std::string expected =
      "{\n"
      "  \"a\": 2,\n"
      "  \"b\": [\n"
      "    1\n"
      "  ]\n"
      "}\n";
  CHECK(canonical_dump(j) == expected);
}

TEST_CASE("design json carries n, blocks, and optional labels in key order") {
  SteinerTripleSystem system = sts7();
  BlockLabeling labeling = identity_labeling(system.blocks.size());
  std::string bare = canonical_dump(design_json(system));
  CHECK(bare.find("\"block_labels\"") == std::string::npos);
  CHECK(bare.find("\"blocks\"") < bare.find("\"n\""));

  std::string labeled = canonical_dump(design_json(system, &labeling));
  CHECK(labeled.find("\"block_labels\"") < labeled.find("\"blocks\""));
  RawDesign reread = parse(labeled);
  REQUIRE(reread.block_labels.has_value());
  CHECK(reread.block_labels->size() == system.blocks.size());
}

TEST_CASE("design files round trip through serialization") {
  SteinerTripleSystem system = sts7();
  std::string text = canonical_dump(design_json(system));
  RawDesign design = parse(text);
  SteinerTripleSystem reread = system_from_raw(design);
  CHECK(reread.n == system.n);
  CHECK(reread.blocks == system.blocks);
  CHECK(canonical_dump(design_json(reread)) == text);
}

TEST_CASE("design files round trip through the filesystem") {
  SteinerTripleSystem system = sts7();
  std::string path = "test_io_scratch_design.json";
  std::string text = canonical_dump(design_json(system));
  write_text_file(path, text);

  RawDesign design = read_design_file(path);
  SteinerTripleSystem reread = system_from_raw(design);
  CHECK(reread.blocks == system.blocks);

  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == text);
  std::remove(path.c_str());
}

TEST_CASE("file helpers report unusable paths") {
  CHECK_THROWS_AS(read_design_file("no_such_dir/design.json"), std::runtime_error);
  CHECK_THROWS_AS(write_text_file("no_such_dir/design.json", "x"), std::runtime_error);
  CHECK_THROWS_AS(read_popularity_file("no_such_dir/popularity.json"),
                  std::runtime_error);
}

TEST_CASE("rationals serialize with an explicit denominator") {
  CHECK(rational_json(Rational(30, 13)) == nlohmann::json("30/13"));
  CHECK(rational_json(Rational(2)) == nlohmann::json("2/1"));
  CHECK(rational_json(Rational(-5, 3)) == nlohmann::json("-5/3"));
  CHECK(rational_json(Rational(0)) == nlohmann::json("0/1"));
}

TEST_CASE("popularity files accept integers and rational strings") {
  std::istringstream in(R"([1, 2, "3/2", 0, "-5/3", -4])");
  std::vector<Rational> popularity = read_popularity(in);
  std::vector<Rational> expected{Rational(1), Rational(2), Rational(3, 2),
                                 Rational(0), Rational(-5, 3), Rational(-4)};
  CHECK(popularity == expected);
}

TEST_CASE("popularity files reject anything else") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_popularity(in), std::runtime_error);
  };
  reject(R"({"a": 1})");
  reject("[1, 2.5]");
  reject("[true]");
  reject(R"(["abc"])");
  reject(R"(["3/0"])");
  reject("[1, 2");
}
