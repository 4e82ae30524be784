#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "mmsts/design.hpp"
#include "mmsts/rational.hpp"

using namespace mmsts;

namespace {

RawDesign fano() {
  RawDesign raw;
  raw.n = 7;
  raw.blocks = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  return raw;
}

bool mentions(const ValidityReport& report, Violation::Kind kind) {
  for (const Violation& v : report.violations)
    if (v.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("verify_sts accepts a correct system") {
  ValidityReport report = verify_sts(fano());
  CHECK(report.ok);
  CHECK(report.violations.empty());
  CHECK_FALSE(report.truncated);
}

TEST_CASE("verify_sts rejects structural problems") {
  SUBCASE("bad congruence class") {
    RawDesign raw = fano();
    raw.n = 6;
    ValidityReport report = verify_sts(raw);
    CHECK_FALSE(report.ok);
    CHECK(mentions(report, Violation::Kind::structural));
  }
  SUBCASE("point out of range") {
    RawDesign raw = fano();
    raw.blocks[6] = {2, 4, 7};
    CHECK_FALSE(verify_sts(raw).ok);
  }
  SUBCASE("negative point") {
    RawDesign raw = fano();
    raw.blocks[0] = {-1, 1, 2};
    CHECK_FALSE(verify_sts(raw).ok);
  }
  SUBCASE("repeated point inside a block") {
    RawDesign raw = fano();
    raw.blocks[0] = {1, 1, 2};
    CHECK_FALSE(verify_sts(raw).ok);
  }
  SUBCASE("wrong block arity") {
    RawDesign raw = fano();
    raw.blocks[3] = {1, 3};
    CHECK_FALSE(verify_sts(raw).ok);
  }
  SUBCASE("n above the supported cap") {
    RawDesign raw;
    raw.n = kMaxPoints + 3;
    CHECK_FALSE(verify_sts(raw).ok);
  }
}

TEST_CASE("verify_sts rejects covering defects") {
  SUBCASE("wrong block count") {
    RawDesign raw = fano();
    raw.blocks.pop_back();
    ValidityReport report = verify_sts(raw);
    CHECK_FALSE(report.ok);
    CHECK(mentions(report, Violation::Kind::steiner));
  }
  SUBCASE("pair covered twice and pair uncovered") {
    RawDesign raw = fano();
    raw.blocks[6] = {2, 4, 6};
    ValidityReport report = verify_sts(raw);
    CHECK_FALSE(report.ok);
    CHECK(mentions(report, Violation::Kind::steiner));
  }
}

TEST_CASE("verify_sts truncates a flood of violations") {
  RawDesign raw;
  raw.n = 7;
  raw.blocks.assign(7, {0, 1, 2});
  ValidityReport report = verify_sts(raw);
  CHECK_FALSE(report.ok);
  CHECK(report.violations.size() == kMaxReportedViolations);
  CHECK(report.truncated);
}

TEST_CASE("system_from_raw converts or throws") {
  SteinerTripleSystem system = system_from_raw(fano());
  CHECK(system.n == 7);
  CHECK(system.blocks.size() == 7);
  CHECK(system.blocks[0] == Block{0, 1, 2});

  RawDesign unsorted = fano();
  unsorted.blocks[1] = {4, 0, 3};
  CHECK(system_from_raw(unsorted).blocks[1] == Block{0, 3, 4});

  RawDesign bad = fano();
  bad.n = 6;
  CHECK_THROWS_AS(system_from_raw(bad), std::invalid_argument);
}

TEST_CASE("sum statistics") {
  SteinerTripleSystem system = system_from_raw(fano());
  SumStats stats = sum_stats(system);
  CHECK(block_sum(system.blocks[0]) == 3);
  CHECK(stats.min_sum == 3);
  CHECK(stats.max_sum == 11);
  CHECK(stats.difference_sum == 8);
  CHECK(stats.ratio_sum == Rational(11, 3));

  std::vector<Block> single = {{2, 3, 4}};
  SumStats one = sum_stats(single);
  CHECK(one.min_sum == 9);
  CHECK(one.max_sum == 9);
  CHECK(one.ratio_sum == Rational(1));

  CHECK_THROWS_AS(sum_stats(std::vector<Block>{}), std::invalid_argument);
}

TEST_CASE("block labelings") {
  BlockLabeling identity = identity_labeling(7);
  CHECK(identity.labels == std::vector<long long>{0, 1, 2, 3, 4, 5, 6});
  CHECK(is_permutation_labeling(identity, 7));
  CHECK_FALSE(is_permutation_labeling(identity, 6));
  CHECK_FALSE(is_permutation_labeling(BlockLabeling{{0, 1, 1, 3, 4, 5, 6}}, 7));
  CHECK_FALSE(is_permutation_labeling(BlockLabeling{{0, 1, 2, 3, 4, 5, 7}}, 7));
}

TEST_CASE("dual point sums follow the labeling") {
  SteinerTripleSystem system = system_from_raw(fano());
  std::vector<long long> under_identity =
      dual_point_sums(system, identity_labeling(7));
  CHECK(under_identity == std::vector<long long>{3, 7, 11, 9, 11, 11, 11});

  BlockLabeling reversed{{6, 5, 4, 3, 2, 1, 0}};
  std::vector<long long> under_reversed = dual_point_sums(system, reversed);
  CHECK(under_reversed == std::vector<long long>{15, 11, 7, 9, 7, 7, 7});

  CHECK_THROWS_AS(dual_point_sums(system, BlockLabeling{{0, 1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(dual_point_sums(system, BlockLabeling{{0, 0, 1, 2, 3, 4, 5}}),
                  std::invalid_argument);
}

TEST_CASE("complement relabeling swaps the extreme sums") {
  SteinerTripleSystem system = system_from_raw(fano());
  SteinerTripleSystem comp = complement_relabel(system);
  CHECK(comp.blocks[0] == Block{4, 5, 6});
  RawDesign raw;
  raw.n = comp.n;
  for (const Block& b : comp.blocks) raw.blocks.push_back({b[0], b[1], b[2]});
  CHECK(verify_sts(raw).ok);

  SumStats stats = sum_stats(system);
  SumStats cstats = sum_stats(comp);
  CHECK(cstats.max_sum == 3 * 7 - 3 - stats.min_sum);
  CHECK(cstats.min_sum == 3 * 7 - 3 - stats.max_sum);
  CHECK(complement_relabel(comp).blocks == system.blocks);
}

TEST_CASE("reorder_blocks places each block at its label") {
  SteinerTripleSystem system = system_from_raw(fano());
  BlockLabeling labeling{{2, 0, 1, 3, 4, 5, 6}};
  SteinerTripleSystem moved = reorder_blocks(system, labeling);
  CHECK(moved.blocks[2] == system.blocks[0]);
  CHECK(moved.blocks[0] == system.blocks[1]);
  CHECK(moved.blocks[1] == system.blocks[2]);
  CHECK(moved.blocks[3] == system.blocks[3]);
  CHECK_THROWS_AS(reorder_blocks(system, BlockLabeling{{0, 1}}), std::invalid_argument);
}
