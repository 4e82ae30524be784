#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mmsts/constructions.hpp"
#include "mmsts/design.hpp"
#include "mmsts/dual_labeling.hpp"

using namespace mmsts;

namespace {

// Dual sums indexed by structured point (i * m + z, infinity last); avoids
// any dependence on point relabelings.
std::vector<long long> structured_dual_sums(const StructuredSystem& system,
                                            const BlockLabeling& labeling) {
  std::vector<long long> sums(system.n, 0);
  for (std::size_t b = 0; b < system.blocks.size(); ++b)
    for (const StructuredPoint& p : system.blocks[b].members)
      sums[point_index(p, system.m)] += labeling.labels[b];
  return sums;
}

}  // namespace

TEST_CASE("scheme and construction pairing") {
  CHECK(scheme_matches(OrderingScheme::bose_yxi, Construction::bose));
  CHECK(scheme_matches(OrderingScheme::bose_natural, Construction::bose));
  CHECK_FALSE(scheme_matches(OrderingScheme::bose_yxi, Construction::skolem));
  CHECK(scheme_matches(OrderingScheme::skolem_natural, Construction::skolem));
  CHECK(scheme_for(Construction::bose, true) == OrderingScheme::bose_yxi);
  CHECK(scheme_for(Construction::bose, false) == OrderingScheme::bose_natural);
  CHECK(scheme_for(Construction::skolem, true) == OrderingScheme::skolem_yxi);
  CHECK(scheme_for(Construction::skolem, false) == OrderingScheme::skolem_natural);
}

TEST_CASE("positional labels, hand-checked small systems") {
  StructuredSystem bose9 = construct_bose(9);
  CHECK(make_labeling(bose9, OrderingScheme::bose_yxi).labels ==
        std::vector<long long>{2, 1, 0, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  CHECK(make_labeling(bose9, OrderingScheme::bose_natural).labels ==
        std::vector<long long>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});

  // m = 5: construction lists pairs y-major, the natural order x-major, so
  // type-2 labels land out of construction order.
  StructuredSystem bose15 = construct_bose(15);
  CHECK(make_labeling(bose15, OrderingScheme::bose_natural).labels ==
        std::vector<long long>{0,  1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 17,
                               18, 19, 11, 12, 13, 20, 21, 22, 26, 27, 28, 14,
                               15, 16, 23, 24, 25, 29, 30, 31, 32, 33, 34});

  StructuredSystem skolem7 = construct_skolem(7);
  CHECK(make_labeling(skolem7, OrderingScheme::skolem_yxi).labels ==
        std::vector<long long>{0, 1, 2, 3, 5, 4, 6});
  CHECK(make_labeling(skolem7, OrderingScheme::skolem_natural).labels ==
        std::vector<long long>{0, 1, 2, 3, 4, 5, 6});

  StructuredSystem skolem13 = construct_skolem(13);
  CHECK(make_labeling(skolem13, OrderingScheme::skolem_natural).labels ==
        std::vector<long long>{0,  1,  2,  3,  4,  5,  6,  7,  11, 12, 13, 8,  9,
                               10, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25});

  CHECK_THROWS_AS(make_labeling(bose9, OrderingScheme::skolem_yxi),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_labeling(skolem7, OrderingScheme::bose_natural),
                  std::invalid_argument);
}

TEST_CASE("every scheme yields a permutation labeling") {
  for (int n = 9; n <= 45; n += 6) {
    StructuredSystem s = construct_bose(n);
    for (OrderingScheme scheme :
         {OrderingScheme::bose_yxi, OrderingScheme::bose_natural})
      CHECK(is_permutation_labeling(make_labeling(s, scheme), s.blocks.size()));
  }
  for (int n = 7; n <= 43; n += 6) {
    StructuredSystem s = construct_skolem(n);
    for (OrderingScheme scheme :
         {OrderingScheme::skolem_yxi, OrderingScheme::skolem_natural})
      CHECK(is_permutation_labeling(make_labeling(s, scheme), s.blocks.size()));
  }
}

TEST_CASE("arithmetic label formulas agree with positional counting") {
  for (int n = 9; n <= 57; n += 6) {
    StructuredSystem s = construct_bose(n);
    for (OrderingScheme scheme :
         {OrderingScheme::bose_yxi, OrderingScheme::bose_natural}) {
      BlockLabeling labeling = make_labeling(s, scheme);
      for (std::size_t b = 0; b < s.blocks.size(); ++b)
        CHECK(closed_form_block_label(scheme, s.blocks[b], s.m, n) ==
              labeling.labels[b]);
    }
  }
  for (int n = 7; n <= 55; n += 6) {
    StructuredSystem s = construct_skolem(n);
    for (OrderingScheme scheme :
         {OrderingScheme::skolem_yxi, OrderingScheme::skolem_natural}) {
      BlockLabeling labeling = make_labeling(s, scheme);
      for (std::size_t b = 0; b < s.blocks.size(); ++b)
        CHECK(closed_form_block_label(scheme, s.blocks[b], s.m, n) ==
              labeling.labels[b]);
    }
  }
}

TEST_CASE("inverse pairs match brute force") {
  CHECK(inverse_pairs(0, 5, Construction::bose) ==
        std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});
  CHECK(inverse_pairs(2, 5, Construction::bose) ==
        std::vector<std::pair<int, int>>{{0, 4}, {1, 3}});
  for (int m = 3; m <= 31; m += 2)
    for (int z = 0; z < m; ++z) {
      std::vector<std::pair<int, int>> brute;
      for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
          if (bose_op(x, y, m) == z) brute.emplace_back(x, y);
      std::vector<std::pair<int, int>> closed = inverse_pairs(z, m, Construction::bose);
      CHECK(closed == brute);
      CHECK(static_cast<int>(closed.size()) == (m - 1) / 2);
    }
  for (int m = 2; m <= 32; m += 2)
    for (int z = 0; z < m; ++z) {
      std::vector<std::pair<int, int>> brute;
      for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
          if (skolem_op(x, y, m) == z) brute.emplace_back(x, y);
      CHECK(inverse_pairs(z, m, Construction::skolem) == brute);
    }
  CHECK_THROWS_AS(inverse_pairs(0, 4, Construction::bose), std::invalid_argument);
  CHECK_THROWS_AS(inverse_pairs(0, 3, Construction::skolem), std::invalid_argument);
  CHECK_THROWS_AS(inverse_pairs(5, 5, Construction::bose), std::invalid_argument);
  CHECK_THROWS_AS(inverse_pairs(-1, 5, Construction::bose), std::invalid_argument);
}

TEST_CASE("closed-form dual point sums equal enumeration") {
  for (int n : {9, 15, 21, 27, 33}) {
    StructuredSystem s = construct_bose(n);
    std::vector<long long> sums =
        structured_dual_sums(s, make_labeling(s, OrderingScheme::bose_yxi));
    for (int i = 0; i < 3; ++i)
      for (int z = 0; z < s.m; ++z)
        CHECK(closed_form_dual_point_sum(OrderingScheme::bose_yxi, z, i, n) ==
              sums[i * s.m + z]);
  }
  for (int n : {7, 13, 19, 25, 31}) {
    StructuredSystem s = construct_skolem(n);
    std::vector<long long> sums =
        structured_dual_sums(s, make_labeling(s, OrderingScheme::skolem_yxi));
    for (int i = 0; i < 3; ++i)
      for (int z = 0; z < s.m; ++z)
        CHECK(closed_form_dual_point_sum(OrderingScheme::skolem_yxi, z, i, n) ==
              sums[i * s.m + z]);
  }
  CHECK_THROWS_AS(closed_form_dual_point_sum(OrderingScheme::bose_natural, 0, 0, 9),
                  std::invalid_argument);
  CHECK_THROWS_AS(closed_form_dual_point_sum(OrderingScheme::bose_yxi, 3, 0, 9),
                  std::invalid_argument);
  CHECK_THROWS_AS(closed_form_dual_point_sum(OrderingScheme::bose_yxi, 0, 3, 9),
                  std::invalid_argument);
}

TEST_CASE("dual extreme formulas, hand-checked values") {
  CHECK(dual_min_sum_formula(OrderingScheme::skolem_yxi, 7) == 7);
  CHECK(dual_min_sum_formula(OrderingScheme::skolem_yxi, 13) == 57);
  CHECK(dual_min_sum_formula(OrderingScheme::skolem_natural, 7) == 6);
  CHECK(dual_min_sum_formula(OrderingScheme::bose_natural, 9) == 20);
  CHECK(dual_min_sum_formula(OrderingScheme::bose_yxi, 27) == 626);
  CHECK(dual_max_sum_formula(OrderingScheme::bose_yxi, 15) == 145);
  CHECK(dual_max_sum_formula(OrderingScheme::skolem_yxi, 7) == 15);
  CHECK(dual_max_sum_formula(OrderingScheme::skolem_yxi, 13) == 135);
}

TEST_CASE("dual extreme formulas track enumeration") {
  for (int n : {27, 33, 39, 45}) {
    StructuredSystem s = construct_bose(n);
    std::vector<long long> sums =
        structured_dual_sums(s, make_labeling(s, OrderingScheme::bose_yxi));
    CHECK(dual_min_sum_formula(OrderingScheme::bose_yxi, n) ==
          *std::min_element(sums.begin(), sums.end()));
    CHECK(dual_max_sum_formula(OrderingScheme::bose_yxi, n) ==
          *std::max_element(sums.begin(), sums.end()));
  }
  for (int n : {7, 13, 19, 25}) {
    StructuredSystem s = construct_skolem(n);
    std::vector<long long> sums =
        structured_dual_sums(s, make_labeling(s, OrderingScheme::skolem_yxi));
    CHECK(dual_min_sum_formula(OrderingScheme::skolem_yxi, n) ==
          *std::min_element(sums.begin(), sums.end()));
    CHECK(dual_max_sum_formula(OrderingScheme::skolem_yxi, n) ==
          *std::max_element(sums.begin(), sums.end()));
    // the infinity point carries the maximum
    CHECK(sums[3 * s.m] == *std::max_element(sums.begin(), sums.end()));
  }
}

TEST_CASE("formulas refuse n outside their claims") {
  CHECK_THROWS_AS(dual_min_sum_formula(OrderingScheme::bose_yxi, 9), std::domain_error);
  CHECK_THROWS_AS(dual_min_sum_formula(OrderingScheme::bose_yxi, 15), std::domain_error);
  CHECK_THROWS_AS(dual_min_sum_formula(OrderingScheme::bose_yxi, 21), std::domain_error);
  CHECK_NOTHROW(dual_min_sum_formula(OrderingScheme::bose_yxi, 33));
  CHECK_THROWS_AS(dual_max_sum_formula(OrderingScheme::bose_yxi, 9), std::domain_error);
  CHECK_THROWS_AS(dual_max_sum_formula(OrderingScheme::bose_natural, 15),
                  std::domain_error);
  CHECK_THROWS_AS(dual_max_sum_formula(OrderingScheme::skolem_natural, 13),
                  std::domain_error);
  CHECK_THROWS_AS(dual_min_sum_formula(OrderingScheme::bose_yxi, 13),
                  std::invalid_argument);
  CHECK_THROWS_AS(dual_min_sum_formula(OrderingScheme::skolem_yxi, 9),
                  std::invalid_argument);
}

TEST_CASE("bose n=9 extremes are enumeration-only") {
  StructuredSystem s = construct_bose(9);
  std::vector<long long> sums =
      structured_dual_sums(s, make_labeling(s, OrderingScheme::bose_yxi));
  CHECK(*std::min_element(sums.begin(), sums.end()) == 20);
  CHECK(*std::max_element(sums.begin(), sums.end()) == 25);
  long long total = std::accumulate(sums.begin(), sums.end(), 0LL);
  CHECK(total == 3LL * 11 * 12 / 2);  // three points per block, labels 0..11
}
