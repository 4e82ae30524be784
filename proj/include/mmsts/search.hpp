#pragma once

#include <cstdint>
#include <vector>

#include "mmsts/design.hpp"
#include "mmsts/rational.hpp"

namespace mmsts {

enum class Objective { max_min_sum, min_difference_sum, min_ratio_sum, max_dual_min_sum };
enum class SearchMode { full, reduced };

struct SearchTask {
  SteinerTripleSystem system;
  Objective objective = Objective::max_min_sum;
  SearchMode mode = SearchMode::full;
  // 0 = unlimited. A positive budget caps the number of enumeration nodes and
  // forces sequential execution so the cut-off point is well defined.
  std::uint64_t budget = 0;
  int jobs = 1;
  // Lifts the defensive size guards (reduced: n <= 19; full: n <= 9 without a
  // budget). The caller accepts the runtime.
  bool allow_large = false;
};

struct SearchResult {
  // Exact objective value (integer objectives have denominator 1).
  Rational best;
  // Point permutation sigma, sigma[p] = new label of point p. Empty for
  // max_dual_min_sum, which searches block labelings instead.
  std::vector<int> witness_relabeling;
  // Block labeling witness (max_dual_min_sum only).
  std::vector<long long> witness_labels;
  std::uint64_t nodes = 0;
  // True when the whole space was either enumerated or soundly pruned; the
  // reported best is then the exact optimum.
  bool exhaustive = false;
};

// Enumerates only relabelings that could attain min_sum = n: some point maps
// to 0, and the (n-1)/2 blocks through it are matched to the pairs {j, n-j}
// with an orientation each; the space has size n * ((n-1)/2)! * 2^((n-1)/2).
// Objective is forced to max_min_sum. Enumeration order: the 0-point
// ascending, pair assignments in lexicographic order, orientation bit 0
// before 1. Threads partition on the 0-point and never share incumbents, so
// the result (including node counts) is identical for any job count.
SearchResult reduced_maxmin_search(const SearchTask& task);

// Exact search over the full space: all n! point permutations for the three
// permutation objectives (depth-first in lexicographic sigma order with sound
// objective-specific pruning), or all block labelings for max_dual_min_sum
// (branch and bound, labels assigned in increasing order, optimistic per-point
// completion bound, incumbent seeded with the identity labeling). Ties keep
// the first witness in the fixed enumeration order, which for the permutation
// objectives is the lexicographically smallest optimal sigma.
SearchResult full_permutation_search(const SearchTask& task);

// Dispatch on task.mode.
SearchResult run_search(const SearchTask& task);

// Applies sigma (sigma[p] = new label) pointwise; block order preserved,
// blocks re-sorted. Used to re-score permutation witnesses.
SteinerTripleSystem relabel_points(const SteinerTripleSystem& system,
                                   const std::vector<int>& sigma);

}  // namespace mmsts
