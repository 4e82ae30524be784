#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mmsts/rational.hpp"

namespace mmsts {

// Upper cap on the point count; keeps every label sum (at most ~3N^2/2 with
// N = n(n-1)/6) comfortably inside 64 bits.
inline constexpr int kMaxPoints = 10000;

// How many violations a validity report lists before truncating.
inline constexpr int kMaxReportedViolations = 10;

// Three distinct points, stored strictly increasing.
using Block = std::array<int, 3>;

struct SteinerTripleSystem {
  int n = 0;
  std::vector<Block> blocks;  // construction or file order; each block sorted
};

// Unvalidated input, straight from a file or a caller. verify_sts decides
// whether it is an STS; system_from_raw converts after a successful check.
struct RawDesign {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::optional<std::vector<long long>> block_labels;
};

struct Violation {
  enum class Kind { structural, steiner };
  Kind kind = Kind::structural;
  std::string detail;
};

struct ValidityReport {
  bool ok = false;
  std::vector<Violation> violations;  // at most kMaxReportedViolations entries
  bool truncated = false;             // true when further violations were dropped
};

struct SumStats {
  long long min_sum = 0;
  long long max_sum = 0;
  long long difference_sum = 0;  // max_sum - min_sum
  Rational ratio_sum;            // max_sum / min_sum, exact
};

// labels[b] is the label of blocks[b]; a permutation of [0, |blocks|-1].
struct BlockLabeling {
  std::vector<long long> labels;
};

ValidityReport verify_sts(const RawDesign& candidate);

// Throws std::invalid_argument (message = first violation) unless verify_sts
// passes. Sorts each block ascending.
SteinerTripleSystem system_from_raw(const RawDesign& candidate);

long long block_sum(const Block& b);

// Works on any nonempty block list, not only full systems (throws
// std::invalid_argument on an empty list).
SumStats sum_stats(const std::vector<Block>& blocks);
SumStats sum_stats(const SteinerTripleSystem& system);

BlockLabeling identity_labeling(std::size_t block_count);
bool is_permutation_labeling(const BlockLabeling& labeling, std::size_t block_count);

// Entry p = sum of labels of the blocks containing p. Throws
// std::invalid_argument when the labeling is not a permutation of the right size.
std::vector<long long> dual_point_sums(const SteinerTripleSystem& system,
                                       const BlockLabeling& labeling);

// Pointwise x -> n-1-x on every block; block order preserved, blocks re-sorted.
SteinerTripleSystem complement_relabel(const SteinerTripleSystem& system);

// Physically rearranges blocks so position equals label; the result's file
// order then encodes the labeling. Throws std::invalid_argument when the
// labeling is not a permutation of the right size.
SteinerTripleSystem reorder_blocks(const SteinerTripleSystem& system,
                                   const BlockLabeling& labeling);

}  // namespace mmsts
