#include "mmsts/design.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace mmsts {

namespace {

// Index of the pair {a,b}, a < b, in the row-major listing of all pairs over n points.
std::size_t pair_index(int a, int b, int n) {
  return static_cast<std::size_t>(a) * n - static_cast<std::size_t>(a) * (a + 1) / 2 +
         static_cast<std::size_t>(b - a - 1);
}

struct ViolationSink {
  ValidityReport& report;
  void add(Violation::Kind kind, std::string detail) {
    if (report.violations.size() < kMaxReportedViolations) {
      report.violations.push_back({kind, std::move(detail)});
    } else {
      report.truncated = true;
    }
  }
  bool full() const { return report.truncated; }
};

}  // namespace

ValidityReport verify_sts(const RawDesign& candidate) {
  ValidityReport report;
  ViolationSink sink{report};
  const int n = candidate.n;

  if (n < 7 || n > kMaxPoints) {
    sink.add(Violation::Kind::structural,
             "n = " + std::to_string(n) + " outside supported range [7, " +
                 std::to_string(kMaxPoints) + "]");
  } else if (n % 6 != 1 && n % 6 != 3) {
    sink.add(Violation::Kind::structural,
             "n = " + std::to_string(n) + " is not 1 or 3 mod 6; no STS exists");
  }

  bool shapes_ok = true;
  for (std::size_t b = 0; b < candidate.blocks.size(); ++b) {
    const auto& blk = candidate.blocks[b];
    if (blk.size() != 3) {
      sink.add(Violation::Kind::structural,
               "block " + std::to_string(b) + " has " + std::to_string(blk.size()) +
                   " points, expected 3");
      shapes_ok = false;
      continue;
    }
    bool in_range = true;
    for (int p : blk) {
      if (p < 0 || p >= n) {
        sink.add(Violation::Kind::structural,
                 "block " + std::to_string(b) + " contains out-of-range point " +
                     std::to_string(p));
        shapes_ok = in_range = false;
        break;
      }
    }
    if (in_range && (blk[0] == blk[1] || blk[0] == blk[2] || blk[1] == blk[2])) {
      sink.add(Violation::Kind::structural,
               "block " + std::to_string(b) + " repeats a point");
      shapes_ok = false;
    }
  }

  if (!report.violations.empty() || !shapes_ok) {
    report.ok = false;
    return report;
  }

  const std::size_t expected_blocks =
      static_cast<std::size_t>(n) * (n - 1) / 6;
  if (candidate.blocks.size() != expected_blocks) {
    sink.add(Violation::Kind::steiner,
             "block count " + std::to_string(candidate.blocks.size()) + " != n(n-1)/6 = " +
                 std::to_string(expected_blocks));
  }

  // Pair coverage: each of the C(n,2) pairs must appear exactly once.
  const std::size_t pair_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint8_t> covered(pair_count, 0);
  std::size_t covered_total = 0;
  for (std::size_t b = 0; b < candidate.blocks.size() && !sink.full(); ++b) {
    std::array<int, 3> blk = {candidate.blocks[b][0], candidate.blocks[b][1],
                              candidate.blocks[b][2]};
    std::sort(blk.begin(), blk.end());
    const std::array<std::pair<int, int>, 3> pairs = {
        std::pair{blk[0], blk[1]}, {blk[0], blk[2]}, {blk[1], blk[2]}};
    for (auto [a, c] : pairs) {
      std::size_t idx = pair_index(a, c, n);
      if (covered[idx]) {
        sink.add(Violation::Kind::steiner,
                 "pair {" + std::to_string(a) + "," + std::to_string(c) +
                     "} covered more than once (block " + std::to_string(b) + ")");
      } else {
        covered[idx] = 1;
        ++covered_total;
      }
      if (sink.full()) break;
    }
  }
  if (covered_total != pair_count && !sink.full()) {
    for (int a = 0; a < n && !sink.full(); ++a) {
      for (int b = a + 1; b < n && !sink.full(); ++b) {
        if (!covered[pair_index(a, b, n)]) {
          sink.add(Violation::Kind::steiner,
                   "pair {" + std::to_string(a) + "," + std::to_string(b) + "} uncovered");
        }
      }
    }
  }

  // Replication: every point in exactly (n-1)/2 blocks. Implied by the above
  // when they all hold, but reported separately so the offending point is named.
  std::vector<int> occurrences(n, 0);
  for (const auto& blk : candidate.blocks)
    for (int p : blk) ++occurrences[p];
  const int r = (n - 1) / 2;
  for (int p = 0; p < n && !sink.full(); ++p) {
    if (occurrences[p] != r) {
      sink.add(Violation::Kind::steiner,
               "point " + std::to_string(p) + " occurs in " + std::to_string(occurrences[p]) +
                   " blocks, expected " + std::to_string(r));
    }
  }

  report.ok = report.violations.empty() && !report.truncated;
  return report;
}

SteinerTripleSystem system_from_raw(const RawDesign& candidate) {
  ValidityReport report = verify_sts(candidate);
  if (!report.ok) {
    throw std::invalid_argument(report.violations.empty()
                                    ? "invalid design"
                                    : "invalid design: " + report.violations.front().detail);
  }
  SteinerTripleSystem system;
  system.n = candidate.n;
  system.blocks.reserve(candidate.blocks.size());
  for (const auto& blk : candidate.blocks) {
    Block b = {blk[0], blk[1], blk[2]};
    std::sort(b.begin(), b.end());
    system.blocks.push_back(b);
  }
  return system;
}

long long block_sum(const Block& b) {
  return static_cast<long long>(b[0]) + b[1] + b[2];
}

SumStats sum_stats(const std::vector<Block>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("sum_stats: empty block list");
  SumStats stats;
  stats.min_sum = stats.max_sum = block_sum(blocks.front());
  for (const Block& b : blocks) {
    long long s = block_sum(b);
    stats.min_sum = std::min(stats.min_sum, s);
    stats.max_sum = std::max(stats.max_sum, s);
  }
  stats.difference_sum = stats.max_sum - stats.min_sum;
  stats.ratio_sum = Rational(stats.max_sum, stats.min_sum);
  return stats;
}

SumStats sum_stats(const SteinerTripleSystem& system) { return sum_stats(system.blocks); }

BlockLabeling identity_labeling(std::size_t block_count) {
  BlockLabeling labeling;
  labeling.labels.resize(block_count);
  for (std::size_t b = 0; b < block_count; ++b) labeling.labels[b] = static_cast<long long>(b);
  return labeling;
}

bool is_permutation_labeling(const BlockLabeling& labeling, std::size_t block_count) {
  if (labeling.labels.size() != block_count) return false;
  std::vector<std::uint8_t> seen(block_count, 0);
  for (long long l : labeling.labels) {
    if (l < 0 || l >= static_cast<long long>(block_count) || seen[l]) return false;
    seen[l] = 1;
  }
  return true;
}

std::vector<long long> dual_point_sums(const SteinerTripleSystem& system,
                                       const BlockLabeling& labeling) {
  if (labeling.labels.size() != system.blocks.size())
    throw std::invalid_argument("dual_point_sums: labeling size mismatch");
  if (!is_permutation_labeling(labeling, system.blocks.size()))
    throw std::invalid_argument("dual_point_sums: labeling is not a permutation");
  std::vector<long long> sums(system.n, 0);
  for (std::size_t b = 0; b < system.blocks.size(); ++b)
    for (int p : system.blocks[b]) sums[p] += labeling.labels[b];
  return sums;
}

SteinerTripleSystem reorder_blocks(const SteinerTripleSystem& system,
                                   const BlockLabeling& labeling) {
  if (!is_permutation_labeling(labeling, system.blocks.size()))
    throw std::invalid_argument("reorder_blocks: labeling is not a permutation");
  SteinerTripleSystem out;
  out.n = system.n;
  out.blocks.resize(system.blocks.size());
  for (std::size_t b = 0; b < system.blocks.size(); ++b)
    out.blocks[labeling.labels[b]] = system.blocks[b];
  return out;
}

SteinerTripleSystem complement_relabel(const SteinerTripleSystem& system) {
  SteinerTripleSystem out;
  out.n = system.n;
  out.blocks.reserve(system.blocks.size());
  for (const Block& b : system.blocks) {
    Block c = {system.n - 1 - b[2], system.n - 1 - b[1], system.n - 1 - b[0]};
    out.blocks.push_back(c);
  }
  return out;
}

}  // namespace mmsts
