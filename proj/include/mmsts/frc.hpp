#pragma once

#include <vector>

#include "mmsts/design.hpp"
#include "mmsts/rational.hpp"

namespace mmsts {

enum class PlacementMode { blocks_as_nodes, dual_points_as_nodes };

// Replicated-chunk placement: every pair of nodes shares at most one chunk,
// every chunk sits on the same number of nodes, so a failed node can rebuild
// its content by downloading one chunk from each of repair_degree survivors.
struct FrcSystem {
  long long chunk_count = 0;
  int node_count = 0;
  std::vector<std::vector<long long>> placement;  // per node, sorted chunk ids
  int repair_degree = 0;
  std::vector<Rational> popularity;  // per chunk; defaults to the chunk id
};

struct BalanceReport {
  std::vector<Rational> node_sums;
  Rational min_sum;
  Rational max_sum;
  Rational spread;                       // max - min
  bool ratio_defined = false;            // false when min_sum is zero
  Rational spread_ratio;                 // max / min, when defined
};

struct RepairStep {
  long long chunk = 0;
  int donor = 0;
};

struct RepairTranscript {
  int failed_node = 0;
  std::vector<RepairStep> steps;  // one per lost chunk, chunk ascending
  bool distinct_donors = false;   // false only when no perfect matching exists
};

// blocks_as_nodes: one node per block holding its 3 points as chunks
// (repair_degree 3: one donor per lost point). dual_points_as_nodes: one node
// per point holding the labels of its (n-1)/2 blocks (repair_degree (n-1)/2);
// requires a labeling. Throws std::invalid_argument when the labeling is
// missing or not a permutation.
FrcSystem placement_from_design(const SteinerTripleSystem& system, PlacementMode mode,
                                const BlockLabeling* labeling = nullptr);

// Throws std::invalid_argument when the popularity vector length differs from
// chunk_count.
BalanceReport balance_report(const FrcSystem& frc);

// Selects one donor per lost chunk via maximum bipartite matching so donors
// are pairwise distinct whenever a perfect matching exists; otherwise falls
// back to the first holder of each chunk and flags the transcript. Throws
// std::runtime_error when some lost chunk has no surviving holder.
RepairTranscript simulate_repair(const FrcSystem& frc, int failed_node);

// Largest |placement[a] ∩ placement[b]| over node pairs a < b; 0 for a single
// node. The FRC invariant is a value <= 1.
long long max_pairwise_intersection(const FrcSystem& frc);

}  // namespace mmsts
