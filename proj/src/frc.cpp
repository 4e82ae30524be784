#include "mmsts/frc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace mmsts {

namespace {

// Kuhn's augmenting-path matching on the lost-chunk/donor graph. Donor
// candidate lists are visited in ascending node order, so the matching is
// deterministic.
struct Matcher {
  const std::vector<std::vector<int>>& candidates;  // per chunk, donor nodes
  std::map<int, int> donor_of;                      // donor node -> chunk index
  std::vector<int> matched_donor;                   // per chunk, -1 if none

  explicit Matcher(const std::vector<std::vector<int>>& cand)
      : candidates(cand), matched_donor(cand.size(), -1) {}

  bool augment(int chunk, std::vector<char>& visited, std::map<int, int>& donor_index) {
    for (int donor : candidates[chunk]) {
      int di = donor_index[donor];
      if (visited[di]) continue;
      visited[di] = 1;
      auto it = donor_of.find(donor);
      if (it == donor_of.end() || augment(it->second, visited, donor_index)) {
        donor_of[donor] = chunk;
        matched_donor[chunk] = donor;
        return true;
      }
    }
    return false;
  }

  int run() {
    std::map<int, int> donor_index;
    for (const auto& list : candidates)
      for (int donor : list)
        donor_index.emplace(donor, 0);
    int k = 0;
    for (auto& [donor, idx] : donor_index) idx = k++;
    int matched = 0;
    for (std::size_t chunk = 0; chunk < candidates.size(); ++chunk) {
      std::vector<char> visited(donor_index.size(), 0);
      if (augment(static_cast<int>(chunk), visited, donor_index)) ++matched;
    }
    return matched;
  }
};

}  // namespace

FrcSystem placement_from_design(const SteinerTripleSystem& system, PlacementMode mode,
                                const BlockLabeling* labeling) {
  FrcSystem frc;
  if (mode == PlacementMode::blocks_as_nodes) {
    frc.chunk_count = system.n;
    frc.node_count = static_cast<int>(system.blocks.size());
    frc.repair_degree = 3;
    frc.placement.reserve(system.blocks.size());
    for (const Block& b : system.blocks)
      frc.placement.push_back({b[0], b[1], b[2]});
  } else {
    if (labeling == nullptr)
      throw std::invalid_argument("dual placement requires a block labeling");
    if (!is_permutation_labeling(*labeling, system.blocks.size()))
      throw std::invalid_argument("dual placement labeling is not a permutation");
    frc.chunk_count = static_cast<long long>(system.blocks.size());
    frc.node_count = system.n;
    frc.repair_degree = (system.n - 1) / 2;
    frc.placement.assign(system.n, {});
    for (std::size_t b = 0; b < system.blocks.size(); ++b)
      for (int p : system.blocks[b]) frc.placement[p].push_back(labeling->labels[b]);
    for (auto& chunks : frc.placement) std::sort(chunks.begin(), chunks.end());
  }
  frc.popularity.reserve(frc.chunk_count);
  for (long long c = 0; c < frc.chunk_count; ++c) frc.popularity.emplace_back(c);
  return frc;
}

BalanceReport balance_report(const FrcSystem& frc) {
  if (static_cast<long long>(frc.popularity.size()) != frc.chunk_count)
    throw std::invalid_argument("popularity vector length " +
                                std::to_string(frc.popularity.size()) + " != chunk count " +
                                std::to_string(frc.chunk_count));
  BalanceReport report;
  report.node_sums.reserve(frc.placement.size());
  for (const auto& chunks : frc.placement) {
    Rational sum;
    for (long long c : chunks) {
      if (c < 0 || c >= frc.chunk_count)
        throw std::invalid_argument("placement refers to unknown chunk " + std::to_string(c));
      sum += frc.popularity[c];
    }
    report.node_sums.push_back(sum);
  }
  if (report.node_sums.empty()) throw std::invalid_argument("balance report of empty system");
  report.min_sum = report.max_sum = report.node_sums.front();
  for (const Rational& s : report.node_sums) {
    if (s < report.min_sum) report.min_sum = s;
    if (s > report.max_sum) report.max_sum = s;
  }
  report.spread = report.max_sum - report.min_sum;
  if (report.min_sum != Rational(0)) {
    report.ratio_defined = true;
    report.spread_ratio = report.max_sum / report.min_sum;
  }
  return report;
}

RepairTranscript simulate_repair(const FrcSystem& frc, int failed_node) {
  if (failed_node < 0 || failed_node >= frc.node_count)
    throw std::invalid_argument("failed node out of range");
  const auto& lost = frc.placement[failed_node];

  std::vector<std::vector<int>> candidates(lost.size());
  for (std::size_t k = 0; k < lost.size(); ++k) {
    for (int node = 0; node < frc.node_count; ++node) {
      if (node == failed_node) continue;
      const auto& chunks = frc.placement[node];
      if (std::binary_search(chunks.begin(), chunks.end(), lost[k]))
        candidates[k].push_back(node);
    }
    if (candidates[k].empty())
      throw std::runtime_error("chunk " + std::to_string(lost[k]) +
                               " is unrecoverable: no surviving holder");
  }

  Matcher matcher(candidates);
  int matched = matcher.run();

  RepairTranscript transcript;
  transcript.failed_node = failed_node;
  transcript.distinct_donors = matched == static_cast<int>(lost.size());
  for (std::size_t k = 0; k < lost.size(); ++k) {
    int donor = transcript.distinct_donors ? matcher.matched_donor[k] : candidates[k].front();
    transcript.steps.push_back({lost[k], donor});
  }
  return transcript;
}

long long max_pairwise_intersection(const FrcSystem& frc) {
  long long worst = 0;
  for (int a = 0; a < frc.node_count; ++a) {
    for (int b = a + 1; b < frc.node_count; ++b) {
      const auto& ca = frc.placement[a];
      const auto& cb = frc.placement[b];
      long long common = 0;
      std::size_t i = 0, j = 0;
      while (i < ca.size() && j < cb.size()) {
        if (ca[i] == cb[j]) { ++common; ++i; ++j; }
        else if (ca[i] < cb[j]) ++i;
        else ++j;
      }
      worst = std::max(worst, common);
    }
  }
  return worst;
}

}  // namespace mmsts
