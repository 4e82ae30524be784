#include "mmsts/search.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <stdexcept>
#include <thread>

namespace mmsts {

namespace {

constexpr long long kNoMin = LLONG_MAX;
constexpr long long kNoMax = LLONG_MIN;

void require_valid(const SteinerTripleSystem& system) {
  RawDesign raw;
  raw.n = system.n;
  for (const Block& b : system.blocks) raw.blocks.push_back({b[0], b[1], b[2]});
  if (!verify_sts(raw).ok) throw std::invalid_argument("search requires a valid STS");
}

std::vector<std::vector<int>> blocks_of_point(const SteinerTripleSystem& system) {
  std::vector<std::vector<int>> idx(system.n);
  for (std::size_t b = 0; b < system.blocks.size(); ++b)
    for (int p : system.blocks[b]) idx[p].push_back(static_cast<int>(b));
  return idx;
}

// Outcome of one independent partition of the search space.
struct Partition {
  bool found = false;
  Rational value;
  std::vector<int> sigma;
  std::vector<long long> labels;
  std::uint64_t nodes = 0;
  bool aborted = false;
};

bool better(Objective obj, const Rational& candidate, const Rational& incumbent) {
  if (obj == Objective::max_min_sum || obj == Objective::max_dual_min_sum)
    return candidate > incumbent;
  return candidate < incumbent;
}

// Merge rule shared by every partitioned search: strictly better value wins;
// on a tie the earlier partition (or lexicographically smaller witness) is kept.
void merge_into(Objective obj, Partition& total, const Partition& part) {
  total.nodes += part.nodes;
  total.aborted = total.aborted || part.aborted;
  if (!part.found) return;
  if (!total.found || better(obj, part.value, total.value)) {
    total.found = true;
    total.value = part.value;
    total.sigma = part.sigma;
    total.labels = part.labels;
  } else if (part.value == total.value &&
             ((!part.sigma.empty() && part.sigma < total.sigma) ||
              (!part.labels.empty() && part.labels < total.labels))) {
    total.sigma = part.sigma;
    total.labels = part.labels;
  }
}

// Runs fn(partition_index) for indices [0, count) with a fixed round-robin
// assignment to jobs threads. Partitions never share state, so scheduling
// cannot affect any result.
void run_partitions(int count, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int t = 0; t < jobs; ++t) {
    threads.emplace_back([t, count, jobs, &fn] {
      for (int i = t; i < count; i += jobs) fn(i);
    });
  }
  for (std::thread& th : threads) th.join();
}

// ---------------------------------------------------------------------------
// Reduced search for max_min_sum.

struct ReducedCtx {
  const SteinerTripleSystem& system;
  std::uint64_t budget;  // shared across partitions when positive
  std::uint64_t used_nodes = 0;
};

void reduced_partition(ReducedCtx& ctx, int x0, Partition& out) {
  const int n = ctx.system.n;
  const int half = (n - 1) / 2;

  // The two non-x0 points of each block through x0, in system block order.
  std::vector<std::pair<int, int>> pairs;
  for (const Block& b : ctx.system.blocks) {
    if (b[0] == x0 || b[1] == x0 || b[2] == x0) {
      int u[2], k = 0;
      for (int p : b)
        if (p != x0) u[k++] = p;
      pairs.emplace_back(u[0], u[1]);  // blocks are sorted, so u[0] < u[1]
    }
  }

  std::vector<int> assign(half);
  for (int k = 0; k < half; ++k) assign[k] = k + 1;

  std::vector<int> sigma(n);
  long long best = kNoMax;
  std::vector<int> best_sigma;

  do {
    for (std::uint64_t bits = 0; bits < (1ULL << half); ++bits) {
      if (ctx.budget > 0 && ctx.used_nodes + out.nodes >= ctx.budget) {
        out.aborted = true;
        goto done;
      }
      ++out.nodes;
      sigma[x0] = 0;
      for (int k = 0; k < half; ++k) {
        int small = assign[k], large = n - assign[k];
        if (bits >> k & 1ULL) std::swap(small, large);
        sigma[pairs[k].first] = small;
        sigma[pairs[k].second] = large;
      }
      long long min_sum = kNoMin;
      for (const Block& b : ctx.system.blocks) {
        long long s = static_cast<long long>(sigma[b[0]]) + sigma[b[1]] + sigma[b[2]];
        min_sum = std::min(min_sum, s);
      }
      if (min_sum > best || (min_sum == best && sigma < best_sigma)) {
        best = min_sum;
        best_sigma = sigma;
      }
    }
  } while (std::next_permutation(assign.begin(), assign.end()));

done:
  if (best != kNoMax) {
    out.found = true;
    out.value = Rational(best);
    out.sigma = std::move(best_sigma);
  }
}

// ---------------------------------------------------------------------------
// Full search over point permutations (max_min_sum, min_difference_sum,
// min_ratio_sum). DFS assigns sigma[0], sigma[1], ... with candidate values
// ascending, which enumerates sigma vectors in lexicographic order; pruning
// never cuts a branch that could still strictly beat the incumbent, so the
// first optimum found is the lexicographically smallest one.

struct PermCtx {
  const SteinerTripleSystem& system;
  Objective objective;
  std::vector<std::vector<int>> by_point;
  std::uint64_t budget;
  std::uint64_t used_nodes = 0;

  std::vector<char> used{};
  std::vector<int> sigma{};
  std::vector<long long> partial{};  // per-block partial sum
  std::vector<int> count{};          // per-block assigned points

  bool found = false;
  long long best_min = kNoMax;   // max_min_sum incumbent
  long long best_diff = kNoMin;  // min_difference_sum incumbent
  Rational best_ratio{};         // min_ratio_sum incumbent
  std::vector<int> best_sigma{};
  std::uint64_t nodes = 0;
  bool aborted = false;
};

// cur_min/cur_max range over completed blocks only; kNoMin/kNoMax until the
// first block completes.
bool perm_prune(const PermCtx& ctx, long long cur_min, long long cur_max) {
  switch (ctx.objective) {
    case Objective::max_min_sum:
      // min over completed blocks only shrinks as blocks complete.
      return cur_min != kNoMin && ctx.found && cur_min <= ctx.best_min;
    case Objective::min_difference_sum:
      return cur_min != kNoMin && ctx.found && cur_max - cur_min >= ctx.best_diff;
    case Objective::min_ratio_sum:
      return cur_min != kNoMin && ctx.found && Rational(cur_max, cur_min) >= ctx.best_ratio;
    default:
      return false;
  }
}

void perm_leaf(PermCtx& ctx, long long cur_min, long long cur_max) {
  switch (ctx.objective) {
    case Objective::max_min_sum:
      if (!ctx.found || cur_min > ctx.best_min) {
        ctx.found = true;
        ctx.best_min = cur_min;
        ctx.best_sigma = ctx.sigma;
      }
      break;
    case Objective::min_difference_sum:
      if (!ctx.found || cur_max - cur_min < ctx.best_diff) {
        ctx.found = true;
        ctx.best_diff = cur_max - cur_min;
        ctx.best_sigma = ctx.sigma;
      }
      break;
    case Objective::min_ratio_sum: {
      Rational r(cur_max, cur_min);
      if (!ctx.found || r < ctx.best_ratio) {
        ctx.found = true;
        ctx.best_ratio = r;
        ctx.best_sigma = ctx.sigma;
      }
      break;
    }
    default:
      break;
  }
}

void perm_dfs(PermCtx& ctx, int point, long long cur_min, long long cur_max) {
  const int n = ctx.system.n;
  if (point == n) {
    perm_leaf(ctx, cur_min, cur_max);
    return;
  }
  for (int v = 0; v < n && !ctx.aborted; ++v) {
    if (ctx.used[v]) continue;
    if (ctx.budget > 0 && ctx.used_nodes + ctx.nodes >= ctx.budget) {
      ctx.aborted = true;
      return;
    }
    ++ctx.nodes;
    ctx.used[v] = 1;
    ctx.sigma[point] = v;
    long long next_min = cur_min, next_max = cur_max;
    for (int b : ctx.by_point[point]) {
      ctx.partial[b] += v;
      if (++ctx.count[b] == 3) {
        next_min = next_min == kNoMin ? ctx.partial[b] : std::min(next_min, ctx.partial[b]);
        next_max = next_max == kNoMax ? ctx.partial[b] : std::max(next_max, ctx.partial[b]);
      }
    }
    if (!perm_prune(ctx, next_min, next_max)) perm_dfs(ctx, point + 1, next_min, next_max);
    for (int b : ctx.by_point[point]) {
      ctx.partial[b] -= v;
      --ctx.count[b];
    }
    ctx.used[v] = 0;
  }
}

void perm_partition(const SteinerTripleSystem& system, Objective objective, int v0,
                    std::uint64_t budget, std::uint64_t used_nodes, Partition& out) {
  PermCtx ctx{system, objective, blocks_of_point(system), budget};
  ctx.used_nodes = used_nodes;
  const int n = system.n;
  ctx.used.assign(n, 0);
  ctx.sigma.assign(n, 0);
  ctx.partial.assign(system.blocks.size(), 0);
  ctx.count.assign(system.blocks.size(), 0);

  // Fix sigma[0] = v0, then search points 1..n-1.
  ctx.used[v0] = 1;
  ctx.sigma[0] = v0;
  for (int b : ctx.by_point[0]) {
    ctx.partial[b] += v0;
    ++ctx.count[b];
  }
  perm_dfs(ctx, 1, kNoMin, kNoMax);

  out.nodes = ctx.nodes;
  out.aborted = ctx.aborted;
  if (ctx.found) {
    out.found = true;
    out.sigma = std::move(ctx.best_sigma);
    switch (objective) {
      case Objective::max_min_sum: out.value = Rational(ctx.best_min); break;
      case Objective::min_difference_sum: out.value = Rational(ctx.best_diff); break;
      case Objective::min_ratio_sum: out.value = ctx.best_ratio; break;
      default: break;
    }
  }
}

// ---------------------------------------------------------------------------
// Branch and bound over block labelings for max_dual_min_sum. Labels are
// assigned in increasing order, so after assigning 0..t-1 the unassigned
// labels are exactly {t, ..., N-1} and the best possible completion of a point
// with c unassigned blocks adds the c largest labels overall. That bound is
// admissible, so pruning "bound <= incumbent" preserves the exact optimum.

struct DualCtx {
  const SteinerTripleSystem& system;
  std::vector<std::vector<int>> by_point;
  std::vector<long long> topc;  // topc[c] = sum of the c largest labels
  std::uint64_t budget;
  std::uint64_t used_nodes = 0;

  std::vector<char> assigned{};
  std::vector<long long> label{};
  std::vector<long long> partial{};  // per-point sum of assigned labels
  std::vector<int> open_blocks{};    // per-point count of unassigned blocks

  long long incumbent = 0;           // seeded by the caller
  bool improved = false;
  std::vector<long long> best_labels{};
  std::uint64_t nodes = 0;
  bool aborted = false;
};

long long dual_bound(const DualCtx& ctx) {
  long long bound = kNoMin;
  for (int p = 0; p < ctx.system.n; ++p)
    bound = std::min(bound, ctx.partial[p] + ctx.topc[ctx.open_blocks[p]]);
  return bound;
}

void dual_dfs(DualCtx& ctx, int t) {
  const int N = static_cast<int>(ctx.system.blocks.size());
  if (t == N) {
    long long value = kNoMin;
    for (int p = 0; p < ctx.system.n; ++p) value = std::min(value, ctx.partial[p]);
    if (value > ctx.incumbent) {
      ctx.incumbent = value;
      ctx.improved = true;
      ctx.best_labels = ctx.label;
    }
    return;
  }
  for (int b = 0; b < N && !ctx.aborted; ++b) {
    if (ctx.assigned[b]) continue;
    if (ctx.budget > 0 && ctx.used_nodes + ctx.nodes >= ctx.budget) {
      ctx.aborted = true;
      return;
    }
    ++ctx.nodes;
    ctx.assigned[b] = 1;
    ctx.label[b] = t;
    for (int p : ctx.system.blocks[b]) {
      ctx.partial[p] += t;
      --ctx.open_blocks[p];
    }
    if (dual_bound(ctx) > ctx.incumbent) dual_dfs(ctx, t + 1);
    for (int p : ctx.system.blocks[b]) {
      ctx.partial[p] -= t;
      ++ctx.open_blocks[p];
    }
    ctx.assigned[b] = 0;
  }
}

void dual_partition(const SteinerTripleSystem& system, int b0, long long seed,
                    std::uint64_t budget, std::uint64_t used_nodes, Partition& out) {
  const int N = static_cast<int>(system.blocks.size());
  DualCtx ctx{system, blocks_of_point(system), {}, budget};
  ctx.used_nodes = used_nodes;
  ctx.topc.assign(system.n, 0);
  for (int c = 1; c < system.n; ++c)
    ctx.topc[c] = ctx.topc[c - 1] + (N - c);
  ctx.assigned.assign(N, 0);
  ctx.label.assign(N, -1);
  ctx.partial.assign(system.n, 0);
  ctx.open_blocks.assign(system.n, 0);
  for (int p = 0; p < system.n; ++p)
    ctx.open_blocks[p] = static_cast<int>(ctx.by_point[p].size());
  ctx.incumbent = seed;

  // Partition: block b0 receives label 0.
  ctx.assigned[b0] = 1;
  ctx.label[b0] = 0;
  for (int p : system.blocks[b0]) --ctx.open_blocks[p];
  if (dual_bound(ctx) > ctx.incumbent) dual_dfs(ctx, 1);

  out.nodes = ctx.nodes;
  out.aborted = ctx.aborted;
  if (ctx.improved) {
    out.found = true;
    out.value = Rational(ctx.incumbent);
    out.labels = std::move(ctx.best_labels);
  }
}

}  // namespace

SteinerTripleSystem relabel_points(const SteinerTripleSystem& system,
                                   const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != system.n)
    throw std::invalid_argument("relabel_points: permutation size mismatch");
  SteinerTripleSystem out;
  out.n = system.n;
  out.blocks.reserve(system.blocks.size());
  for (const Block& b : system.blocks) {
    Block nb = {sigma[b[0]], sigma[b[1]], sigma[b[2]]};
    std::sort(nb.begin(), nb.end());
    out.blocks.push_back(nb);
  }
  return out;
}

SearchResult reduced_maxmin_search(const SearchTask& task) {
  if (task.objective != Objective::max_min_sum)
    throw std::invalid_argument("reduced mode only supports the max_min_sum objective");
  require_valid(task.system);
  const int n = task.system.n;
  if (n > 19 && !task.allow_large)
    throw std::invalid_argument("reduced search beyond n = 19 requires allow_large");

  const int jobs = task.budget > 0 ? 1 : std::max(1, task.jobs);
  std::vector<Partition> parts(n);
  ReducedCtx ctx{task.system, task.budget};
  run_partitions(n, jobs, [&](int x0) {
    reduced_partition(ctx, x0, parts[x0]);
    if (task.budget > 0) ctx.used_nodes += parts[x0].nodes;  // sequential when budgeted
  });

  Partition total;
  for (const Partition& p : parts) merge_into(Objective::max_min_sum, total, p);

  SearchResult result;
  result.best = total.value;
  result.witness_relabeling = total.sigma;
  result.nodes = total.nodes;
  result.exhaustive = !total.aborted;
  return result;
}

SearchResult full_permutation_search(const SearchTask& task) {
  require_valid(task.system);
  const int n = task.system.n;
  if (n > 9 && task.budget == 0 && !task.allow_large)
    throw std::invalid_argument(
        "full search beyond n = 9 requires a budget or allow_large");

  const int jobs = task.budget > 0 ? 1 : std::max(1, task.jobs);
  SearchResult result;

  if (task.objective == Objective::max_dual_min_sum) {
    const int N = static_cast<int>(task.system.blocks.size());
    // Seed: the identity (input-order) labeling; branch and bound then proves
    // optimality or finds a strict improvement.
    BlockLabeling identity = identity_labeling(task.system.blocks.size());
    std::vector<long long> seed_sums = dual_point_sums(task.system, identity);
    long long seed = *std::min_element(seed_sums.begin(), seed_sums.end());

    std::vector<Partition> parts(N);
    std::uint64_t used = 0;
    run_partitions(N, jobs, [&](int b0) {
      dual_partition(task.system, b0, seed, task.budget, used, parts[b0]);
      if (task.budget > 0) used += parts[b0].nodes;
    });

    Partition total;
    total.found = true;
    total.value = Rational(seed);
    total.labels = identity.labels;
    for (const Partition& p : parts) merge_into(Objective::max_dual_min_sum, total, p);

    result.best = total.value;
    result.witness_labels = total.labels;
    result.nodes = total.nodes;
    result.exhaustive = !total.aborted;
    return result;
  }

  std::vector<Partition> parts(n);
  std::uint64_t used = 0;
  run_partitions(n, jobs, [&](int v0) {
    perm_partition(task.system, task.objective, v0, task.budget, used, parts[v0]);
    if (task.budget > 0) used += parts[v0].nodes;
  });

  Partition total;
  for (const Partition& p : parts) merge_into(task.objective, total, p);

  result.best = total.value;
  result.witness_relabeling = total.sigma;
  result.nodes = total.nodes;
  result.exhaustive = !total.aborted;
  return result;
}

SearchResult run_search(const SearchTask& task) {
  if (task.mode == SearchMode::reduced) return reduced_maxmin_search(task);
  return full_permutation_search(task);
}

}  // namespace mmsts
