#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmsts/design.hpp"
#include "mmsts/rational.hpp"

namespace mmsts {

struct BoundReport {
  std::string name;
  Rational value;
  // Set when the bound was checked against a concrete design's stats.
  std::optional<bool> satisfied;
};

// (n(k-t+1) + k(t-2)) / 2, an upper bound on the min-sum of any Steiner
// system S(t,k,n). Requires 2 <= t < k < n. For (k,t) = (3,2) this is n.
Rational min_sum_upper_bound(long long n, long long k, long long t);

// (nk + nt - n - kt) / 2, a lower bound on the max-sum. For (3,2): 2n-3.
Rational max_sum_lower_bound(long long n, long long k, long long t);

struct StsLowerBounds {
  long long difference_lower = 0;  // n
  Rational ratio_lower;            // 2
};

// Lower bounds on difference-sum and ratio-sum of a full STS(n).
// Requires n == 1 or 3 mod 6, n >= 7.
StsLowerBounds sts_difference_ratio_bounds(int n);

// (n-1)(n-3)(n+2)/24, an upper bound on the dual min-sum under any labeling.
Rational dual_min_sum_upper_bound(int n);

// True iff stats satisfy difference_sum >= n and ratio_sum >= 2.
bool satisfies_sts_lower_bounds(const SumStats& stats, int n);

// All bounds applicable to an STS(n) with k=3, t=2; when stats are supplied
// each report carries its satisfied flag.
std::vector<BoundReport> sts_bound_reports(int n, const SumStats* stats = nullptr);

}  // namespace mmsts
