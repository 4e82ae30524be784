#include "mmsts/bounds.hpp"

#include <stdexcept>

namespace mmsts {

namespace {

void require_steiner_params(long long n, long long k, long long t) {
  if (!(2 <= t && t < k && k < n))
    throw std::invalid_argument("Steiner bound parameters require 2 <= t < k < n");
}

void require_sts_n(int n) {
  if (n < 7 || (n % 6 != 1 && n % 6 != 3))
    throw std::invalid_argument("n must be 1 or 3 mod 6 and at least 7");
}

}  // namespace

Rational min_sum_upper_bound(long long n, long long k, long long t) {
  require_steiner_params(n, k, t);
  return Rational(n * (k - t + 1) + k * (t - 2), 2);
}

Rational max_sum_lower_bound(long long n, long long k, long long t) {
  require_steiner_params(n, k, t);
  return Rational(n * k + n * t - n - k * t, 2);
}

StsLowerBounds sts_difference_ratio_bounds(int n) {
  require_sts_n(n);
  return {n, Rational(2)};
}

Rational dual_min_sum_upper_bound(int n) {
  require_sts_n(n);
  long long nn = n;
  return Rational((nn - 1) * (nn - 3) * (nn + 2), 24);
}

bool satisfies_sts_lower_bounds(const SumStats& stats, int n) {
  StsLowerBounds lb = sts_difference_ratio_bounds(n);
  return stats.difference_sum >= lb.difference_lower && stats.ratio_sum >= lb.ratio_lower;
}

std::vector<BoundReport> sts_bound_reports(int n, const SumStats* stats) {
  require_sts_n(n);
  std::vector<BoundReport> reports;
  Rational min_upper = min_sum_upper_bound(n, 3, 2);
  Rational max_lower = max_sum_lower_bound(n, 3, 2);
  StsLowerBounds lb = sts_difference_ratio_bounds(n);
  Rational dual_upper = dual_min_sum_upper_bound(n);

  BoundReport a{"min_sum_upper", min_upper, std::nullopt};
  BoundReport b{"max_sum_lower", max_lower, std::nullopt};
  BoundReport c{"difference_sum_lower", Rational(lb.difference_lower), std::nullopt};
  BoundReport d{"ratio_sum_lower", lb.ratio_lower, std::nullopt};
  BoundReport e{"dual_min_sum_upper", dual_upper, std::nullopt};
  if (stats != nullptr) {
    a.satisfied = Rational(stats->min_sum) <= min_upper;
    b.satisfied = Rational(stats->max_sum) >= max_lower;
    c.satisfied = stats->difference_sum >= lb.difference_lower;
    d.satisfied = stats->ratio_sum >= lb.ratio_lower;
    // dual_min_sum_upper needs a labeling, not plain stats; left unchecked here.
  }
  reports.push_back(a);
  reports.push_back(b);
  reports.push_back(c);
  reports.push_back(d);
  reports.push_back(e);
  return reports;
}

}  // namespace mmsts
