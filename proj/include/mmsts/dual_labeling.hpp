#pragma once

#include <utility>
#include <vector>

#include "mmsts/constructions.hpp"
#include "mmsts/design.hpp"

namespace mmsts {

// Block orderings studied for the dual. YXI variants reorder Type-1 blocks
// (Bose: x descending) or interleave Type-3 labels (Skolem); natural variants
// list Type-1 ascending, Type-2 with x outer, and Type-3 with x outer.
enum class OrderingScheme { bose_yxi, bose_natural, skolem_yxi, skolem_natural };

bool scheme_matches(OrderingScheme scheme, Construction construction);
OrderingScheme scheme_for(Construction construction, bool yxi);

// Positional labeling realizing the scheme over the system's construction
// order. Throws std::invalid_argument on a scheme/construction mismatch.
BlockLabeling make_labeling(const StructuredSystem& system, OrderingScheme scheme);

// Per-block arithmetic label formulas; must agree with make_labeling.
// Bose YXI: l(B_x) = m-1-x, l(B_{x,y,i}) = m + i + 3x + 3y(y-1)/2.
// Skolem YXI: l(B_x) = x, l(B_{x,y,i}) = m/2 + i + 3x + 3y(y-1)/2,
//   l(B_{x,i}) = N - 3m/2 + (m/2 + 2x | x | m/2 + 2x + 1) for i = 0|1|2.
// Natural variants: position in the x-outer listing.
long long closed_form_block_label(OrderingScheme scheme, const StructuredBlock& block,
                                  int m, int n);

// All pairs (x, y), x < y, with x op y = z, via the closed-form case split
// (not brute force). Sorted by x. Cardinality (m-1)/2 for the Bose operation.
std::vector<std::pair<int, int>> inverse_pairs(int z, int m, Construction op);

// Sum of the labels of the blocks containing the point (z, i) under the
// scheme's labeling, as a closed-form piecewise cubic in n. YXI schemes only;
// the Skolem infinity point is not covered (its dual sum is the max-sum
// formula below). Throws std::invalid_argument on bad scheme/range.
long long closed_form_dual_point_sum(OrderingScheme scheme, int z, int i, int n);

// Closed-form dual min/max block-label sums for the mapped systems. Each
// formula is only claimed on a stated range and congruence class; outside it
// (including bose_yxi min at n in {9,15,21} and bose_yxi max at n = 9)
// std::domain_error is thrown and callers fall back to enumeration. The
// natural schemes have no stated max-sum formula.
long long dual_min_sum_formula(OrderingScheme scheme, int n);
long long dual_max_sum_formula(OrderingScheme scheme, int n);

}  // namespace mmsts
