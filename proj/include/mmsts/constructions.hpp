#pragma once

#include <array>
#include <vector>

#include "mmsts/design.hpp"

namespace mmsts {

enum class Construction { bose, skolem };

// A pre-relabeling point: (x, i) with x in [0,m-1], i in [0,2], or the
// distinguished infinity point (Skolem only).
struct StructuredPoint {
  int x = 0;
  int i = 0;
  bool inf = false;

  bool operator==(const StructuredPoint& o) const {
    return inf == o.inf && (inf || (x == o.x && i == o.i));
  }
};

enum class BlockTag { type1, type2, type3 };

struct StructuredBlock {
  BlockTag tag = BlockTag::type1;
  int x = 0;
  int y = 0;  // Type-2 only
  int i = 0;  // Type-2 and Type-3
  std::array<StructuredPoint, 3> members;
};

// Blocks in construction order: Type 1 (x ascending), then Type 2 in YXI
// order (y outer ascending, x in [0,y-1], i in [0,2] inner), then for Skolem
// Type 3 (x outer ascending, i inner).
struct StructuredSystem {
  Construction construction = Construction::bose;
  int n = 0;
  int m = 0;  // n/3 (Bose) or (n-1)/3 (Skolem)
  std::vector<StructuredBlock> blocks;
};

// Dense index used to address structured points in a relabeling image:
// (x,i) -> i*m + x, infinity -> 3m.
int point_index(const StructuredPoint& p, int m);

// image[point_index(p)] = integer label of p; a bijection onto [0, n-1].
struct PointRelabeling {
  std::vector<int> image;
};

// ((m+1)/2)(x+y) mod m. Requires odd m >= 3 and operands in [0, m-1].
int bose_op(int x, int y, int m);

// (x+y mod m)/2 when that residue is even, else (residue+m-1)/2.
// Requires even m >= 2 and operands in [0, m-1].
int skolem_op(int x, int y, int m);

// n = 3m, n == 3 mod 6, n >= 9: m Type-1 blocks {(x,0),(x,1),(x,2)} plus
// 3*C(m,2) Type-2 blocks {(x,i),(y,i),(x op y, i+1 mod 3)}.
StructuredSystem construct_bose(int n);

// n = 3m+1, n == 1 mod 6, n >= 7: m/2 Type-1 + 3*C(m,2) Type-2 + 3m/2 Type-3
// blocks {inf, (x+m/2, i), (x, i+1 mod 3)}.
StructuredSystem construct_skolem(int n);

// The min-sum-optimal point relabelings. Level images: Bose [0,m-1], [2m,3m-1],
// [m,2m-1]; Skolem [0,m-1], {m} for infinity, [m+1,2m], [2m+1,3m].
PointRelabeling bose_mapping(int m);
PointRelabeling skolem_mapping(int m);

// (x,i) -> x + i*m, infinity -> 3m. Valid but deliberately naive; used as the
// contrast baseline (its min-sum falls below n).
PointRelabeling structured_identity_mapping(int m, Construction construction);

// Flattens structured blocks to sorted integer blocks, construction order
// preserved. Throws std::invalid_argument when the relabeling does not cover
// the system's points bijectively.
SteinerTripleSystem apply_relabeling(const StructuredSystem& system,
                                     const PointRelabeling& relabeling);

}  // namespace mmsts
