#include "mmsts/dual_labeling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "mmsts/rational.hpp"

namespace mmsts {

namespace {

// Position of the pair (x, y), x < y <= m-1, in the x-outer listing
// (0,1),(0,2),...,(0,m-1),(1,2),... used by the natural orderings.
long long pair_pos_x_outer(int x, int y, int m) {
  return static_cast<long long>(x) * (2 * m - x - 1) / 2 + (y - x - 1);
}

// Position in the y-outer listing (0,1),(0,2),(1,2),(0,3),... used by YXI:
// all pairs with smaller y precede, giving y(y-1)/2 + x.
long long pair_pos_y_outer(int x, int y) {
  return static_cast<long long>(y) * (y - 1) / 2 + x;
}

long long block_total(int n) { return static_cast<long long>(n) * (n - 1) / 6; }

void require_scheme_range(OrderingScheme scheme, int n) {
  bool bose = scheme == OrderingScheme::bose_yxi || scheme == OrderingScheme::bose_natural;
  if (bose && (n % 6 != 3 || n < 9))
    throw std::invalid_argument("Bose schemes require n == 3 mod 6, n >= 9");
  if (!bose && (n % 6 != 1 || n < 7))
    throw std::invalid_argument("Skolem schemes require n == 1 mod 6, n >= 7");
}

long long integral(const Rational& v) { return v.as_integer(); }

// Piecewise cubic for the Bose YXI dual sum at the point (z, i); j = (i-1) mod 3.
long long bose_yxi_dual_sum(int z, int i, long long n) {
  long long j = ((i - 1) % 3 + 3) % 3;
  long long m = n / 3;
  long long c = 16 * i + 8 * j;
  long long z2 = static_cast<long long>(z) * z;
  long long z3 = z2 * z;
  Rational nn(n);
  Rational v;
  if (z <= (m - 1) / 2) {
    v = Rational(5, 144) * nn * nn * nn - Rational(6 * z + 15, 144) * nn * nn -
        Rational(12 * z2 - 84 * z - c - 25, 48) * nn +
        Rational(64 * z3 - 84 * z2 - 158 * z - c - 25, 16);
  } else {
    v = Rational(1, 48) * nn * nn * nn + Rational(42 * z - 39, 144) * nn * nn -
        Rational(84 * z2 - 108 * z - c - 55, 48) * nn +
        Rational(64 * z3 - 84 * z2 - 158 * z - c - 25, 16);
  }
  return integral(v);
}

// Piecewise cubic for the Skolem YXI dual sum at (z, i); the infinity point is
// excluded (its dual sum equals the scheme's max-sum formula).
long long skolem_yxi_dual_sum(int z, int i, long long n) {
  long long j = ((i - 1) % 3 + 3) % 3;
  long long m = (n - 1) / 3;
  long long z2 = static_cast<long long>(z) * z;
  long long z3 = z2 * z;
  Rational nn(n);
  Rational v;
  if (z < m / 2) {
    Rational tail = j == 0   ? Rational(n - 1, 6) + Rational(2 * z)
                    : j == 1 ? Rational(z)
                             : Rational(n - 1, 6) + Rational(2 * z + 1);
    v = Rational(5, 144) * nn * nn * nn - Rational(2 * z + 7, 48) * nn * nn -
        Rational(36 * z2 - 228 * z - 3 - 48 * i - 24 * j, 144) * nn +
        Rational(576 * z3 - 828 * z2 - 1518 * z + 13 - 192 * i - 168 * j, 144) + tail;
  } else {
    Rational tail = i == 0 ? Rational(2 * z) : i == 1 ? Rational(z) : Rational(2 * z + 1);
    v = Rational(1, 48) * nn * nn * nn + Rational(14 * z - 5, 48) * nn * nn -
        Rational(84 * z2 + 4 * z - 47 - 16 * i - 8 * j, 48) * nn +
        Rational(192 * z3 + 84 * z2 - 346 * z - 187 - 64 * i - 8 * j, 48) + tail;
  }
  return integral(v);
}

}  // namespace

bool scheme_matches(OrderingScheme scheme, Construction construction) {
  bool bose = scheme == OrderingScheme::bose_yxi || scheme == OrderingScheme::bose_natural;
  return bose == (construction == Construction::bose);
}

OrderingScheme scheme_for(Construction construction, bool yxi) {
  if (construction == Construction::bose)
    return yxi ? OrderingScheme::bose_yxi : OrderingScheme::bose_natural;
  return yxi ? OrderingScheme::skolem_yxi : OrderingScheme::skolem_natural;
}

BlockLabeling make_labeling(const StructuredSystem& system, OrderingScheme scheme) {
  if (!scheme_matches(scheme, system.construction))
    throw std::invalid_argument("ordering scheme does not match the construction");

  // Positional counting: list construction-order block indices in the
  // scheme's sequence, then label each block by its position in that list.
  // Kept independent of closed_form_block_label so the two can cross-check.
  std::vector<std::size_t> type1, type2, type3;
  for (std::size_t b = 0; b < system.blocks.size(); ++b) {
    switch (system.blocks[b].tag) {
      case BlockTag::type1: type1.push_back(b); break;
      case BlockTag::type2: type2.push_back(b); break;
      case BlockTag::type3: type3.push_back(b); break;
    }
  }
  // Construction order already lists Type 1 by x ascending and Type 2 in YXI
  // order (y outer, x, i inner).
  std::vector<std::size_t> seq;
  seq.reserve(system.blocks.size());
  auto append = [&seq](const std::vector<std::size_t>& part) {
    seq.insert(seq.end(), part.begin(), part.end());
  };
  auto sorted_by = [this_sys = &system](std::vector<std::size_t> part, auto key) {
    std::sort(part.begin(), part.end(), [&](std::size_t a, std::size_t b) {
      return key(this_sys->blocks[a]) < key(this_sys->blocks[b]);
    });
    return part;
  };
  auto xyi_key = [](const StructuredBlock& b) { return std::tuple(b.x, b.y, b.i); };
  auto xi_key = [](const StructuredBlock& b) { return std::tuple(b.x, b.i); };

  switch (scheme) {
    case OrderingScheme::bose_yxi:
      append(sorted_by(type1, [](const StructuredBlock& b) { return -b.x; }));
      append(type2);
      break;
    case OrderingScheme::bose_natural:
      append(type1);
      append(sorted_by(type2, xyi_key));
      break;
    case OrderingScheme::skolem_yxi:
      append(type1);
      append(type2);
      // Explicit interleaving: all i = 1 blocks by x ascending, then for each
      // x ascending the i = 0 block followed by the i = 2 block.
      append(sorted_by(type3, [](const StructuredBlock& b) {
        return std::tuple(b.i == 1 ? 0 : 1, b.x, b.i);
      }));
      break;
    case OrderingScheme::skolem_natural:
      append(type1);
      append(sorted_by(type2, xyi_key));
      append(sorted_by(type3, xi_key));
      break;
  }

  BlockLabeling labeling;
  labeling.labels.assign(system.blocks.size(), 0);
  for (std::size_t pos = 0; pos < seq.size(); ++pos)
    labeling.labels[seq[pos]] = static_cast<long long>(pos);
  return labeling;
}

long long closed_form_block_label(OrderingScheme scheme, const StructuredBlock& block,
                                  int m, int n) {
  require_scheme_range(scheme, n);
  const long long N = block_total(n);
  switch (scheme) {
    case OrderingScheme::bose_yxi:
      if (block.tag == BlockTag::type1) return m - 1 - block.x;
      if (block.tag == BlockTag::type2)
        return m + block.i + 3LL * block.x +
               3 * (static_cast<long long>(block.y) * (block.y - 1) / 2);
      break;
    case OrderingScheme::bose_natural:
      if (block.tag == BlockTag::type1) return block.x;
      if (block.tag == BlockTag::type2)
        return m + 3 * pair_pos_x_outer(block.x, block.y, m) + block.i;
      break;
    case OrderingScheme::skolem_yxi:
      if (block.tag == BlockTag::type1) return block.x;
      if (block.tag == BlockTag::type2)
        return m / 2 + block.i + 3LL * block.x +
               3 * (static_cast<long long>(block.y) * (block.y - 1) / 2);
      if (block.tag == BlockTag::type3) {
        long long base = N - 3LL * m / 2;
        if (block.i == 0) return base + m / 2 + 2LL * block.x;
        if (block.i == 1) return base + block.x;
        return base + m / 2 + 2LL * block.x + 1;
      }
      break;
    case OrderingScheme::skolem_natural:
      if (block.tag == BlockTag::type1) return block.x;
      if (block.tag == BlockTag::type2)
        return m / 2 + 3 * pair_pos_x_outer(block.x, block.y, m) + block.i;
      if (block.tag == BlockTag::type3) return N - 3LL * m / 2 + 3LL * block.x + block.i;
      break;
  }
  throw std::invalid_argument("block tag not valid for this ordering scheme");
}

std::vector<std::pair<int, int>> inverse_pairs(int z, int m, Construction op) {
  if (op == Construction::bose && (m < 3 || m % 2 == 0))
    throw std::invalid_argument("Bose inverse pairs require odd m >= 3");
  if (op == Construction::skolem && (m < 2 || m % 2 == 1))
    throw std::invalid_argument("Skolem inverse pairs require even m >= 2");
  if (z < 0 || z >= m) throw std::invalid_argument("z must lie in [0, m-1]");

  std::vector<std::pair<int, int>> pairs;
  if (op == Construction::bose) {
    if (z <= (m - 1) / 2) {
      for (int x = 0; x < z; ++x) pairs.emplace_back(x, 2 * z - x);
      for (int x = 2 * z + 1; x <= z + (m - 1) / 2; ++x) pairs.emplace_back(x, 2 * z - x + m);
    } else {
      for (int x = 0; x <= z - (m + 1) / 2; ++x) pairs.emplace_back(x, 2 * z - x - m);
      for (int x = 2 * z - m + 1; x < z; ++x) pairs.emplace_back(x, 2 * z - x);
    }
  } else {
    if (z < m / 2) {
      for (int x = 0; x < z; ++x) pairs.emplace_back(x, 2 * z - x);
      for (int x = 2 * z + 1; x < z + m / 2; ++x) pairs.emplace_back(x, 2 * z - x + m);
    } else {
      for (int x = 0; x <= z - m / 2; ++x) pairs.emplace_back(x, 2 * z - x - m + 1);
      for (int x = 2 * z - m + 2; x <= z; ++x) pairs.emplace_back(x, 2 * z - x + 1);
    }
  }
  return pairs;
}

long long closed_form_dual_point_sum(OrderingScheme scheme, int z, int i, int n) {
  require_scheme_range(scheme, n);
  int m = scheme == OrderingScheme::bose_yxi ? n / 3 : (n - 1) / 3;
  if (i < 0 || i > 2 || z < 0 || z >= m)
    throw std::invalid_argument("point (z, i) out of range");
  if (scheme == OrderingScheme::bose_yxi) return bose_yxi_dual_sum(z, i, n);
  if (scheme == OrderingScheme::skolem_yxi) return skolem_yxi_dual_sum(z, i, n);
  throw std::invalid_argument("closed-form dual point sums exist for YXI schemes only");
}

long long dual_min_sum_formula(OrderingScheme scheme, int n) {
  require_scheme_range(scheme, n);
  Rational nn(n);
  Rational n2 = nn * nn;
  Rational n3 = n2 * nn;
  switch (scheme) {
    case OrderingScheme::bose_yxi: {
      int cls = (n / 3) % 4;
      if (cls == 1 && n >= 27)
        return integral(Rational(55, 1728) * n3 + Rational(1, 192) * n2 - Rational(9, 64) * nn -
                        Rational(31, 64));
      if (cls == 3 && n >= 33)
        return integral(Rational(55, 1728) * n3 + Rational(1, 192) * n2 - Rational(13, 64) * nn +
                        Rational(13, 64));
      throw std::domain_error("Bose YXI min-sum formula not claimed for n = " +
                              std::to_string(n) + "; use enumeration");
    }
    case OrderingScheme::bose_natural:
      return integral(Rational(5, 432) * n3 + Rational(19, 48) * n2 - Rational(133, 48) * nn +
                      Rational(71, 16));
    case OrderingScheme::skolem_yxi: {
      int cls = ((n - 1) / 3) % 4;
      if (cls == 0 && n >= 13)
        return integral(Rational(55, 1728) * n3 - Rational(31, 576) * n2 -
                        Rational(137, 576) * nn - Rational(1279, 1728));
      if (cls == 2 && n >= 7)
        return integral(Rational(55, 1728) * n3 - Rational(31, 576) * n2 -
                        Rational(173, 576) * nn + Rational(1421, 1728));
      throw std::domain_error("Skolem YXI min-sum formula not claimed for n = " +
                              std::to_string(n));
    }
    case OrderingScheme::skolem_natural:
      return integral(Rational(5, 432) * n3 + Rational(55, 144) * n2 - Rational(511, 144) * nn +
                      Rational(3523, 432));
  }
  throw std::logic_error("unreachable");
}

long long dual_max_sum_formula(OrderingScheme scheme, int n) {
  require_scheme_range(scheme, n);
  Rational nn(n);
  Rational n2 = nn * nn;
  Rational n3 = n2 * nn;
  switch (scheme) {
    case OrderingScheme::bose_yxi:
      if (n < 15)
        throw std::domain_error("Bose YXI max-sum formula requires n >= 15");
      return integral(Rational(31, 432) * n3 - Rational(9, 16) * n2 + Rational(35, 16) * nn -
                      Rational(55, 16));
    case OrderingScheme::skolem_yxi:
      // Also the dual sum at the infinity point, which attains the maximum.
      return integral(Rational(1, 12) * n3 - Rational(7, 24) * n2 + Rational(1, 12) * nn +
                      Rational(1, 8));
    case OrderingScheme::bose_natural:
    case OrderingScheme::skolem_natural:
      throw std::domain_error("no stated max-sum formula for natural orderings");
  }
  throw std::logic_error("unreachable");
}

}  // namespace mmsts
