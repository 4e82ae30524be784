#include "mmsts/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mmsts {

namespace {

void require_operands(int x, int y, int m) {
  if (x < 0 || x >= m || y < 0 || y >= m)
    throw std::invalid_argument("operands must lie in [0, m-1]");
}

StructuredPoint pt(int x, int i) { return {x, i, false}; }
StructuredPoint inf_pt() { return {0, 0, true}; }

}  // namespace

int point_index(const StructuredPoint& p, int m) {
  return p.inf ? 3 * m : p.i * m + p.x;
}

int bose_op(int x, int y, int m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("bose_op requires odd m >= 3");
  require_operands(x, y, m);
  return static_cast<int>((static_cast<long long>(m + 1) / 2) * (x + y) % m);
}

int skolem_op(int x, int y, int m) {
  if (m < 2 || m % 2 == 1) throw std::invalid_argument("skolem_op requires even m >= 2");
  require_operands(x, y, m);
  int s = (x + y) % m;
  return s % 2 == 0 ? s / 2 : (s + m - 1) / 2;
}

StructuredSystem construct_bose(int n) {
  if (n < 9 || n > kMaxPoints || n % 6 != 3)
    throw std::invalid_argument("construct_bose requires n == 3 mod 6, 9 <= n <= " +
                                std::to_string(kMaxPoints));
  StructuredSystem sys;
  sys.construction = Construction::bose;
  sys.n = n;
  sys.m = n / 3;
  const int m = sys.m;
  sys.blocks.reserve(static_cast<std::size_t>(n) * (n - 1) / 6);
  for (int x = 0; x < m; ++x) {
    StructuredBlock b;
    b.tag = BlockTag::type1;
    b.x = x;
    b.members = {pt(x, 0), pt(x, 1), pt(x, 2)};
    sys.blocks.push_back(b);
  }
  for (int y = 1; y < m; ++y) {
    for (int x = 0; x < y; ++x) {
      for (int i = 0; i < 3; ++i) {
        StructuredBlock b;
        b.tag = BlockTag::type2;
        b.x = x;
        b.y = y;
        b.i = i;
        b.members = {pt(x, i), pt(y, i), pt(bose_op(x, y, m), (i + 1) % 3)};
        sys.blocks.push_back(b);
      }
    }
  }
  return sys;
}

StructuredSystem construct_skolem(int n) {
  if (n < 7 || n > kMaxPoints || n % 6 != 1)
    throw std::invalid_argument("construct_skolem requires n == 1 mod 6, 7 <= n <= " +
                                std::to_string(kMaxPoints));
  StructuredSystem sys;
  sys.construction = Construction::skolem;
  sys.n = n;
  sys.m = (n - 1) / 3;
  const int m = sys.m;
  sys.blocks.reserve(static_cast<std::size_t>(n) * (n - 1) / 6);
  for (int x = 0; x < m / 2; ++x) {
    StructuredBlock b;
    b.tag = BlockTag::type1;
    b.x = x;
    b.members = {pt(x, 0), pt(x, 1), pt(x, 2)};
    sys.blocks.push_back(b);
  }
  for (int y = 1; y < m; ++y) {
    for (int x = 0; x < y; ++x) {
      for (int i = 0; i < 3; ++i) {
        StructuredBlock b;
        b.tag = BlockTag::type2;
        b.x = x;
        b.y = y;
        b.i = i;
        b.members = {pt(x, i), pt(y, i), pt(skolem_op(x, y, m), (i + 1) % 3)};
        sys.blocks.push_back(b);
      }
    }
  }
  for (int x = 0; x < m / 2; ++x) {
    for (int i = 0; i < 3; ++i) {
      StructuredBlock b;
      b.tag = BlockTag::type3;
      b.x = x;
      b.i = i;
      b.members = {inf_pt(), pt(x + m / 2, i), pt(x, (i + 1) % 3)};
      sys.blocks.push_back(b);
    }
  }
  return sys;
}

PointRelabeling bose_mapping(int m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("bose_mapping requires odd m >= 3");
  const int n = 3 * m;
  PointRelabeling rel;
  rel.image.assign(n, -1);
  for (int x = 0; x < m; ++x) rel.image[point_index(pt(x, 0), m)] = x;
  rel.image[point_index(pt(0, 1), m)] = 2 * m;
  for (int y = 1; y < m; ++y) rel.image[point_index(pt(bose_op(0, y, m), 1), m)] = n - y;
  rel.image[point_index(pt(0, 2), m)] = m;
  for (int x = 1; x < m; ++x)
    rel.image[point_index(pt(x, 2), m)] = m + bose_op(0, m - x, m);
  return rel;
}

PointRelabeling skolem_mapping(int m) {
  if (m < 2 || m % 2 == 1) throw std::invalid_argument("skolem_mapping requires even m >= 2");
  const int n = 3 * m + 1;
  PointRelabeling rel;
  rel.image.assign(n, -1);
  for (int x = 0; x < m; ++x) rel.image[point_index(pt(x, 0), m)] = m - 1 - x;
  // y = m-1 is the one solution of (m-1) op y = m/2-1, so level 1 is the
  // point (m/2-1, 1) mapped to 2m+1 plus the images 2m+2+y for y in [0, m-2].
  rel.image[point_index(pt(m / 2 - 1, 1), m)] = 2 * m + 1;
  for (int y = 0; y + 1 < m; ++y)
    rel.image[point_index(pt(skolem_op(m - 1, y, m), 1), m)] = 2 * m + 2 + y;
  for (int x = 0; x < m; ++x)
    rel.image[point_index(pt(x, 2), m)] = m + 1 + skolem_op(0, x, m);
  rel.image[3 * m] = m;
  return rel;
}

PointRelabeling structured_identity_mapping(int m, Construction construction) {
  const int n = construction == Construction::bose ? 3 * m : 3 * m + 1;
  PointRelabeling rel;
  rel.image.resize(n);
  for (int idx = 0; idx < n; ++idx) rel.image[idx] = idx;
  return rel;
}

SteinerTripleSystem apply_relabeling(const StructuredSystem& system,
                                     const PointRelabeling& relabeling) {
  const int n = system.n;
  if (static_cast<int>(relabeling.image.size()) != n)
    throw std::invalid_argument("apply_relabeling: relabeling covers " +
                                std::to_string(relabeling.image.size()) + " points, system has " +
                                std::to_string(n));
  std::vector<char> hit(n, 0);
  for (int v : relabeling.image) {
    if (v < 0 || v >= n || hit[v])
      throw std::invalid_argument("apply_relabeling: image is not a bijection onto [0, n-1]");
    hit[v] = 1;
  }
  SteinerTripleSystem out;
  out.n = n;
  out.blocks.reserve(system.blocks.size());
  for (const StructuredBlock& sb : system.blocks) {
    Block b;
    for (int k = 0; k < 3; ++k) b[k] = relabeling.image[point_index(sb.members[k], system.m)];
    std::sort(b.begin(), b.end());
    out.blocks.push_back(b);
  }
  return out;
}

}  // namespace mmsts
