#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "farey/symbol.hpp"

namespace farey {

struct CuspClass {
  std::vector<ExtFraction> vertices;  // oo printed as 1/0
  unsigned long long width = 0;
};

struct GroupInvariants {
  unsigned long long index = 0;   // mu
  unsigned long long genus = 0;   // g
  unsigned long long cusps = 0;   // t
  unsigned long long rank = 0;    // r, free pair count
  unsigned long long e2 = 0;
  unsigned long long e3 = 0;
  unsigned long long level = 0;   // lcm of cusp widths
  std::vector<CuspClass> cusp_classes;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Invariants read off the symbol:
//   e2/e3 = number of even/odd pairings, r = number of free pairs,
//   cusp classes from the cyclic equivalences (even/odd edges identify
//   their endpoints, a free pair (i-edge, j-edge) identifies x_i ~ x_{j+1}
//   and x_j ~ x_{i+1}, the two infinities are one vertex),
//   width(x_i) = |a_{i-1} b_{i+1} - a_{i+1} b_{i-1}| plus 1/2 per incident
//   odd edge (the infinite vertex wraps around to neighbours x_n, x_0),
//   cusp width = sum over the class, level = lcm of the cusp widths,
//   g = (r - t + 1)/2,  mu = 3n + e3 = 3 e2 + 4 e3 + 12 g + 6 t - 12.
// Widths are carried doubled so the halves stay integral.
inline GroupInvariants invariants(const FareySymbol& f) {
  f.validate();
  const long n = f.n();
  const std::size_t nverts = static_cast<std::size_t>(n) + 2;  // finite + oo
  const std::size_t inf = static_cast<std::size_t>(n) + 1;

  auto vertex_node = [&](long i) -> std::size_t {
    if (i < 0 || i > n) return inf;
    return static_cast<std::size_t>(i);
  };

  GroupInvariants inv;
  detail::UnionFind classes(nverts);
  for (long e = 0; e < f.edge_count(); ++e) {
    const Pairing& p = f.pairing(e);
    if (p.kind == Pairing::Even) {
      ++inv.e2;
      classes.unite(vertex_node(e - 1), vertex_node(e));
    } else if (p.kind == Pairing::Odd) {
      ++inv.e3;
      classes.unite(vertex_node(e - 1), vertex_node(e));
    } else {
      long partner = f.free_partner(e);
      if (partner > e) {
        ++inv.rank;
        classes.unite(vertex_node(e - 1), vertex_node(partner));
        classes.unite(vertex_node(partner - 1), vertex_node(e));
      }
    }
  }

  if (static_cast<unsigned long long>(n) + 2 !=
      2 * inv.rank + inv.e2 + inv.e3)
    throw InternalError("n + 2 = 2r + e2 + e3 violated");

  // doubled vertex widths
  std::vector<Int> width2(nverts, 0);
  auto base_width2 = [&](long left, long right) {
    ExtFraction u = f.vertex(left), w = f.vertex(right);
    return 2 * abs(u.p * w.q - w.p * u.q);
  };
  auto odd_edge = [&](long e) {
    return f.pairing(e).kind == Pairing::Odd ? 1 : 0;
  };
  for (long i = 0; i <= n; ++i) {
    width2[static_cast<std::size_t>(i)] =
        base_width2(i - 1, i + 1) + odd_edge(i) + odd_edge(i + 1);
  }
  // the infinite vertex: neighbours wrap to x_n and x_0
  width2[inf] = base_width2(n, 0) + odd_edge(0) + odd_edge(n + 1);

  // collect classes, oo first then by smallest finite vertex
  std::vector<std::size_t> roots;
  std::vector<std::size_t> order(nverts);
  order[0] = inf;
  for (long i = 0; i <= n; ++i) order[static_cast<std::size_t>(i) + 1] =
      static_cast<std::size_t>(i);
  std::vector<long> root_slot(nverts, -1);
  for (std::size_t node : order) {
    std::size_t r = classes.find(node);
    if (root_slot[r] < 0) {
      root_slot[r] = static_cast<long>(inv.cusp_classes.size());
      inv.cusp_classes.push_back({});
    }
    CuspClass& cls = inv.cusp_classes[static_cast<std::size_t>(root_slot[r])];
    cls.vertices.push_back(node == inf ? ExtFraction::pos_infinity()
                                       : f.vertex(static_cast<long>(node)));
  }
  inv.cusps = inv.cusp_classes.size();

  std::vector<Int> class_width2(inv.cusp_classes.size(), 0);
  for (std::size_t node = 0; node < nverts; ++node)
    class_width2[static_cast<std::size_t>(root_slot[classes.find(node)])] +=
        width2[node];

  Int level = 1;
  for (std::size_t k = 0; k < inv.cusp_classes.size(); ++k) {
    if (class_width2[k] % 2 != 0 || class_width2[k] <= 0)
      throw InternalError("cusp width is not a positive integer");
    Int w = class_width2[k] / 2;
    inv.cusp_classes[k].width = w.convert_to<unsigned long long>();
    level = lcm(level, w);
  }
  inv.level = level.convert_to<unsigned long long>();

  long long rt = static_cast<long long>(inv.rank) -
                 static_cast<long long>(inv.cusps) + 1;
  if (rt < 0 || rt % 2 != 0)
    throw InternalError("genus (r - t + 1)/2 is not a nonnegative integer");
  inv.genus = static_cast<unsigned long long>(rt / 2);

  long long mu = 3 * n + static_cast<long long>(inv.e3);
  long long mu_hurwitz = 3 * static_cast<long long>(inv.e2) +
                         4 * static_cast<long long>(inv.e3) +
                         12 * static_cast<long long>(inv.genus) +
                         6 * static_cast<long long>(inv.cusps) - 12;
  if (mu != mu_hurwitz)
    throw InternalError("index formulas disagree: 3n+e3 = " +
                        std::to_string(mu) + ", Hurwitz = " +
                        std::to_string(mu_hurwitz));
  if (mu < 1)
    throw InternalError("index formulas give a non-positive index");
  inv.index = static_cast<unsigned long long>(mu);

  // the vertex-width total must match the index as well
  Int total2 = 0;
  for (const auto& w2 : width2) total2 += w2;
  if (total2 != 2 * mu)
    throw InternalError("vertex widths do not sum to the index");
  return inv;
}

}  // namespace farey
