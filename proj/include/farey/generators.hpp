#pragma once

#include <utility>
#include <vector>

#include "farey/matrix.hpp"
#include "farey/symbol.hpp"

namespace farey {

// Side pairing transformation of edge i+1 = (a_i/b_i, a_{i+1}/b_{i+1}).
// Even pairing:
//   ( a_{i+1}b_{i+1} + a_i b_i        -a_i^2 - a_{i+1}^2          )
//   ( b_i^2 + b_{i+1}^2               -a_{i+1}b_{i+1} - a_i b_i   )
// Odd pairing:
//   ( a_{i+1}b_{i+1} + a_i b_{i+1} + a_i b_i    -a_i^2 - a_i a_{i+1} - a_{i+1}^2 )
//   ( b_i^2 + b_i b_{i+1} + b_{i+1}^2           -a_{i+1}b_{i+1} - a_{i+1}b_i - a_i b_i )
// Free pairing with partner edge (a_k/b_k, a_{k+1}/b_{k+1}):
//   ( a_{k+1}b_{i+1} + a_k b_i        -a_k a_i - a_{k+1}a_{i+1}   )
//   ( b_k b_i + b_{k+1}b_{i+1}        -a_{i+1}b_{k+1} - a_i b_k   )
// The matrix maps the given edge onto its partner (itself for even/odd),
// orientation-reversed; the two edges of a free pair give mutual inverses.
inline ProjectiveMatrix generator_for_edge(const FareySymbol& f, long edge) {
  if (edge < 0 || edge >= f.edge_count())
    throw ValidationError("edge index out of range", edge);
  ExtFraction lo = f.edge_left(edge), hi = f.edge_right(edge);
  const Int &ai = lo.p, &bi = lo.q, &aj = hi.p, &bj = hi.q;
  switch (f.pairing(edge).kind) {
    case Pairing::Even:
      return ProjectiveMatrix(aj * bj + ai * bi, -ai * ai - aj * aj,
                              bi * bi + bj * bj, -aj * bj - ai * bi);
    case Pairing::Odd:
      return ProjectiveMatrix(aj * bj + ai * bj + ai * bi,
                              -ai * ai - ai * aj - aj * aj,
                              bi * bi + bi * bj + bj * bj,
                              -aj * bj - aj * bi - ai * bi);
    default: {
      long partner = f.free_partner(edge);
      ExtFraction plo = f.edge_left(partner), phi = f.edge_right(partner);
      const Int &ak = plo.p, &bk = plo.q, &al = phi.p, &bl = phi.q;
      return ProjectiveMatrix(al * bj + ak * bi, -ak * ai - al * aj,
                              bk * bi + bl * bj, -aj * bl - ai * bk);
    }
  }
}

// Independent generator list: one matrix per even edge, per odd edge and
// per free pair, in edge order.  For a free pair the source is the edge
// with the smaller index (equivalently the smaller left endpoint); the
// opposite orientation is its inverse.
struct GeneratorTable {
  std::vector<ProjectiveMatrix> gens;
  // edge -> (index into gens, +1 if the edge is the source orientation)
  std::vector<std::pair<std::size_t, int>> edge_to_gen;
};

inline GeneratorTable build_generator_table(const FareySymbol& f) {
  GeneratorTable t;
  t.edge_to_gen.assign(static_cast<std::size_t>(f.edge_count()), {0, 0});
  for (long e = 0; e < f.edge_count(); ++e) {
    const Pairing& p = f.pairing(e);
    if (p.kind == Pairing::Free) {
      long partner = f.free_partner(e);
      if (partner < e) {
        t.edge_to_gen[static_cast<std::size_t>(e)] = {
            t.edge_to_gen[static_cast<std::size_t>(partner)].first, -1};
        continue;
      }
    }
    t.edge_to_gen[static_cast<std::size_t>(e)] = {t.gens.size(), 1};
    t.gens.push_back(generator_for_edge(f, e));
  }
  return t;
}

inline std::vector<ProjectiveMatrix> generators(const FareySymbol& f) {
  return build_generator_table(f).gens;
}

}  // namespace farey
