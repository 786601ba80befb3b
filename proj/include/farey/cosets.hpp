#pragma once

#include <vector>

#include "farey/invariants.hpp"
#include "farey/membership.hpp"
#include "farey/oracle.hpp"
#include "farey/permutation.hpp"

namespace farey {

struct CosetReps {
  std::vector<ProjectiveMatrix> reps;  // reps[0] = I, pairwise inequivalent
  bool tile_formula_validated = true;  // false when the BFS fallback fired
};

namespace detail {

// Tile-based candidate list: for the edge (x_i, x_{i+1}) let
// phi = (a_i, -a_{i+1}; b_i, -b_{i+1}) (so phi maps oo to x_i and 0 to
// x_{i+1}) and w = |a_{i-1} b_{i+1} - a_{i+1} b_{i-1}|; the edge
// contributes L^-j phi^-1 for 0 <= j < w, and an odd edge one further
// tile E phi^-1 sitting at its interior corner (in unfolded coordinates
// the corner is always E(rho) = rho - 1 and its tile E T*).  The
// leftmost edge wraps a_{i-1} around to x_n.  Summed over all n+2 edges
// the counts add up to the index.
inline std::vector<ProjectiveMatrix> tile_reps(const FareySymbol& f) {
  std::vector<ProjectiveMatrix> out;
  for (long e = 0; e < f.edge_count(); ++e) {
    ExtFraction left = f.vertex(e - 1), right = f.vertex(e);
    ExtFraction before = e == 0 ? f.vertex(f.n()) : f.vertex(e - 2);
    Int base = abs(before.p * right.q - right.p * before.q);
    ProjectiveMatrix phi(left.p, -right.p, left.q, -right.q);
    ProjectiveMatrix phi_inv = inverse(phi);
    ProjectiveMatrix rep = phi_inv;
    ProjectiveMatrix lstep = mat_L_pow(-1);
    for (Int j = 0; j < base; ++j) {
      out.push_back(rep);
      rep = multiply(lstep, rep);
    }
    if (f.pairing(e).kind == Pairing::Odd)
      out.push_back(multiply(mat_E(), phi_inv));
  }
  return out;
}

// Exactly one representative may lie in the group itself; it is swapped
// to the front and replaced by the identity.
inline bool normalize_identity(const MembershipTester& tester,
                               std::vector<ProjectiveMatrix>& reps,
                               unsigned long long mu) {
  if (reps.size() != mu) return false;
  long id_at = -1;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (tester.member(reps[i])) {
      if (id_at >= 0) return false;
      id_at = static_cast<long>(i);
    }
  }
  if (id_at < 0) return false;
  reps[static_cast<std::size_t>(id_at)] = reps[0];
  reps[0] = identity_matrix();
  return true;
}

inline bool pairwise_inequivalent(const MembershipTester& tester,
                                  const std::vector<ProjectiveMatrix>& reps) {
  std::vector<ProjectiveMatrix> inv_reps;
  inv_reps.reserve(reps.size());
  for (const auto& r : reps) inv_reps.push_back(inverse(r));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (tester.member(multiply(inv_reps[j], reps[i]))) return false;
  return true;
}

}  // namespace detail

// Left coset representatives read off the symbol's tiles, validated to be
// exactly mu pairwise-inequivalent classes; a BFS over the symbol's own
// membership test is the fallback when the tile formula disagrees.
inline CosetReps coset_reps_from_symbol(const FareySymbol& f) {
  MembershipTester tester(f);
  GroupInvariants inv = invariants(f);
  CosetReps out;
  out.reps = detail::tile_reps(f);
  if (detail::normalize_identity(tester, out.reps, inv.index) &&
      detail::pairwise_inequivalent(tester, out.reps))
    return out;
  out.tile_formula_validated = false;
  BfsResult bfs = index_by_bfs(GroupSpec::symbol_group(f), inv.index + 1);
  if (bfs.index != inv.index)
    throw InternalError("BFS index disagrees with the symbol invariants");
  out.reps = std::move(bfs.reps);
  return out;
}

struct CosetTable {
  std::vector<ProjectiveMatrix> reps;
  PermutationPair perm;
  bool tile_formula_validated = true;
};

namespace detail {

// Identifies cosets against the representative list.  The reduction of
// target^-1 ends at a terminal matrix T with w target^-1 = T, so the
// target's left coset is T^-1 Gamma; T itself is then the tile map of
// that coset up to one side pairing factor (the tile T T* is adjacent to
// the terminal line, inside the polygon or across one of the at most two
// edges carrying that line).  Looking the candidates up in the tile-map
// table and verifying the hit with a single membership test replaces the
// linear scan; a miss falls back to scanning the whole list.
class CosetIdentifier {
 public:
  CosetIdentifier(const MembershipTester& tester,
                  const std::vector<ProjectiveMatrix>& reps)
      : tester_(tester), reps_(reps) {
    inv_reps_.reserve(reps.size());
    for (const auto& r : reps) inv_reps_.push_back(inverse(r));
    for (std::size_t j = 0; j < reps.size(); ++j)
      tile_index_.emplace(inv_reps_[j], j);
  }

  const std::vector<ProjectiveMatrix>& inverse_reps() const { return inv_reps_; }

  std::size_t identify(const ProjectiveMatrix& target) const {
    ProjectiveMatrix t = tester_.reduce(inverse(target));
    ProjectiveMatrix t_inv = inverse(t);

    auto try_tile = [&](const ProjectiveMatrix& cand) -> long {
      auto it = tile_index_.find(cand);
      if (it == tile_index_.end()) return -1;
      if (!tester_.member(multiply(inv_reps_[it->second], t_inv))) return -1;
      return static_cast<long>(it->second);
    };

    if (long j = try_tile(t); j >= 0) return static_cast<std::size_t>(j);
    // the terminal line bounds at most two edges; crossing their pairings
    // moves the tile into the polygon
    const FareySymbol& f = tester_.symbol();
    ExtFraction u = ExtFraction::coprime(t.a, t.c);
    ExtFraction w = ExtFraction::coprime(t.b, t.d);
    for (long e = 0; e < f.edge_count(); ++e) {
      ExtFraction a = f.edge_left(e), b = f.edge_right(e);
      bool match = (same_cusp(a, u) && same_cusp(b, w)) ||
                   (same_cusp(a, w) && same_cusp(b, u));
      if (!match) continue;
      ProjectiveMatrix g = generator_for_edge(f, e);
      if (long j = try_tile(multiply(g, t)); j >= 0)
        return static_cast<std::size_t>(j);
      if (f.pairing(e).kind == Pairing::Odd)
        if (long j = try_tile(multiply(inverse(g), t)); j >= 0)
          return static_cast<std::size_t>(j);
    }
    // fallback: scan the list against the reduced form
    for (std::size_t j = 0; j < reps_.size(); ++j)
      if (tester_.member(multiply(inv_reps_[j], t_inv))) return j;
    throw InternalError("coset action left the representative list");
  }

 private:
  const MembershipTester& tester_;
  const std::vector<ProjectiveMatrix>& reps_;
  std::vector<ProjectiveMatrix> inv_reps_;
  std::map<ProjectiveMatrix, std::size_t> tile_index_;
};

inline CosetTable perm_rep_from(const MembershipTester& tester, CosetReps reps) {
  CosetIdentifier ident(tester, reps.reps);
  const std::size_t mu = reps.reps.size();
  auto action = [&](const ProjectiveMatrix& g) {
    std::vector<std::size_t> img(mu);
    for (std::size_t i = 0; i < mu; ++i)
      img[i] = ident.identify(multiply(g, reps.reps[i]));
    return Permutation(img);
  };
  Permutation e = action(mat_E());
  Permutation v = action(mat_V());
  CosetTable table;
  table.reps = std::move(reps.reps);
  table.perm = PermutationPair(std::move(e), std::move(v));
  table.tile_formula_validated = reps.tile_formula_validated;
  return table;
}

}  // namespace detail

// Coset permutation representation: e(i) is the unique j with
// a_j^-1 E a_i in the group, likewise v; e and v come first because
// their orders are known, l = e v^-1 and r = e v^-2 follow.
inline CosetTable perm_rep(const FareySymbol& f, CosetReps reps) {
  MembershipTester tester(f);
  return detail::perm_rep_from(tester, std::move(reps));
}

inline CosetTable perm_rep(const FareySymbol& f) {
  MembershipTester tester(f);
  GroupInvariants inv = invariants(f);
  CosetReps candidates;
  candidates.reps = detail::tile_reps(f);
  if (detail::normalize_identity(tester, candidates.reps, inv.index)) {
    try {
      return detail::perm_rep_from(tester, candidates);
    } catch (const InternalError&) {
      // fall through to the BFS transversal
    }
  }
  candidates.tile_formula_validated = false;
  BfsResult bfs = index_by_bfs(GroupSpec::symbol_group(f), inv.index + 1);
  if (bfs.index != inv.index)
    throw InternalError("BFS index disagrees with the symbol invariants");
  candidates.reps = std::move(bfs.reps);
  return detail::perm_rep_from(tester, std::move(candidates));
}

struct PermInvariants {
  unsigned long long e2 = 0;
  unsigned long long e3 = 0;
  std::vector<unsigned long long> cusp_widths;  // sorted multiset
  unsigned long long level = 0;
};

// e2 = fixed points of e, e3 = fixed points of v, cusp widths = cycle
// lengths of l = e v^-1, level = lcm of the widths = order of l.
inline PermInvariants perm_invariants(const PermutationPair& p) {
  PermInvariants out;
  out.e2 = p.e.fixed_points();
  out.e3 = p.v.fixed_points();
  Permutation l = p.l();
  out.cusp_widths = l.cycle_lengths();
  out.level = l.order();
  return out;
}

}  // namespace farey
