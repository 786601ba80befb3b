#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "farey/generators.hpp"
#include "farey/oracle.hpp"
#include "farey/symbol.hpp"

namespace farey {

namespace detail {

// Working state: an ascending vertex list with one optional pairing per
// edge.  Membership results are memoized by edge content: an edge's
// self-pairing test and a candidate free pairing never change once the
// participating vertices exist, so re-checking every unpaired edge each
// round costs nothing beyond the first test.
class SymbolBuilder {
 public:
  SymbolBuilder(const GroupSpec& spec, std::vector<ExtFraction> verts)
      : spec_(spec), verts_(std::move(verts)),
        pairs_(verts_.size() + 1, std::nullopt) {}

  long n() const { return static_cast<long>(verts_.size()) - 1; }
  long edge_count() const { return static_cast<long>(pairs_.size()); }

  ExtFraction vertex(long i) const {
    if (i < 0) return ExtFraction::neg_infinity();
    if (i > n()) return ExtFraction::pos_infinity();
    return verts_[static_cast<std::size_t>(i)];
  }

  bool run(long max_edges) {
    int next_label = 1;
    while (true) {
      bool progress = true;
      while (progress) {
        progress = false;
        for (long e = 0; e < edge_count(); ++e) {
          if (pairs_[static_cast<std::size_t>(e)]) continue;
          if (try_pair(e, next_label)) progress = true;
        }
      }
      long open = first_unpaired();
      if (open < 0) return true;
      if (edge_count() >= max_edges) return false;
      subdivide(last_unpaired());
    }
  }

  FareySymbol take() {
    std::vector<Pairing> pairs;
    pairs.reserve(pairs_.size());
    for (const auto& p : pairs_) pairs.push_back(*p);
    return FareySymbol(verts_, std::move(pairs));
  }

 private:
  long first_unpaired() const {
    for (long e = 0; e < edge_count(); ++e)
      if (!pairs_[static_cast<std::size_t>(e)]) return e;
    return -1;
  }
  long last_unpaired() const {
    for (long e = edge_count() - 1; e >= 0; --e)
      if (!pairs_[static_cast<std::size_t>(e)]) return e;
    return -1;
  }

  using EdgeKey = std::tuple<Int, Int, Int, Int>;
  EdgeKey key(long e) const {
    ExtFraction u = vertex(e - 1), w = vertex(e);
    return {u.p, u.q, w.p, w.q};
  }

  bool member_memo(std::map<EdgeKey, bool>& memo, long e,
                   const ProjectiveMatrix& g) {
    auto k = key(e);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    bool ok = is_member(spec_, g);
    memo.emplace(std::move(k), ok);
    return ok;
  }

  ProjectiveMatrix even_candidate(long e) const {
    ExtFraction u = vertex(e - 1), w = vertex(e);
    return ProjectiveMatrix(w.p * w.q + u.p * u.q, -u.p * u.p - w.p * w.p,
                            u.q * u.q + w.q * w.q, -w.p * w.q - u.p * u.q);
  }
  ProjectiveMatrix odd_candidate(long e) const {
    ExtFraction u = vertex(e - 1), w = vertex(e);
    return ProjectiveMatrix(w.p * w.q + u.p * w.q + u.p * u.q,
                            -u.p * u.p - u.p * w.p - w.p * w.p,
                            u.q * u.q + u.q * w.q + w.q * w.q,
                            -w.p * w.q - w.p * u.q - u.p * u.q);
  }
  ProjectiveMatrix free_candidate(long e, long fpartner) const {
    ExtFraction u = vertex(e - 1), w = vertex(e);
    ExtFraction pu = vertex(fpartner - 1), pw = vertex(fpartner);
    return ProjectiveMatrix(pw.p * w.q + pu.p * u.q, -pu.p * u.p - pw.p * w.p,
                            pu.q * u.q + pw.q * w.q, -w.p * pw.q - u.p * pu.q);
  }

  // Pairing search order: self-even, self-odd, then free pairing against
  // the other unpaired edges left to right.
  bool try_pair(long e, int& next_label) {
    if (member_memo(even_memo_, e, even_candidate(e))) {
      pairs_[static_cast<std::size_t>(e)] = Pairing::even();
      return true;
    }
    if (member_memo(odd_memo_, e, odd_candidate(e))) {
      pairs_[static_cast<std::size_t>(e)] = Pairing::odd();
      return true;
    }
    for (long f = 0; f < edge_count(); ++f) {
      if (f == e || pairs_[static_cast<std::size_t>(f)]) continue;
      auto pk = std::make_pair(key(e), key(f));
      bool ok;
      auto it = free_memo_.find(pk);
      if (it != free_memo_.end())
        ok = it->second;
      else {
        ok = is_member(spec_, free_candidate(e, f));
        free_memo_.emplace(std::move(pk), ok);
      }
      if (ok) {
        pairs_[static_cast<std::size_t>(e)] = Pairing::free(next_label);
        pairs_[static_cast<std::size_t>(f)] = Pairing::free(next_label);
        ++next_label;
        return true;
      }
    }
    return false;
  }

  // Insert the mediant, splitting edge e into two unpaired edges.
  void subdivide(long e) {
    ExtFraction mid = mediant(vertex(e - 1), vertex(e));
    verts_.insert(verts_.begin() + e, mid);
    pairs_.insert(pairs_.begin() + e, std::nullopt);
    pairs_[static_cast<std::size_t>(e)] = std::nullopt;
    pairs_[static_cast<std::size_t>(e) + 1] = std::nullopt;
  }

  const GroupSpec& spec_;
  std::vector<ExtFraction> verts_;
  std::vector<std::optional<Pairing>> pairs_;
  std::map<EdgeKey, bool> even_memo_, odd_memo_;
  std::map<std::pair<EdgeKey, EdgeKey>, bool> free_memo_;
};

}  // namespace detail

// Builds a Farey symbol for the group of a membership oracle.
//
// Base cases: L, E members means the full modular group; otherwise
// (0,1,-1,-1) and (-1,1,-1,0) members means the unique index-2 subgroup.
// Otherwise the seed is the triangle 0,1,oo, or -1,0,oo when
// (-1,1,-1,0) is a member.  Each round assigns every pairing the oracle
// admits; if an unpaired edge survives a full round, the rightmost one
// is subdivided at the mediant of its endpoints and the scan restarts.
inline FareySymbol construct_symbol(const GroupSpec& spec, long max_edges = 2000) {
  if (max_edges < 3) throw ValidationError("max_edges must be at least 3");
  if (is_member(spec, mat_L()) && is_member(spec, mat_E()))
    return parse_symbol("[-oo 0 oo | e o]");
  ProjectiveMatrix rho_a(0, 1, -1, -1), rho_b(-1, 1, -1, 0);
  if (is_member(spec, rho_a) && is_member(spec, rho_b))
    return parse_symbol("[-oo 0 oo | o o]");

  std::vector<ExtFraction> seed;
  if (!is_member(spec, rho_b))
    seed = {ExtFraction(0, 1), ExtFraction(1, 1)};
  else
    seed = {ExtFraction(-1, 1), ExtFraction(0, 1)};

  detail::SymbolBuilder builder(spec, std::move(seed));
  if (!builder.run(max_edges))
    throw CapError("symbol construction hit max_edges: group may not have "
                   "finite index or the cap is too small");
  return builder.take();
}

}  // namespace farey
