#pragma once

#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "farey/membership.hpp"
#include "farey/matrix.hpp"
#include "farey/permutation.hpp"
#include "farey/symbol.hpp"
#include "farey/words.hpp"

namespace farey {

// Membership-defined group: a congruence family Gamma0/Gamma1/Gamma(N),
// a permutation-defined group (elements whose L,R permutation image
// fixes 1), or the group of a Farey symbol.
struct GroupSpec {
  enum class Variant { Gamma0, Gamma1, GammaFull, Perm, Symbol };

  Variant variant = Variant::GammaFull;
  Int modulus = 1;
  std::optional<PermutationPair> perm;
  std::shared_ptr<const FareySymbol> symbol;
  std::shared_ptr<const MembershipTester> tester;  // lazy-built for Symbol

  static GroupSpec gamma0(Int n) { return make_congruence(Variant::Gamma0, std::move(n)); }
  static GroupSpec gamma1(Int n) { return make_congruence(Variant::Gamma1, std::move(n)); }
  static GroupSpec gamma(Int n) { return make_congruence(Variant::GammaFull, std::move(n)); }

  static GroupSpec perm_group(PermutationPair pair) {
    GroupSpec s;
    s.variant = Variant::Perm;
    s.perm = std::move(pair);
    return s;
  }

  static GroupSpec symbol_group(FareySymbol f) {
    GroupSpec s;
    s.variant = Variant::Symbol;
    s.symbol = std::make_shared<const FareySymbol>(std::move(f));
    s.tester = std::make_shared<const MembershipTester>(*s.symbol);
    return s;
  }

 private:
  static GroupSpec make_congruence(Variant v, Int n) {
    if (n < 1) throw ValidationError("congruence modulus must be positive");
    GroupSpec s;
    s.variant = v;
    s.modulus = std::move(n);
    return s;
  }
};

namespace detail {

// The congruence conditions are tested for both sign lifts because stored
// representatives are sign-canonical.
inline bool congruent_pm(const ProjectiveMatrix& m, const Int& n, bool need_b,
                         bool need_diag) {
  if (imod(m.c, n) != 0) return false;
  if (need_b && imod(m.b, n) != 0) return false;
  if (!need_diag) return true;
  Int one = imod(Int(1), n), minus = imod(Int(-1), n);
  Int a = imod(m.a, n), d = imod(m.d, n);
  return (a == one && d == one) || (a == minus && d == minus);
}

inline bool perm_fixes_one(const PermutationPair& pair, const ProjectiveMatrix& m) {
  Permutation l = pair.l(), r = pair.r();
  Permutation linv = l.inverse(), rinv = r.inverse();
  std::size_t point = 0;  // coset of the identity
  LRWord w = lr_word(m);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Permutation& p = it->exponent > 0
                               ? (it->letter == LRLetter::L ? l : r)
                               : (it->letter == LRLetter::L ? linv : rinv);
    point = p.power_image(point, abs(it->exponent));
  }
  return point == 0;
}

}  // namespace detail

inline bool is_member(const GroupSpec& spec, const ProjectiveMatrix& m) {
  switch (spec.variant) {
    case GroupSpec::Variant::Gamma0:
      return detail::congruent_pm(m, spec.modulus, false, false);
    case GroupSpec::Variant::Gamma1:
      return detail::congruent_pm(m, spec.modulus, false, true);
    case GroupSpec::Variant::GammaFull:
      return detail::congruent_pm(m, spec.modulus, true, true);
    case GroupSpec::Variant::Perm:
      return detail::perm_fixes_one(*spec.perm, m);
    default:
      return spec.tester->member(m);
  }
}

struct BfsResult {
  unsigned long long index = 0;
  std::vector<ProjectiveMatrix> reps;  // pairwise inequivalent, reps[0] = I
};

inline unsigned long long default_bfs_cap(const GroupSpec& spec) {
  switch (spec.variant) {
    case GroupSpec::Variant::Perm:
      return spec.perm->mu + 1;
    case GroupSpec::Variant::Symbol: {
      // mu = 3n + e3 and e3 <= n + 2
      return static_cast<unsigned long long>(4 * spec.symbol->n() + 2) + 1;
    }
    default: {
      Int cap = 10 * spec.modulus * spec.modulus * spec.modulus;
      if (cap < 16) cap = 16;
      return cap.convert_to<unsigned long long>();
    }
  }
}

// Breadth-first closure of the left cosets under left multiplication by
// E and V (E first), starting from the identity.  Cosets a1.G and a2.G
// are identified through is_member(a2^-1 a1).
inline BfsResult index_by_bfs(const GroupSpec& spec, unsigned long long cap) {
  BfsResult out;
  out.reps.push_back(identity_matrix());
  std::deque<ProjectiveMatrix> frontier{identity_matrix()};
  while (!frontier.empty()) {
    ProjectiveMatrix alpha = frontier.front();
    frontier.pop_front();
    for (const ProjectiveMatrix* g : {&mat_E(), &mat_V()}) {
      ProjectiveMatrix cand = multiply(*g, alpha);
      bool known = false;
      for (const auto& rep : out.reps) {
        if (is_member(spec, multiply(inverse(rep), cand))) {
          known = true;
          break;
        }
      }
      if (known) continue;
      if (out.reps.size() >= cap)
        throw CapError("index exceeds cap or group not finite-index");
      out.reps.push_back(cand);
      frontier.push_back(cand);
    }
  }
  out.index = out.reps.size();
  return out;
}

inline BfsResult index_by_bfs(const GroupSpec& spec) {
  return index_by_bfs(spec, default_bfs_cap(spec));
}

// Grammar: gamma0:N | gamma1:N | gamma:N | perm:l=<cycles>,r=<cycles>
//          | symbol:<symbol text>
inline GroupSpec parse_group_spec(const std::string& text) {
  auto starts = [&](const char* prefix) {
    return text.rfind(prefix, 0) == 0;
  };
  if (starts("gamma0:")) return GroupSpec::gamma0(parse_int(text.substr(7)));
  if (starts("gamma1:")) return GroupSpec::gamma1(parse_int(text.substr(7)));
  if (starts("gamma:")) return GroupSpec::gamma(parse_int(text.substr(6)));
  if (starts("symbol:")) return GroupSpec::symbol_group(parse_symbol(text.substr(7)));
  if (starts("perm:")) {
    std::string body = text.substr(5);
    auto lpos = body.find("l=");
    auto rpos = body.find(",r=");
    if (lpos != 0 || rpos == std::string::npos)
      throw ParseError("perm spec must look like perm:l=(..),r=(..)");
    std::string ltext = body.substr(2, rpos - 2);
    std::string rtext = body.substr(rpos + 3);
    Permutation l = parse_cycles(ltext, 1);
    Permutation r = parse_cycles(rtext, 1);
    std::size_t mu = std::max(l.size(), r.size());
    l = parse_cycles(ltext, mu);
    r = parse_cycles(rtext, mu);
    // e = l r^-1 l and v = r^-1 l invert the dictionary L = EV^-1, R = EV^-2
    Permutation rinv = r.inverse();
    return GroupSpec::perm_group(PermutationPair(l * rinv * l, rinv * l));
  }
  throw ParseError("unknown group spec: '" + text + "'");
}

}  // namespace farey
