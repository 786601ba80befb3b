#pragma once

#include <cstdint>

#include "farey/construct.hpp"
#include "farey/cosets.hpp"
#include "farey/generators.hpp"
#include "farey/invariants.hpp"
#include "farey/membership.hpp"
#include "farey/oracle.hpp"
#include "farey/permutation.hpp"

namespace farey {

namespace detail {

inline long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline long long inv_mod(long long a, long long n) {
  long long x, y;
  long long g = egcd(((a % n) + n) % n, n, x, y);
  if (g != 1 && g != -1) throw InternalError("non-invertible residue");
  return ((x % n) + n) % n;
}

inline Permutation perm_pow(const Permutation& p, long long e) {
  if (e >= 0) return p.power(e);
  return p.inverse().power(-e);
}

}  // namespace detail

// Congruence test on the LR-representation, following the criterion of
// the permutation-based congruence test: with N the order of l written
// as N = e*m (e a power of two, m odd) the group is congruence exactly
// when the relations below hold.  They encode a presentation of
// SL2(Z/m) x SL2(Z/e): s plays diag(5, 1/5), l r^-1 l plays +-E.
//
//   N odd:         (r^2 l^(-1/2))^3 = 1
//   N = 2^k:       s = l^20 r^(1/5) l^-4 r^-1, and
//                  (l^-1 r l^-1) s (l r^-1 l) s = 1
//                  s^-1 r s = r^25
//                  (s r^5 l r^-1 l)^3 = 1
//   N = e*m mixed: with c = 1 mod m, 0 mod e and d = 0 mod m, 1 mod e,
//                  split a = l^c, b = r^c (odd part), p = l^d, q = r^d
//                  (even part), s = p^20 q^(1/5) p^-4 q^-1, and
//                  [a, q] = 1
//                  (a b^-1 a)^4 = 1
//                  (a b^-1 a)^2 = (b^-1 a)^3
//                  (a b^-1 a)^2 = (b^2 a^(-1/2))^3
//                  (p^-1 q p^-1) s (p q^-1 p) s = 1
//                  s^-1 q s = q^25
//                  (p q^-1 p)^2 = (s q^5 p q^-1 p)^3
//
// Inverses mod m use 2, mod e use 5.  Every relation is cross-checked
// against the Wohlfahrt route in the test suite.
inline bool congruence_hsu(const PermutationPair& pair) {
  if (pair.mu == 1) return true;
  Permutation l = pair.l();
  Permutation r = pair.r();
  long long n = static_cast<long long>(l.order());

  long long m = n;
  long long e = 1;
  while (m % 2 == 0) {
    m /= 2;
    e *= 2;
  }

  auto pw = detail::perm_pow;
  Permutation id(pair.mu);

  if (e == 1) {
    long long half = detail::inv_mod(2, n);
    Permutation rel = r * r * pw(l, -half);
    return (rel * rel * rel).is_identity();
  }

  if (m == 1) {
    long long fifth = detail::inv_mod(5, n);
    Permutation s = pw(l, 20) * pw(r, fifth) * pw(l, -4) * r.inverse();
    Permutation x = l * r.inverse() * l;
    if (!(x.inverse() * s * x * s).is_identity()) return false;
    if (!(s.inverse() * r * s * pw(r, -25)).is_identity()) return false;
    Permutation rel = s * pw(r, 5) * x;
    return (rel * rel * rel).is_identity();
  }

  // mixed level: CRT split
  long long c = 0, d = 0;
  for (long long k = 0; k < n; ++k) {
    if (k % m == 1 % m && k % e == 0) c = k;
    if (k % m == 0 && k % e == 1) d = k;
  }
  long long half = detail::inv_mod(2, m);
  long long fifth = detail::inv_mod(5, e);
  Permutation a = pw(l, c), b = pw(r, c);
  Permutation p = pw(l, d), q = pw(r, d);
  Permutation s = pw(p, 20) * pw(q, fifth) * pw(p, -4) * q.inverse();

  if (!(a * q * a.inverse() * q.inverse()).is_identity()) return false;
  Permutation aba = a * b.inverse() * a;
  Permutation aba2 = aba * aba;
  if (!(aba2 * aba2).is_identity()) return false;
  Permutation ba = b.inverse() * a;
  if (aba2 != ba * ba * ba) return false;
  Permutation w = b * b * pw(a, -half);
  if (aba2 != w * w * w) return false;
  Permutation x = p * q.inverse() * p;
  if (!(x.inverse() * s * x * s).is_identity()) return false;
  if (!(s.inverse() * q * s * pw(q, -25)).is_identity()) return false;
  Permutation y = s * pw(q, 5) * x;
  return x * x == y * y * y;
}

enum class Congruence { No, Yes, Inconclusive };

// Wohlfahrt route: a group of level N is congruence exactly when it
// contains the principal congruence group of level N, so build a symbol
// for that group and test each of its generators.  The index of the
// principal group grows fast, hence the level cap; beyond it the answer
// is inconclusive rather than false.
inline Congruence congruence_wohlfahrt(const FareySymbol& f,
                                       unsigned long long max_level = 8) {
  GroupInvariants inv = invariants(f);
  if (inv.level > max_level) return Congruence::Inconclusive;
  GroupSpec principal = GroupSpec::gamma(Int(inv.level));
  FareySymbol pf = construct_symbol(principal, 100000);
  MembershipTester tester(f);
  for (const auto& g : generators(pf))
    if (!tester.member(g)) return Congruence::No;
  return Congruence::Yes;
}

}  // namespace farey
