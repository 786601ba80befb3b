#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "farey/generators.hpp"
#include "farey/matrix.hpp"
#include "farey/symbol.hpp"

namespace farey {

enum class Terminal {
  Identity,
  FreePairedWithZeroInfinity,
  EvenZeroInfinity,
  NotMember,
};

inline const char* terminal_name(Terminal t) {
  switch (t) {
    case Terminal::Identity: return "identity";
    case Terminal::FreePairedWithZeroInfinity: return "free-paired-with-zero-infinity";
    case Terminal::EvenZeroInfinity: return "even-zero-infinity";
    default: return "not-member";
  }
}

// Verdict plus a word in the symbol's generators.  When the verdict is
// positive, the product of generators()[i]^exp over the word entries, in
// order, reproduces the query matrix exactly.
struct MembershipCertificate {
  bool verdict = false;
  std::vector<std::pair<std::size_t, int>> word;  // (generator index, +-1)
  Terminal terminal = Terminal::NotMember;
  unsigned long long steps = 0;
  ProjectiveMatrix terminal_matrix;
};

// Membership tester for one symbol; precomputes the generator table so
// repeated queries stay cheap.
//
// The working matrix M starts at the query A; its columns span the image
// of the even line (0, oo).  While the two column fractions are not both
// vertices, the line nests under a unique edge; applying that edge's
// side pairing (for an odd edge the half split at the mediant decides
// the direction) moves the line one tile closer.  On termination A is a
// member iff M is the identity, the terminal side is a free side paired
// with (0, oo) and M matches the pair generator, or M = +-E with an even
// pairing between 0 and oo.
class MembershipTester {
 public:
  explicit MembershipTester(const FareySymbol& f)
      : f_(f), table_(build_generator_table(f)) {}

  const FareySymbol& symbol() const { return f_; }
  const GeneratorTable& table() const { return table_; }

  MembershipCertificate contains(const ProjectiveMatrix& m,
                                 unsigned long long cap = 1000000) const {
    MembershipCertificate cert;
    run(m, cap, &cert);
    return cert;
  }

  // Verdict only; skips the certificate bookkeeping.
  bool member(const ProjectiveMatrix& m, unsigned long long cap = 1000000) const {
    return run(m, cap, nullptr);
  }

  // Terminal matrix of the reduction: T = w * m for some member w, with
  // both column fractions of T vertices of the symbol.
  ProjectiveMatrix reduce(const ProjectiveMatrix& m,
                          unsigned long long cap = 1000000) const {
    return walk(m, cap, nullptr);
  }

 private:
  bool run(const ProjectiveMatrix& m, unsigned long long cap,
           MembershipCertificate* cert) const {
    ProjectiveMatrix work = walk(m, cap, cert);
    if (cert) cert->terminal_matrix = work;
    return classify(work, cert);
  }

  ProjectiveMatrix walk(const ProjectiveMatrix& m, unsigned long long cap,
                        MembershipCertificate* cert) const {
    ProjectiveMatrix work = m;
    unsigned long long steps = 0;

    while (true) {
      ExtFraction f1 = ExtFraction::coprime(work.a, work.c);  // image of oo
      ExtFraction f2 = ExtFraction::coprime(work.b, work.d);  // image of 0
      if (is_vertex(f1) && is_vertex(f2)) break;
      if (steps >= cap)
        throw CapError("membership iteration exceeded its cap");
      ++steps;

      auto [lo, hi] = order_endpoints(f1, f2);
      long gap = find_gap(lo, hi);
      long edge = gap + 1;
      auto [gen_index, orient] = table_.edge_to_gen[static_cast<std::size_t>(edge)];

      int exponent;
      if (f_.pairing(edge).kind == Pairing::Odd) {
        // ties at the mediant go to the left half
        ExtFraction mid = mediant(f_.vertex(gap), f_.vertex(gap + 1));
        exponent = !(mid < hi) ? -1 : 1;
      } else {
        exponent = orient;
      }
      const ProjectiveMatrix& g = table_.gens[gen_index];
      work = multiply(exponent == 1 ? g : inverse(g), work);
      if (cert) cert->word.emplace_back(gen_index, -exponent);
    }

    if (cert) cert->steps = steps;
    return work;
  }

  // oo counts as a vertex: both formal infinities are the vertex oo.
  bool is_vertex(const ExtFraction& x) const {
    if (x.infinite()) return true;
    const auto& v = f_.finite_vertices();
    auto it = std::lower_bound(v.begin(), v.end(), x);
    return it != v.end() && *it == x;
  }

  // Orders the endpoints; an infinite endpoint resolves to -oo or +oo
  // according to which side of the polygon the vertical line lies on.
  std::pair<ExtFraction, ExtFraction> order_endpoints(const ExtFraction& f1,
                                                      const ExtFraction& f2) const {
    if (!f1.infinite() && !f2.infinite())
      return f1 < f2 ? std::make_pair(f1, f2) : std::make_pair(f2, f1);
    const ExtFraction& y = f1.infinite() ? f2 : f1;
    if (y < f_.vertex(0))
      return {ExtFraction::neg_infinity(), y};
    if (f_.vertex(f_.n()) < y)
      return {y, ExtFraction::pos_infinity()};
    throw InternalError("even line crosses the polygon boundary");
  }

  // Largest i in [-1, n] with x_i <= lo; requires hi <= x_{i+1}.
  long find_gap(const ExtFraction& lo, const ExtFraction& hi) const {
    const auto& v = f_.finite_vertices();
    long gap;
    if (lo.infinite())
      gap = -1;
    else {
      auto it = std::upper_bound(v.begin(), v.end(), lo);
      gap = static_cast<long>(it - v.begin()) - 1;
    }
    if (!(hi <= f_.vertex(gap + 1)))
      throw InternalError("even line crosses the polygon boundary");
    return gap;
  }

  bool side_matches(long edge, const ExtFraction& u, const ExtFraction& w) const {
    ExtFraction a = f_.edge_left(edge), b = f_.edge_right(edge);
    return (same_cusp(a, u) && same_cusp(b, w)) ||
           (same_cusp(a, w) && same_cusp(b, u));
  }

  bool classify(const ProjectiveMatrix& work, MembershipCertificate* cert) const {
    if (work.is_identity()) {
      if (cert) {
        cert->verdict = true;
        cert->terminal = Terminal::Identity;
      }
      return true;
    }

    ExtFraction f1 = ExtFraction::coprime(work.a, work.c);
    ExtFraction f2 = ExtFraction::coprime(work.b, work.d);
    ExtFraction zero(0, 1), inf = ExtFraction::pos_infinity();

    // Free side paired with the side (0, oo).  The working matrix then
    // lies in {g, g^-1, g E, g^-1 E} for the pair generator g; the E
    // variants swap the line's endpoints and are not members (E cannot
    // lie in a group whose (0, oo) side is free).
    for (long e = 0; e < f_.edge_count(); ++e) {
      if (f_.pairing(e).kind != Pairing::Free) continue;
      if (!side_matches(e, f1, f2)) continue;
      long partner = f_.free_partner(e);
      if (!side_matches(partner, zero, inf)) continue;
      int sign;
      auto idx = table_.edge_to_gen[static_cast<std::size_t>(e)].first;
      if (work == table_.gens[idx])
        sign = 1;
      else if (work == inverse(table_.gens[idx]))
        sign = -1;
      else
        continue;
      if (cert) {
        cert->word.emplace_back(idx, sign);
        cert->verdict = true;
        cert->terminal = Terminal::FreePairedWithZeroInfinity;
      }
      return true;
    }

    // +-E with 0 and oo adjacent through an even pairing
    if (work == mat_E()) {
      for (long e = 0; e < f_.edge_count(); ++e) {
        if (f_.pairing(e).kind != Pairing::Even) continue;
        if (!side_matches(e, zero, inf)) continue;
        if (cert) {
          cert->word.emplace_back(
              table_.edge_to_gen[static_cast<std::size_t>(e)].first, 1);
          cert->verdict = true;
          cert->terminal = Terminal::EvenZeroInfinity;
        }
        return true;
      }
    }

    if (cert) {
      cert->verdict = false;
      cert->terminal = Terminal::NotMember;
      cert->word.clear();
    }
    return false;
  }

  FareySymbol f_;
  GeneratorTable table_;
};

inline MembershipCertificate contains(const FareySymbol& f,
                                      const ProjectiveMatrix& m,
                                      unsigned long long cap = 1000000) {
  return MembershipTester(f).contains(m, cap);
}

inline ProjectiveMatrix word_to_matrix(
    const FareySymbol& f, const std::vector<std::pair<std::size_t, int>>& word) {
  std::vector<ProjectiveMatrix> gens = generators(f);
  ProjectiveMatrix out;
  for (const auto& [idx, exp] : word) {
    if (idx >= gens.size())
      throw ValidationError("word references generator " + std::to_string(idx) +
                            " out of range");
    ProjectiveMatrix g = exp >= 0 ? gens[idx] : inverse(gens[idx]);
    int reps = exp >= 0 ? exp : -exp;
    for (int k = 0; k < reps; ++k) out = multiply(out, g);
  }
  return out;
}

}  // namespace farey
