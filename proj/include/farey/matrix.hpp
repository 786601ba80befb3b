#pragma once

#include <array>
#include <string>
#include <vector>

#include "farey/fraction.hpp"
#include "farey/numeric.hpp"

namespace farey {

// An element of PSL2(Z): integer entries, determinant 1, stored as the
// representative of {M, -M} with c > 0, or c = 0 and d > 0.  The sign
// rule makes equality a field-wise comparison.
struct ProjectiveMatrix {
  Int a{1}, b{0}, c{0}, d{1};

  ProjectiveMatrix() = default;

  ProjectiveMatrix(Int a_, Int b_, Int c_, Int d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1)
      throw ValidationError("matrix determinant must be 1");
    canonicalize();
  }

  // Skips the determinant check; for products and inverses of values that
  // are already known unimodular.
  static ProjectiveMatrix unchecked(Int a_, Int b_, Int c_, Int d_) {
    ProjectiveMatrix m;
    m.a = std::move(a_);
    m.b = std::move(b_);
    m.c = std::move(c_);
    m.d = std::move(d_);
    m.canonicalize();
    return m;
  }

  void canonicalize() {
    if (c < 0 || (c == 0 && d < 0)) {
      a = -a;
      b = -b;
      c = -c;
      d = -d;
    }
  }

  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

  Int trace() const { return a + d; }

  friend bool operator==(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return !(x == y);
  }
  friend bool operator<(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
  }
};

inline ProjectiveMatrix normalize(const Int& a, const Int& b, const Int& c,
                                  const Int& d) {
  return ProjectiveMatrix(a, b, c, d);
}

inline ProjectiveMatrix multiply(const ProjectiveMatrix& x,
                                 const ProjectiveMatrix& y) {
  return ProjectiveMatrix::unchecked(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                                     x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
}

inline ProjectiveMatrix inverse(const ProjectiveMatrix& x) {
  return ProjectiveMatrix::unchecked(x.d, -x.b, -x.c, x.a);
}

inline ProjectiveMatrix identity_matrix() { return ProjectiveMatrix(); }

// The standard generators.  E and V generate PSL2(Z), as do L and R:
//   E^2 = V^3 = 1,  E = LR^-1L,  V = R^-1L,  L = EV^-1,  R = EV^-2.
inline const ProjectiveMatrix& mat_E() {
  static const ProjectiveMatrix m(0, -1, 1, 0);
  return m;
}
inline const ProjectiveMatrix& mat_V() {
  static const ProjectiveMatrix m(1, 1, -1, 0);
  return m;
}
inline const ProjectiveMatrix& mat_L() {
  static const ProjectiveMatrix m(1, 1, 0, 1);
  return m;
}
inline const ProjectiveMatrix& mat_R() {
  static const ProjectiveMatrix m(1, 0, 1, 1);
  return m;
}

inline ProjectiveMatrix mat_L_pow(const Int& n) {
  return ProjectiveMatrix(1, n, 0, 1);
}
inline ProjectiveMatrix mat_R_pow(const Int& n) {
  return ProjectiveMatrix(1, 0, n, 1);
}

// Moebius action g.(p/q) = (a p + b q)/(c p + d q) on Q u {oo}.  The result
// is automatically reduced because g is unimodular.
inline ExtFraction act(const ProjectiveMatrix& g, const ExtFraction& x) {
  return ExtFraction(g.a * x.p + g.b * x.q, g.c * x.p + g.d * x.q);
}

// 1 for the identity, 2 iff trace 0, 3 iff |trace| = 1, 0 for infinite
// order (those are all the torsion orders in PSL2(Z)).
inline int element_order(const ProjectiveMatrix& m) {
  if (m.is_identity()) return 1;
  Int t = m.trace();
  if (t == 0) return 2;
  if (t == 1 || t == -1) return 3;
  return 0;
}

inline std::string format_matrix(const ProjectiveMatrix& m) {
  return m.a.str() + "," + m.b.str() + "," + m.c.str() + "," + m.d.str();
}

inline ProjectiveMatrix parse_matrix(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4)
    throw ParseError("matrix must be 'a,b,c,d': '" + text + "'");
  std::array<Int, 4> e;
  for (int i = 0; i < 4; ++i) e[i] = parse_int(parts[i]);
  if (e[0] * e[3] - e[1] * e[2] != 1)
    throw ValidationError("matrix determinant must be 1: '" + text + "'");
  return ProjectiveMatrix(e[0], e[1], e[2], e[3]);
}

}  // namespace farey
