#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "farey/fraction.hpp"

namespace farey {

// Edge tag of a Farey symbol: even (self-paired, order-2 side), odd
// (self-paired, order-3 side) or one half of a free pairing whose label
// occurs exactly twice in the symbol.
struct Pairing {
  enum Kind { Even, Odd, Free } kind = Even;
  int label = 0;  // positive, Free only

  static Pairing even() { return {Even, 0}; }
  static Pairing odd() { return {Odd, 0}; }
  static Pairing free(int label) { return {Free, label}; }

  friend bool operator==(const Pairing& x, const Pairing& y) {
    return x.kind == y.kind && x.label == y.label;
  }
  friend bool operator!=(const Pairing& x, const Pairing& y) { return !(x == y); }
};

inline std::string format_pairing(const Pairing& p) {
  switch (p.kind) {
    case Pairing::Even: return "e";
    case Pairing::Odd: return "o";
    default: return std::to_string(p.label);
  }
}

// A generalized Farey sequence -1/0, x_0, ..., x_n, 1/0 with unit
// cross-determinants between neighbours, plus one pairing per edge.
// Edge i (0 <= i <= n+1) joins vertex(i-1) and vertex(i), where
// vertex(-1) = -1/0 and vertex(n+1) = 1/0.
class FareySymbol {
 public:
  FareySymbol() = default;
  FareySymbol(std::vector<ExtFraction> vertices, std::vector<Pairing> pairings)
      : verts_(std::move(vertices)), pairs_(std::move(pairings)) {
    validate();
  }

  long n() const { return static_cast<long>(verts_.size()) - 1; }
  long edge_count() const { return static_cast<long>(pairs_.size()); }

  const std::vector<ExtFraction>& finite_vertices() const { return verts_; }
  const std::vector<Pairing>& pairings() const { return pairs_; }

  ExtFraction vertex(long i) const {
    if (i < 0) return ExtFraction::neg_infinity();
    if (i > n()) return ExtFraction::pos_infinity();
    return verts_[static_cast<std::size_t>(i)];
  }

  const Pairing& pairing(long edge) const {
    return pairs_[static_cast<std::size_t>(edge)];
  }

  ExtFraction edge_left(long edge) const { return vertex(edge - 1); }
  ExtFraction edge_right(long edge) const { return vertex(edge); }

  // The other edge carrying the same free label.
  long free_partner(long edge) const {
    const Pairing& p = pairing(edge);
    if (p.kind != Pairing::Free)
      throw ValidationError("edge has no free partner", edge);
    for (long f = 0; f < edge_count(); ++f)
      if (f != edge && pairs_[static_cast<std::size_t>(f)] == p) return f;
    throw InternalError("unmatched free label");
  }

  bool has_vertex(const ExtFraction& x) const {
    if (x.infinite()) return true;
    for (const auto& v : verts_)
      if (v == x) return true;
    return false;
  }

  void validate() const {
    if (verts_.empty())
      throw ValidationError("symbol needs at least one finite vertex");
    if (pairs_.size() != verts_.size() + 1)
      throw ValidationError("pairing count must equal edge count");
    bool has_zero = false;
    for (long i = -1; i <= n(); ++i) {
      if (det_pairing(vertex(i), vertex(i + 1)) != 1)
        throw ValidationError("consecutive vertices are not unimodular",
                              i + 1);
      if (i >= 0 && !vertex(i).infinite() && vertex(i).p == 0) has_zero = true;
    }
    if (!has_zero) throw ValidationError("0 must be a vertex");
    std::map<int, int> label_count;
    for (long e = 0; e < edge_count(); ++e) {
      const Pairing& p = pairs_[static_cast<std::size_t>(e)];
      if (p.kind == Pairing::Free) {
        if (p.label <= 0) throw ValidationError("free labels are positive", e);
        ++label_count[p.label];
      }
    }
    for (const auto& [label, count] : label_count)
      if (count != 2)
        throw ValidationError("free label " + std::to_string(label) +
                              " must occur exactly twice");
  }

  friend bool operator==(const FareySymbol& x, const FareySymbol& y) {
    return x.verts_ == y.verts_ && x.pairs_ == y.pairs_;
  }
  friend bool operator!=(const FareySymbol& x, const FareySymbol& y) {
    return !(x == y);
  }

 private:
  std::vector<ExtFraction> verts_;
  std::vector<Pairing> pairs_;
};

// Grammar:  "[" "-oo" frac+ "oo" "|" pairing+ "]", whitespace separated,
// fractions ascending, pairings "e", "o" or a positive decimal label.
inline FareySymbol parse_symbol(const std::string& text) {
  std::string body = text;
  // trim
  while (!body.empty() && (body.front() == ' ' || body.front() == '\t'))
    body.erase(body.begin());
  while (!body.empty() && (body.back() == ' ' || body.back() == '\t' ||
                           body.back() == '\n' || body.back() == '\r'))
    body.pop_back();
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("symbol must be bracketed: '" + text + "'");
  body = body.substr(1, body.size() - 2);

  std::istringstream in(body);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);

  std::size_t i = 0;
  auto need = [&](const char* what) -> const std::string& {
    if (i >= tokens.size())
      throw ParseError(std::string("unexpected end of symbol, wanted ") + what);
    return tokens[i++];
  };

  if (need("-oo") != "-oo") throw ParseError("symbol must start with -oo");
  std::vector<ExtFraction> verts;
  while (true) {
    const std::string& tok = need("a vertex or oo");
    if (tok == "oo") break;
    ExtFraction f = parse_fraction(tok);
    if (f.infinite()) throw ParseError("interior vertices must be finite");
    if (!verts.empty() && !(verts.back() < f))
      throw ParseError("vertices must be strictly ascending");
    verts.push_back(f);
  }
  if (verts.empty()) throw ParseError("symbol needs at least one finite vertex");
  if (need("|") != "|") throw ParseError("missing '|' separator");
  std::vector<Pairing> pairs;
  while (i < tokens.size()) {
    const std::string& tok = tokens[i++];
    if (tok == "e")
      pairs.push_back(Pairing::even());
    else if (tok == "o")
      pairs.push_back(Pairing::odd());
    else {
      Int label = parse_int(tok);
      if (label <= 0 || label > 1000000000)
        throw ParseError("free label out of range: '" + tok + "'");
      pairs.push_back(Pairing::free(label.convert_to<int>()));
    }
  }
  if (pairs.size() != verts.size() + 1)
    throw ParseError("pairing count must equal vertex gap count");
  return FareySymbol(std::move(verts), std::move(pairs));
}

inline std::string format_symbol(const FareySymbol& f) {
  std::string out = "[-oo";
  for (const auto& v : f.finite_vertices()) out += " " + format_fraction(v);
  out += " oo |";
  for (long e = 0; e < f.edge_count(); ++e)
    out += " " + format_pairing(f.pairing(e));
  out += "]";
  return out;
}

}  // namespace farey
