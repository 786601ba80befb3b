#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "farey/matrix.hpp"
#include "farey/symbol.hpp"

namespace farey {

// Endpoint of a boundary arc: either a vertex of the symbol or the
// interior corner of an odd edge, kept exact as the image of
// rho = 1/2 + sqrt(3)/2 i under a stored matrix.
struct ArcEndpoint {
  bool is_rho_image = false;
  ExtFraction vertex;        // valid when !is_rho_image
  ProjectiveMatrix gamma;    // valid when is_rho_image

  static ArcEndpoint at(const ExtFraction& v) { return {false, v, {}}; }
  static ArcEndpoint rho(const ProjectiveMatrix& g) {
    return {true, ExtFraction(0, 1), g};
  }
};

enum class ArcKind { EvenEdge, OddEdge, FEdge };

inline const char* arc_kind_name(ArcKind k) {
  switch (k) {
    case ArcKind::EvenEdge: return "even-edge";
    case ArcKind::OddEdge: return "odd-edge";
    default: return "f-edge";
  }
}

struct Arc {
  ArcEndpoint from, to;
  ArcKind kind;
  Pairing pairing;
};

struct PolygonGeometry {
  std::vector<Arc> arcs;
};

// One full hyperbolic arc per even or free edge; odd edges split at the
// corner gamma(rho) where gamma maps (0, oo) to the edge endpoints.
inline PolygonGeometry polygon_geometry(const FareySymbol& f) {
  f.validate();
  PolygonGeometry geo;
  for (long e = 0; e < f.edge_count(); ++e) {
    ExtFraction u = f.edge_left(e), w = f.edge_right(e);
    const Pairing& p = f.pairing(e);
    if (p.kind == Pairing::Even) {
      geo.arcs.push_back(
          {ArcEndpoint::at(u), ArcEndpoint::at(w), ArcKind::EvenEdge, p});
    } else if (p.kind == Pairing::Free) {
      geo.arcs.push_back(
          {ArcEndpoint::at(u), ArcEndpoint::at(w), ArcKind::FEdge, p});
    } else {
      // gamma(0) = u, gamma(oo) = w; det = det_pairing(u, w) = 1
      ProjectiveMatrix g(w.p, u.p, w.q, u.q);
      geo.arcs.push_back(
          {ArcEndpoint::at(u), ArcEndpoint::rho(g), ArcKind::OddEdge, p});
      geo.arcs.push_back(
          {ArcEndpoint::rho(g), ArcEndpoint::at(w), ArcKind::OddEdge, p});
    }
  }
  return geo;
}

namespace detail {

struct PlanePoint {
  double x = 0, y = 0;
  bool infinite = false;
};

inline PlanePoint endpoint_position(const ArcEndpoint& e) {
  if (e.is_rho_image) {
    // gamma(rho) with rho = 1/2 + sqrt(3)/2 i, evaluated in floats for
    // display only
    double rx = 0.5, ry = std::sqrt(3.0) / 2.0;
    double a = static_cast<double>(e.gamma.a), b = static_cast<double>(e.gamma.b);
    double c = static_cast<double>(e.gamma.c), d = static_cast<double>(e.gamma.d);
    double den = (c * rx + d) * (c * rx + d) + c * c * ry * ry;
    double nx = (a * rx + b) * (c * rx + d) + a * c * ry * ry;
    double ny = ry * (a * d - b * c);
    return {nx / den, ny / den, false};
  }
  if (e.vertex.infinite()) return {0, 0, true};
  return {static_cast<double>(e.vertex.p) / static_cast<double>(e.vertex.q), 0,
          false};
}

inline void append_arc_path(std::string& out, PlanePoint s, PlanePoint t,
                            double ytop, const char* cls) {
  char buf[256];
  if (s.infinite || t.infinite) {
    PlanePoint fin = s.infinite ? t : s;
    std::snprintf(buf, sizeof buf,
                  "  <path class=\"%s\" d=\"M %.4f %.4f L %.4f %.4f\"/>\n",
                  cls, fin.x, fin.y, fin.x, ytop);
    out += buf;
    return;
  }
  // circle through s and t with centre on the real axis
  double cx;
  if (std::abs(s.y) < 1e-12 && std::abs(t.y) < 1e-12)
    cx = (s.x + t.x) / 2;
  else
    cx = (t.x * t.x + t.y * t.y - s.x * s.x - s.y * s.y) / (2 * (t.x - s.x));
  double r = std::hypot(s.x - cx, s.y);
  double a0 = std::atan2(s.y, s.x - cx), a1 = std::atan2(t.y, t.x - cx);
  std::snprintf(buf, sizeof buf, "  <path class=\"%s\" d=\"M %.4f %.4f", cls,
                s.x, s.y);
  out += buf;
  const int kSegments = 24;
  for (int k = 1; k <= kSegments; ++k) {
    double a = a0 + (a1 - a0) * k / kSegments;
    std::snprintf(buf, sizeof buf, " L %.4f %.4f", cx + r * std::cos(a),
                  r * std::sin(a));
    out += buf;
  }
  out += "\"/>\n";
}

}  // namespace detail

// Decorative SVG rendering of the special polygon boundary in a fixed
// 800x440 viewport, upper half plane with y up.
inline std::string svg_domain(const FareySymbol& f) {
  PolygonGeometry geo = polygon_geometry(f);
  double xmin = static_cast<double>(f.vertex(0).p) / static_cast<double>(f.vertex(0).q);
  double xmax = static_cast<double>(f.vertex(f.n()).p) /
                static_cast<double>(f.vertex(f.n()).q);
  xmin -= 1.0;
  xmax += 1.0;
  double ytop = (xmax - xmin) * 0.5;

  std::string body;
  for (const auto& arc : geo.arcs) {
    const char* cls = arc.kind == ArcKind::EvenEdge
                          ? "even"
                          : (arc.kind == ArcKind::OddEdge ? "odd" : "free");
    detail::append_arc_path(body, detail::endpoint_position(arc.from),
                            detail::endpoint_position(arc.to), ytop, cls);
  }

  char buf[512];
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 440\">\n";
  std::snprintf(buf, sizeof buf,
                "<g transform=\"translate(0,400) scale(%.6f,-%.6f) "
                "translate(%.6f,0)\">\n",
                800.0 / (xmax - xmin), 800.0 / (xmax - xmin), -xmin);
  out += buf;
  out += "<style>path{fill:none;stroke-width:0.02}.even{stroke:#1f77b4}"
         ".odd{stroke:#d62728}.free{stroke:#2ca02c}.axis{stroke:#888}"
         "</style>\n";
  std::snprintf(buf, sizeof buf,
                "  <path class=\"axis\" d=\"M %.4f 0 L %.4f 0\"/>\n", xmin,
                xmax);
  out += buf;
  out += body;
  out += "</g>\n";
  for (long i = 0; i <= f.n(); ++i) {
    double x = static_cast<double>(f.vertex(i).p) /
               static_cast<double>(f.vertex(i).q);
    double px = (x - xmin) * 800.0 / (xmax - xmin);
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.2f\" y=\"418\" font-size=\"14\" "
                  "text-anchor=\"middle\">%s</text>\n",
                  px, format_fraction(f.vertex(i)).c_str());
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace farey
