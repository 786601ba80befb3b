#pragma once

#include <json.hpp>

#include "farey/cosets.hpp"
#include "farey/geometry.hpp"
#include "farey/invariants.hpp"
#include "farey/membership.hpp"
#include "farey/permutation.hpp"

namespace farey {

using ordered_json = nlohmann::ordered_json;

inline ordered_json invariants_json(const GroupInvariants& inv) {
  ordered_json j;
  j["index"] = inv.index;
  j["genus"] = inv.genus;
  j["cusps"] = inv.cusps;
  j["rank"] = inv.rank;
  j["e2"] = inv.e2;
  j["e3"] = inv.e3;
  j["level"] = inv.level;
  ordered_json classes = ordered_json::array();
  for (const auto& cls : inv.cusp_classes) {
    ordered_json c;
    c["vertices"] = ordered_json::array();
    for (const auto& v : cls.vertices) c["vertices"].push_back(format_fraction(v));
    c["width"] = cls.width;
    classes.push_back(std::move(c));
  }
  j["cusp_classes"] = std::move(classes);
  return j;
}

inline ordered_json arc_endpoint_json(const ArcEndpoint& e) {
  if (!e.is_rho_image) return format_fraction(e.vertex);
  ordered_json j;
  j["rho_image"] = format_matrix(e.gamma);
  return j;
}

inline ordered_json geometry_json(const PolygonGeometry& geo) {
  ordered_json arcs = ordered_json::array();
  for (const auto& arc : geo.arcs) {
    ordered_json a;
    a["from"] = arc_endpoint_json(arc.from);
    a["to"] = arc_endpoint_json(arc.to);
    a["kind"] = arc_kind_name(arc.kind);
    a["pairing"] = format_pairing(arc.pairing);
    arcs.push_back(std::move(a));
  }
  ordered_json j;
  j["arcs"] = std::move(arcs);
  return j;
}

inline ordered_json perm_json(const Permutation& p) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < p.size(); ++i) a.push_back(p(i) + 1);
  return a;
}

inline ordered_json perm_pair_json(const PermutationPair& pair) {
  ordered_json j;
  j["mu"] = pair.mu;
  j["e"] = perm_json(pair.e);
  j["v"] = perm_json(pair.v);
  j["l"] = perm_json(pair.l());
  j["r"] = perm_json(pair.r());
  return j;
}

inline ordered_json certificate_json(const MembershipCertificate& cert) {
  ordered_json j;
  j["member"] = cert.verdict;
  j["terminal"] = terminal_name(cert.terminal);
  j["steps"] = cert.steps;
  if (cert.verdict) {
    ordered_json w = ordered_json::array();
    for (const auto& [idx, exp] : cert.word) {
      ordered_json t;
      t["generator"] = idx + 1;
      t["exponent"] = exp;
      w.push_back(std::move(t));
    }
    j["word"] = std::move(w);
  }
  return j;
}

}  // namespace farey
