// Command line front end: builds Farey symbols for membership-defined
// subgroups of PSL2(Z) and queries them.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "farey/farey.hpp"

namespace {

struct Options {
  std::string group;
  std::string symbol_text;
  std::string matrix;
  std::string method = "hsu";
  std::string format = "json";
  bool json = false;
  bool word = false;
  long max_edges = 2000;
  unsigned long long cap = 1000000;
  unsigned long long max_level = 8;
};

farey::FareySymbol resolve_symbol(const Options& opt) {
  if (!opt.symbol_text.empty()) return farey::parse_symbol(opt.symbol_text);
  if (opt.group.empty())
    throw farey::ValidationError("one of --group or --symbol is required");
  return farey::construct_symbol(farey::parse_group_spec(opt.group),
                                 opt.max_edges);
}

std::string word_text(const farey::MembershipCertificate& cert) {
  if (cert.word.empty()) return "1";
  std::string out;
  for (const auto& [idx, exp] : cert.word) {
    if (!out.empty()) out += " ";
    out += "g" + std::to_string(idx + 1);
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

const char* congruence_text(farey::Congruence c) {
  switch (c) {
    case farey::Congruence::Yes: return "yes";
    case farey::Congruence::No: return "no";
    default: return "inconclusive";
  }
}

int run(const std::string& cmd, const Options& opt) {
  using namespace farey;

  if (cmd == "symbol") {
    std::cout << format_symbol(resolve_symbol(opt)) << "\n";
    return 0;
  }

  if (cmd == "generators") {
    FareySymbol f = resolve_symbol(opt);
    auto gens = generators(f);
    if (opt.json) {
      ordered_json j = ordered_json::array();
      for (const auto& g : gens) j.push_back(format_matrix(g));
      std::cout << ordered_json{{"generators", j}}.dump() << "\n";
    } else {
      for (const auto& g : gens) std::cout << format_matrix(g) << "\n";
    }
    return 0;
  }

  if (cmd == "invariants") {
    GroupInvariants inv = invariants(resolve_symbol(opt));
    if (opt.json) {
      std::cout << invariants_json(inv).dump() << "\n";
    } else {
      std::cout << "index: " << inv.index << "\ngenus: " << inv.genus
                << "\ncusps: " << inv.cusps << "\nrank: " << inv.rank
                << "\ne2: " << inv.e2 << "\ne3: " << inv.e3
                << "\nlevel: " << inv.level << "\n";
      for (const auto& cls : inv.cusp_classes) {
        std::cout << "cusp class {";
        for (std::size_t i = 0; i < cls.vertices.size(); ++i)
          std::cout << (i ? " " : "") << format_fraction(cls.vertices[i]);
        std::cout << "} width " << cls.width << "\n";
      }
    }
    return 0;
  }

  if (cmd == "contains") {
    if (opt.matrix.empty())
      throw ValidationError("contains requires --matrix a,b,c,d");
    FareySymbol f = resolve_symbol(opt);
    ProjectiveMatrix m = parse_matrix(opt.matrix);
    MembershipCertificate cert = contains(f, m, opt.cap);
    if (opt.json) {
      std::cout << certificate_json(cert).dump() << "\n";
    } else {
      std::cout << (cert.verdict ? "yes" : "no") << "\n";
      if (cert.verdict && opt.word)
        std::cout << "word: " << word_text(cert) << "\n";
    }
    return 0;
  }

  if (cmd == "cosets") {
    FareySymbol f = resolve_symbol(opt);
    CosetReps reps = coset_reps_from_symbol(f);
    if (opt.json) {
      ordered_json j = ordered_json::array();
      for (const auto& r : reps.reps) j.push_back(format_matrix(r));
      std::cout << ordered_json{{"cosets", j}}.dump() << "\n";
    } else {
      for (const auto& r : reps.reps) std::cout << format_matrix(r) << "\n";
    }
    return 0;
  }

  if (cmd == "permrep") {
    FareySymbol f = resolve_symbol(opt);
    CosetTable table = perm_rep(f);
    if (opt.json) {
      std::cout << perm_pair_json(table.perm).dump() << "\n";
    } else {
      std::cout << "mu: " << table.perm.mu << "\n"
                << "e: " << format_cycles(table.perm.e) << "\n"
                << "v: " << format_cycles(table.perm.v) << "\n"
                << "l: " << format_cycles(table.perm.l()) << "\n"
                << "r: " << format_cycles(table.perm.r()) << "\n";
    }
    return 0;
  }

  if (cmd == "congruence") {
    FareySymbol f = resolve_symbol(opt);
    bool want_hsu = opt.method == "hsu" || opt.method == "both";
    bool want_w = opt.method == "wohlfahrt" || opt.method == "both";
    if (!want_hsu && !want_w)
      throw ValidationError("--method must be hsu, wohlfahrt or both");
    ordered_json j;
    std::string text;
    if (want_hsu) {
      bool hsu = congruence_hsu(perm_rep(f).perm);
      j["hsu"] = hsu ? "yes" : "no";
      text += (opt.method == "both" ? std::string("hsu: ") : std::string()) +
              (hsu ? "yes" : "no") + "\n";
    }
    if (want_w) {
      Congruence w = congruence_wohlfahrt(f, opt.max_level);
      j["wohlfahrt"] = congruence_text(w);
      text += (opt.method == "both" ? std::string("wohlfahrt: ") : std::string()) +
              congruence_text(w) + "\n";
    }
    if (opt.json)
      std::cout << j.dump() << "\n";
    else
      std::cout << text;
    return 0;
  }

  if (cmd == "domain") {
    FareySymbol f = resolve_symbol(opt);
    if (opt.format == "svg") {
      std::cout << svg_domain(f);
    } else if (opt.format == "json") {
      std::cout << geometry_json(polygon_geometry(f)).dump() << "\n";
    } else {
      throw ValidationError("--format must be json or svg");
    }
    return 0;
  }

  throw ValidationError("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Farey symbols for finite index subgroups of PSL2(Z)"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--group", opt.group,
                 "group spec: gamma0:N, gamma1:N, gamma:N, "
                 "perm:l=(..),r=(..), symbol:<text>");
  app.add_option("--symbol", opt.symbol_text, "Farey symbol text")
      ->excludes("--group");
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--max-edges", opt.max_edges,
                 "construction edge cap (default 2000)");
  app.add_option("--cap", opt.cap,
                 "membership iteration cap (default 1000000)");

  app.add_subcommand("symbol", "construct or normalize a Farey symbol");
  app.add_subcommand("generators", "independent generators");
  app.add_subcommand("invariants", "index, genus, cusps, level, ...");
  auto* c_contains =
      app.add_subcommand("contains", "membership test with certificate");
  c_contains->add_option("--matrix", opt.matrix, "query matrix a,b,c,d");
  c_contains->add_flag("--word", opt.word, "print the generator word");
  app.add_subcommand("cosets", "left coset representatives");
  app.add_subcommand("permrep", "coset permutation representation");
  auto* c_cong = app.add_subcommand("congruence", "congruence test");
  c_cong->add_option("--method", opt.method, "hsu, wohlfahrt or both");
  c_cong->add_option("--max-level", opt.max_level,
                     "wohlfahrt level cap (default 8)");
  auto* c_domain = app.add_subcommand("domain", "fundamental domain geometry");
  c_domain->add_option("--format", opt.format, "json or svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), opt);
  } catch (const farey::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
