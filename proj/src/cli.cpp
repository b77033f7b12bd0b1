#include "opetope/cli.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "opetope/cylinder.hpp"
#include "opetope/fixtures.hpp"
#include "opetope/flags.hpp"
#include "opetope/io.hpp"
#include "opetope/oracle.hpp"
#include "opetope/product.hpp"

namespace opetope {

namespace {

using io::json;
namespace fs = std::filesystem;

std::shared_ptr<const Hypergraph> shared(Hypergraph h) { return std::make_shared<const Hypergraph>(std::move(h)); }

std::string ints(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::vector<int> census(const Hypergraph& h) {
  std::vector<int> c(std::max(0, h.dim() + 1), 0);
  for (int f = 0; f < h.size(); ++f) ++c[h.dim(f)];
  return c;
}

void print_report(std::ostream& out, const std::string& what, const AxiomReport& r) {
  out << what << ": " << (r.ok() ? "pass" : "fail") << "\n";
  for (const auto& v : r.violations) {
    out << "  " << v.axiom;
    if (!v.faces.empty()) {
      out << " [";
      for (size_t i = 0; i < v.faces.size(); ++i) out << (i ? "," : "") << v.faces[i];
      out << "]";
    }
    if (!v.witness.empty()) out << ": " << v.witness;
    out << "\n";
  }
}

// a hypergraph target named in a map file: a builtin fixture, else <name>.json beside the map
std::shared_ptr<const Hypergraph> resolve_target(const std::string& name, const std::string& map_path,
                                                 const std::string& explicit_path) {
  if (!explicit_path.empty()) return shared(io::load_hypergraph(explicit_path));
  for (const auto& n : fixtures::names())
    if (name == n || name == n + "^op") return shared(fixtures::by_name(name));
  fs::path p = fs::path(map_path).parent_path() / (name + ".json");
  if (!fs::exists(p)) throw SchemaError("map target '" + name + "' is neither a fixture nor a file next to '" + map_path + "'");
  return shared(io::load_hypergraph(p.string()));
}

IotaMap load_map(const std::string& path, std::shared_ptr<const Hypergraph> source, const std::string& target_path) {
  json j = io::parse(io::read_file(path), path);
  if (!j.is_object() || !j.contains("target") || !j["target"].is_string())
    throw SchemaError(path + ": map needs a \"target\" name");
  auto target = resolve_target(j["target"].get<std::string>(), path, target_path);
  return io::map_from_json(j, source, target);
}

CylFace parse_cyl_arg(const Hypergraph& h, const std::string& text) {
  if (!text.empty() && text[0] == '[') return CylFace::of(parse_flag(h, text));
  return parse_cyl_id(h, text);
}

json analysis_json(const ProductPair& pp) {
  const auto& Q = pp.Q().hg();
  const auto& P = pp.P().hg();
  const auto& an = pp.analysis();
  auto names = [&](const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(Q.id(x));
    return a;
  };
  auto levels = [&](const std::vector<std::vector<int>>& v) {
    json a = json::array();
    for (const auto& l : v) a.push_back(names(l));
    return a;
  };
  json faces = json::array();
  for (int q = 0; q < Q.size(); ++q) {
    auto opt = [&](int x) { return x < 0 ? json(nullptr) : json(Q.id(x)); };
    auto seq = pp.splitting_sequence(q);
    json f{{"id", Q.id(q)},
           {"rho", pp.value(q)},
           {"h", P.id(pp.h()(q))},
           {"splitting", bool(an.splitting[q])},
           {"threshold", bool(an.threshold[q])},
           {"sigma", opt(an.sigma[q])},
           {"tau", opt(an.tau[q])},
           {"xi", opt(an.xi[q])},
           {"sequence", json{{"kind", sequence_kind_text(seq.kind)}, {"faces", names(seq.faces)}}},
           {"case", hcase_text(pp.which_case(q))},
           {"H", cyl_text(P, pp.H_values()[q])}};
    faces.push_back(f);
  }
  return json{{"k", an.k}, {"S", levels(an.S)}, {"T", levels(an.T)}, {"A", levels(an.A)}, {"B", levels(an.B)},
              {"faces", faces}, {"report", io::to_json(an.report)}};
}

struct Options {
  std::string format = "text";
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"positive opetopes: validation, flags, cylinders and products"};
  app.name("opetope");
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  bool as_json = false;
  std::function<int()> action;

  // validate
  std::string file;
  auto* validate = app.add_subcommand("validate", "check the opetope axioms");
  validate->add_option("file", file)->required();
  validate->callback([&] {
    action = [&] {
      Hypergraph h = io::load_hypergraph(file);
      AxiomReport r = is_opetope(h);
      if (as_json) out << io::dump(io::to_json(r));
      else print_report(out, h.name(), r);
      return r.ok() ? 0 : 1;
    };
  });

  auto* info = app.add_subcommand("info", "dimension, size and flag counts");
  info->add_option("file", file)->required();
  info->callback([&] {
    action = [&] {
      Opetope P(io::load_hypergraph(file));
      const auto& h = P.hg();
      auto flags = sorted_flags(P, {P.top()});
      Cylinder C(P);
      json j{{"name", h.name()},
             {"dim", P.dim()},
             {"top", h.id(P.top())},
             {"faces", h.size()},
             {"census", census(h)},
             {"size", size_vector(h)},
             {"maximal_flags", flags.size()},
             {"cylinder_census", census(C.hg())}};
      if (as_json) out << io::dump(j);
      else
        out << "name " << h.name() << "\ndim " << P.dim() << "\ntop " << h.id(P.top()) << "\nfaces " << h.size()
            << "\ncensus " << ints(census(h)) << "\nsize " << ints(size_vector(h)) << "\nmaximal flags "
            << flags.size() << "\ncylinder census " << ints(census(C.hg())) << "\n";
      return 0;
    };
  });

  bool only_max = false;
  std::string face;
  auto* flags = app.add_subcommand("flags", "flags in order, per face or only the maximal ones");
  flags->add_option("file", file)->required();
  flags->add_flag("--max", only_max, "only the maximal flags");
  flags->add_option("--face", face, "only the flags of this face");
  flags->callback([&] {
    action = [&] {
      Opetope P(io::load_hypergraph(file));
      const auto& h = P.hg();
      std::vector<int> tops;
      if (only_max) tops.push_back(P.top());
      else if (!face.empty()) tops.push_back(h.at(face));
      else
        for (int x = 0; x < h.size(); ++x) tops.push_back(x);
      json j = json::object();
      for (int x : tops) {
        json a = json::array();
        for (const auto& f : sorted_flags(P, {x})) a.push_back(flag_text(h, f));
        j[h.id(x)] = a;
      }
      if (as_json) out << io::dump(only_max ? j[h.id(P.top())] : j);
      else
        for (const auto& [x, a] : j.items()) {
          if (!only_max) out << x << ":\n";
          for (const auto& f : a) out << (only_max ? "" : "  ") << f.get<std::string>() << "\n";
        }
      return 0;
    };
  });

  std::string flag_arg;
  auto* nxt = app.add_subcommand("next", "the successor of a maximal flag");
  nxt->add_option("file", file)->required();
  nxt->add_option("flag", flag_arg)->required();
  nxt->callback([&] {
    action = [&] {
      Opetope P(io::load_hypergraph(file));
      const auto& h = P.hg();
      Flag x = parse_flag(h, flag_arg);
      Flag y = next(P, {x.top_face()}, x);
      Successor k = successor_kind(P, x, y);
      if (as_json)
        out << io::dump(json{{"flag", flag_text(h, y)}, {"kind", kind_text(k.kind)}, {"side", k.high ? "high" : "low"}});
      else out << flag_text(h, y) << "\n";
      return 0;
    };
  });

  auto* cyl = app.add_subcommand("cyl", "the cylinder Cyl(P)");
  cyl->require_subcommand(1);
  auto* cbuild = cyl->add_subcommand("build", "Cyl(P) as a hypergraph");
  cbuild->add_option("file", file)->required();
  cbuild->callback([&] {
    action = [&] {
      Opetope P(io::load_hypergraph(file));
      Cylinder C(P);
      if (as_json) out << io::dump(io::to_json(C.hg()));
      else {
        out << C.hg().name() << " census " << ints(census(C.hg())) << "\n";
        for (int i = 0; i < C.hg().size(); ++i) out << C.hg().id(i) << "\n";
      }
      return 0;
    };
  });
  std::string p_arg;
  auto* cstar = cyl->add_subcommand("star", "p * phi for a face p and a cylinder face phi");
  cstar->add_option("file", file)->required();
  cstar->add_option("p", p_arg)->required();
  cstar->add_option("phi", flag_arg, "a flag literal or a cylinder face id")->required();
  cstar->callback([&] {
    action = [&] {
      Opetope P(io::load_hypergraph(file));
      const auto& h = P.hg();
      StarValue v = star(P, h.at(p_arg), parse_cyl_arg(h, flag_arg));
      if (as_json) out << io::dump(json{{"face", cyl_id(h, v.face)}, {"case", star_case_text(v.which)}});
      else out << cyl_id(h, v.face) << "  (" << star_case_text(v.which) << ")\n";
      return 0;
    };
  });
  auto* cflag = cyl->add_subcommand("flag-opetope", "the flag opetope P^x inside Cyl(P)");
  cflag->add_option("file", file)->required();
  cflag->add_option("flag", flag_arg)->required();
  cflag->callback([&] {
    action = [&] {
      Opetope P(io::load_hypergraph(file));
      Cylinder C(P);
      Flag x = parse_flag(P.hg(), flag_arg);
      Hypergraph s = flag_opetope(C, x);
      AxiomReport r = flag_opetope_check(C, x);
      if (as_json) out << io::dump(io::to_json(s));
      else {
        out << s.name() << " census " << ints(census(s)) << "\n";
        for (int i = 0; i < s.size(); ++i) out << s.id(i) << "\n";
        print_report(out, "check", r);
      }
      return r.ok() ? 0 : 3;
    };
  });
  auto* cstraight = cyl->add_subcommand("straight", "the straightness certificate");
  cstraight->add_option("file", file)->required();
  cstraight->callback([&] {
    action = [&] {
      Opetope P(io::load_hypergraph(file));
      Cylinder C(P);
      auto cert = straightness_certificate(C);
      if (as_json) out << io::dump(io::to_json(P.hg(), cert));
      else {
        for (const auto& s : cert.steps)
          out << flag_text(P.hg(), s.flag) << "  meet " << (s.meet.e.empty() ? "-" : flag_text(P.hg(), s.meet))
              << "  +" << s.faces_added << "\n";
        out << "total " << cert.total_faces << " of " << C.hg().size() << "\n";
        print_report(out, "certificate", cert.report);
      }
      return cert.ok() ? 0 : 3;
    };
  });

  auto* prod = app.add_subcommand("product", "the map H: Q -> Cyl(P) of a pair rho: Q -> I, h: Q -> P");
  prod->require_subcommand(1);
  std::string rho_file, h_file, target_file;
  auto pair_args = [&](CLI::App* sc) {
    sc->add_option("Q", file)->required();
    sc->add_option("rho_map", rho_file, "map Q -> I")->required();
    sc->add_option("h_map", h_file, "map Q -> P")->required();
    sc->add_option("--target", target_file, "hypergraph file for the target of h");
  };
  auto load_pair = [&] {
    auto Q = shared(io::load_hypergraph(file));
    IotaMap rho = load_map(rho_file, Q, "");
    IotaMap h = load_map(h_file, Q, target_file);
    return ProductPair(rho, h);
  };
  auto* panalyze = prod->add_subcommand("analyze", "splitting and threshold faces, sigma, tau, xi, and the case table");
  pair_args(panalyze);
  panalyze->callback([&] {
    action = [&] {
      ProductPair pp = load_pair();
      json j = analysis_json(pp);
      if (as_json) out << io::dump(j);
      else {
        out << "k " << j["k"].get<int>() << "\n";
        for (int i = 0; i < int(j["S"].size()); ++i)
          if (!j["S"][i].empty() || !j["T"][i].empty())
            out << "S" << i << " " << j["S"][i].dump() << "  T" << i << " " << j["T"][i].dump() << "\n";
        for (const auto& f : j["faces"]) {
          out << f["id"].get<std::string>() << "  H = " << f["H"].get<std::string>() << "  ("
              << f["case"].get<std::string>() << ")";
          if (f["splitting"].get<bool>()) out << "  splitting";
          if (f["threshold"].get<bool>()) out << "  threshold";
          for (const char* k : {"sigma", "tau", "xi"})
            if (!f[k].is_null()) out << "  " << k << "=" << f[k].get<std::string>();
          out << "\n";
        }
        print_report(out, "analysis", pp.analysis().report);
      }
      return pp.analysis().report.ok() ? 0 : 3;
    };
  });
  auto* pbuild = prod->add_subcommand("build-H", "H as a map into Cyl(P)");
  pair_args(pbuild);
  pbuild->callback([&] {
    action = [&] {
      ProductPair pp = load_pair();
      IotaMap H = pp.build_H();
      if (as_json) out << io::dump(io::to_json(H));
      else
        for (int q = 0; q < H.src().size(); ++q)
          out << H.src().id(q) << " -> " << H.tgt().id(H(q)) << "  (" << hcase_text(pp.which_case(q)) << ")\n";
      return 0;
    };
  });
  auto* pverify = prod->add_subcommand("verify", "H is an iota-map over both projections and the only one");
  pair_args(pverify);
  pverify->callback([&] {
    action = [&] {
      ProductPair pp = load_pair();
      ProductVerdict v = verify_product(pp);
      json j = io::to_json(v.report);
      j["uniqueness"] = v.search.capped ? "capped" : (v.search.solutions == 1 ? "unique" : "not unique");
      j["search"] = json{{"solutions", v.search.solutions}, {"visited", v.search.visited}, {"cap", v.search.cap}};
      if (as_json) out << io::dump(j);
      else {
        print_report(out, "product", v.report);
        out << "uniqueness " << j["uniqueness"].get<std::string>() << " (" << v.search.solutions << " solutions, "
            << v.search.visited << " nodes visited, cap " << v.search.cap << ")\n";
      }
      return v.report.ok() ? 0 : 3;
    };
  });

  auto* dualc = app.add_subcommand("dual", "the dual opetope");
  dualc->add_option("file", file)->required();
  dualc->callback([&] {
    action = [&] {
      Opetope P(io::load_hypergraph(file));
      out << io::dump(io::to_json(dual(P.hg())));
      return 0;
    };
  });

  std::string oracle_id, selector = "all";
  auto* oracle = app.add_subcommand("oracle", "run a property suite on fixtures or a file; `oracle list` names them");
  oracle->add_option("id", oracle_id)->required();
  oracle->add_option("selector", selector, "fixture name, file, or all");
  oracle->callback([&] {
    action = [&] {
      if (oracle_id == "list") {
        for (const auto& id : oracle_ids()) out << id << "  " << oracle_description(id) << "\n";
        return 0;
      }
      auto results = run_oracle(oracle_id, selector);
      int code = 0;
      json a = json::array();
      for (const auto& r : results) {
        if (!r.pass) code = std::max(code, r.invalid_input ? 1 : 3);
        json c = io::to_json(r.counterexample);
        a.push_back(json{{"oracle", r.id}, {"instance", r.instance}, {"pass", r.pass}, {"detail", r.detail},
                         {"counterexample", c["violations"]}});
        if (!as_json) print_report(out, r.id + " " + r.instance + " (" + r.detail + ")", r.counterexample);
      }
      if (as_json) out << io::dump(a);
      return code;
    };
  });

  std::string fixture_name;
  auto* fixture = app.add_subcommand("fixture", "");
  fixture->group("");
  fixture->add_option("name", fixture_name)->required();
  fixture->callback([&] {
    action = [&] {
      for (const auto& m : fixtures::map_catalog())
        if (m.name == fixture_name) {
          out << io::dump(io::to_json(m.map));
          return 0;
        }
      out << io::dump(io::to_json(fixtures::by_name(fixture_name)));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  as_json = opt.format == "json";
  try {
    return action ? action() : 2;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace opetope
