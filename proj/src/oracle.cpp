#include "opetope/oracle.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "opetope/cylinder.hpp"
#include "opetope/fixtures.hpp"
#include "opetope/flags.hpp"
#include "opetope/io.hpp"
#include "opetope/omega.hpp"
#include "opetope/product.hpp"

namespace opetope {

namespace {

std::shared_ptr<const Hypergraph> shared(Hypergraph h) { return std::make_shared<const Hypergraph>(std::move(h)); }

std::string vec_text(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::vector<int> census(const Hypergraph& h) {
  std::vector<int> c(std::max(0, h.dim() + 1), 0);
  for (int f = 0; f < h.size(); ++f) ++c[h.dim(f)];
  return c;
}

// Flags[x / 0) for every face, and Flags[x / y] whenever y sits at least two levels below x
std::vector<FlagSet> all_flag_sets(const Opetope& P) {
  const auto& h = P.hg();
  std::vector<FlagSet> out;
  for (int x = 0; x < h.size(); ++x) {
    out.push_back({x});
    for (int y = 0; y < h.size(); ++y)
      if (P.in(x, y) && h.dim(y) + 1 < h.dim(x)) out.push_back({x, y});
  }
  return out;
}

std::string set_text(const Hypergraph& h, const FlagSet& s) {
  return "Flags[" + h.id(s.top) + (s.over < 0 ? " / 0)" : " / " + h.id(s.over) + "]");
}

// p-flags straight from the definition: each flag punctured below its top and at its low level
std::set<Flag> pflags_by_definition(const Opetope& P) {
  const auto& h = P.hg();
  std::set<Flag> out;
  for (int x = 0; x < h.size(); ++x)
    for (const auto& f : enumerate_flag_set(P, {x})) {
      int k = f.top();
      if (k == 0) continue;
      Flag hi = f;
      hi.e[k - 1] = kDummy;
      out.insert(hi);
      int ll = -1;
      for (int i = 0; i + 2 <= k; ++i) {
        const auto& d = h.delta(f.e[i + 2]);
        if (std::find(d.begin(), d.end(), f.e[i + 1]) != d.end()) ll = i;
      }
      if (ll >= 0) {
        Flag lo = f;
        lo.e[ll] = kDummy;
        out.insert(lo);
      }
    }
  return out;
}

// identity, terminal map, onto maps to I, and any catalog degeneracy out of Q
std::vector<std::pair<std::string, IotaMap>> maps_out_of(std::shared_ptr<const Hypergraph> Q) {
  std::vector<std::pair<std::string, IotaMap>> out;
  Opetope P(*Q);
  out.push_back({"id_" + Q->name(), identity_map(Q)});
  out.push_back({"terminal_" + Q->name(), IotaMap{Q, shared(fixtures::point()), std::vector<int>(Q->size(), 0)}});
  if (P.dim() >= 1) {
    auto iv = shared(fixtures::interval());
    for (int p : interval_map_generators(P))
      out.push_back({"h_" + Q->id(p) + ":" + Q->name() + "->I", interval_map(P, p, iv)});
  }
  for (auto& m : fixtures::map_catalog())
    if (m.name.rfind("collapse_", 0) == 0 && m.map.src().name() == Q->name() && same_structure(m.map.src(), *Q))
      out.push_back({m.name, IotaMap{Q, m.map.target, m.map.assign}});
  return out;
}

std::vector<PairCase> pairs_out_of(std::shared_ptr<const Hypergraph> Q) {
  auto iv = shared(fixtures::interval());
  auto hs = maps_out_of(Q);
  std::vector<std::pair<std::string, IotaMap>> rhos;
  rhos.push_back({"-", constant_map(Q, iv, iv->at("s"))});
  rhos.push_back({"+", constant_map(Q, iv, iv->at("t"))});
  for (const auto& [n, m] : hs)
    if (n.rfind("h_", 0) == 0) rhos.push_back({n, m});
  std::vector<PairCase> out;
  for (const auto& r : rhos)
    for (const auto& h : hs) out.push_back({Q->name() + ": rho=" + r.first + ", h=" + h.first, r.second, h.second});
  return out;
}

using Suite = std::function<void(const std::string&, const Hypergraph&, OracleResult&)>;

void suite_axioms(const std::string&, const Hypergraph& h, OracleResult& r) {
  r.counterexample = is_opetope(h);
  r.detail = "size " + vec_text(size_vector(h));
}

void suite_mutations(const std::string&, const Hypergraph& h, OracleResult& r) {
  MutationRun run = mutation_run(h, 20);
  for (const auto& m : run.rejected)
    if (same_structure(m.mutation.result, h)) r.counterexample.add("mutation-identity", {}, m.mutation.description);
  std::set<std::string> axioms;
  for (const auto& m : run.rejected)
    for (const auto& v : m.report.violations) axioms.insert(v.axiom);
  r.detail = std::to_string(run.rejected.size()) + " mutants rejected (" + std::to_string(run.benign) +
             " benign skipped), " + std::to_string(axioms.size()) + " distinct axioms named";
}

void suite_successor_walk(const std::string&, const Hypergraph& h, OracleResult& r) {
  Opetope P(h);
  const auto& g = P.hg();
  for (const auto& s : all_flag_sets(P)) {
    auto sorted = sorted_flags(P, s);
    std::vector<Flag> walk{initial_flag(P, s)};
    while (walk.size() < sorted.size() + 1) {
      Flag f;
      try {
        f = next(P, s, walk.back());
      } catch (const UsageError&) {
        break;
      }
      walk.push_back(f);
    }
    if (walk != sorted) {
      std::string w;
      for (const auto& f : walk) w += flag_text(g, f) + " ";
      r.counterexample.add("successor-walk", {g.id(s.top)}, set_text(g, s) + ": walk " + w);
    }
  }
  r.detail = std::to_string(sorted_flags(P, {P.top()}).size()) + " maximal flags";
}

void suite_endpoints(const std::string&, const Hypergraph& h, OracleResult& r) {
  Opetope P(h);
  const auto& g = P.hg();
  auto sets = all_flag_sets(P);
  for (const auto& s : sets) {
    auto sorted = sorted_flags(P, s);
    Flag i = initial_flag(P, s), t = terminal_flag(P, s);
    if (i != sorted.front()) r.counterexample.add("initial-flag", {g.id(s.top)}, set_text(g, s) + ": " + flag_text(g, i));
    if (t != sorted.back()) r.counterexample.add("terminal-flag", {g.id(s.top)}, set_text(g, s) + ": " + flag_text(g, t));
  }
  r.detail = std::to_string(sets.size()) + " flag sets";
}

void suite_dual_flags(const std::string&, const Hypergraph& h, OracleResult& r) {
  r.counterexample = dual_flag_suite(Opetope(h));
}

void suite_census(const std::string&, const Hypergraph& h, OracleResult& r) {
  Opetope P(h);
  Cylinder C(P);
  std::vector<int> expect(P.dim() + 2, 0);
  for (int x = 0; x < h.size(); ++x) {
    expect[h.dim(x)] += 2;
    expect[h.dim(x) + 1] += int(enumerate_flag_set(P, {x}).size());
  }
  for (const auto& z : pflags_by_definition(P)) expect[z.dim()] += 1;
  auto got = census(C.hg());
  if (got != expect) r.counterexample.add("cylinder-census", {}, vec_text(got) + " vs " + vec_text(expect));
  r.detail = "Cyl census " + vec_text(got);
}

void suite_flag_opetopes(const std::string&, const Hypergraph& h, OracleResult& r) {
  Opetope P(h);
  Cylinder C(P);
  int n = 0;
  for (const auto& x : C.table().maximal_flags()) {
    r.counterexample.merge(flag_opetope_check(C, x));
    r.counterexample.merge(unique_projection_check(C, x));
    ++n;
  }
  int m = 0;
  for (const auto& z : C.table().pflags_under(P.top())) {
    r.counterexample.merge(flag_opetope_check(C, z));
    ++m;
  }
  r.detail = std::to_string(n) + " flag opetopes, " + std::to_string(m) + " p-flag opetopes";
}

void suite_intersections(const std::string&, const Hypergraph& h, OracleResult& r) {
  Opetope P(h);
  Cylinder C(P);
  const auto& fl = C.table().maximal_flags();
  int n = 0;
  for (size_t i = 0; i + 1 < fl.size(); ++i, ++n) r.counterexample.merge(intersection_check(C, fl[i]));
  r.detail = std::to_string(n) + " intersections checked";
}

void suite_straightness(const std::string&, const Hypergraph& h, OracleResult& r) {
  Opetope P(h);
  Cylinder C(P);
  auto cert = straightness_certificate(C);
  r.counterexample = cert.report;
  if (cert.total_faces != C.hg().size())
    r.counterexample.add("straightness-cover", {}, std::to_string(cert.total_faces) + " of " + std::to_string(C.hg().size()));
  r.detail = std::to_string(cert.steps.size()) + " steps covering " + std::to_string(cert.total_faces) + " of " +
             std::to_string(C.hg().size()) + " faces";
}

void suite_star(const std::string&, const Hypergraph& h, OracleResult& r) {
  Opetope P(h);
  Cylinder C(P);
  r.counterexample.merge(iteration_suite(C));
  r.counterexample.merge(monotone_suite(C.table()));
  r.counterexample.merge(dual_star_suite(P));
  r.detail = "iteration, monotonicity and dual star over " + std::to_string(C.hg().size()) + " cylinder faces";
}

void suite_iota(const std::string&, const Hypergraph& h, OracleResult& r) {
  auto Q = shared(h);
  auto maps = maps_out_of(Q);
  for (const auto& [name, m] : maps) {
    AxiomReport a = validate_iota_map(m);
    a.merge(iota_preservation_suite(m));
    for (int p = 0; p < m.tgt().size(); ++p)
      if (!fiber_interval_check(m, p)) a.add("interval-fiber", {m.tgt().id(p)}, "fiber is not a +-interval");
    a.merge(two_collapse_suite(m));
    a.merge(restriction_suite(m));
    for (auto v : a.violations) {
      v.witness = name + ": " + v.witness;
      r.counterexample.violations.push_back(v);
    }
  }
  r.detail = std::to_string(maps.size()) + " maps";
}

void suite_omega(const std::string&, const Hypergraph& h, OracleResult& r) {
  LawStats st;
  r.counterexample = omega_law_suite(h, &st);
  auto maps = maps_out_of(shared(h));
  for (const auto& [name, m] : maps) {
    AxiomReport a = image_suite(m);
    for (auto v : a.violations) {
      v.witness = name + ": " + v.witness;
      r.counterexample.violations.push_back(v);
    }
  }
  r.detail = std::to_string(st.cells) + " cells, " + std::to_string(st.compositions) + " composites, " +
             std::to_string(maps.size()) + " image checks";
}

void suite_product(const std::string&, const Hypergraph& h, OracleResult& r) {
  auto pairs = pairs_out_of(shared(h));
  long long visited = 0;
  for (const auto& pc : pairs) {
    ProductPair pp(pc.rho, pc.h);
    auto v = verify_product(pp);
    visited += v.search.visited;
    for (auto x : v.report.violations) {
      x.witness = pc.name + ": " + x.witness;
      r.counterexample.violations.push_back(x);
    }
  }
  r.detail = std::to_string(pairs.size()) + " pairs, unique H for each, " + std::to_string(visited) + " search nodes";
}

void suite_product_lemmas(const std::string&, const Hypergraph& h, OracleResult& r) {
  auto pairs = pairs_out_of(shared(h));
  for (const auto& pc : pairs) {
    ProductPair pp(pc.rho, pc.h);
    for (auto x : h_lemma_suite(pp).violations) {
      x.witness = pc.name + ": " + x.witness;
      r.counterexample.violations.push_back(x);
    }
  }
  r.detail = std::to_string(pairs.size()) + " pairs";
}

struct Entry {
  std::string id;
  std::string description;
  Suite run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r{
      {"axioms", "the opetope axioms and the size bound", suite_axioms},
      {"mutations", "20 single-field mutants each fail with a named axiom", suite_mutations},
      {"successor-walk", "next from the initial flag walks the sorted flag order", suite_successor_walk},
      {"endpoints", "initial and terminal flag formulas against the sorted order", suite_endpoints},
      {"dual-flags", "flags, signs and order of the dual", suite_dual_flags},
      {"census", "cylinder face counts against an independent enumeration", suite_census},
      {"flag-opetopes", "flag and p-flag opetopes: census, axioms, unique projection", suite_flag_opetopes},
      {"intersections", "consecutive flag opetopes meet in the p-flag opetope", suite_intersections},
      {"straightness", "straightness certificate covering the cylinder", suite_straightness},
      {"star", "star: iteration, monotonicity of low/high, dual signs", suite_star},
      {"iota", "iota-maps: preservation, interval fibers, 2-collapse, restrictions", suite_iota},
      {"omega", "cell laws and images under iota-maps", suite_omega},
      {"product", "H is an iota-map over both projections and the only one", suite_product},
      {"product-lemmas", "kernel, collapse, star and splitting-sequence properties of H", suite_product_lemmas},
  };
  return r;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw UsageError("unknown oracle '" + id + "'");
}

}  // namespace

const std::vector<std::string>& oracle_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string oracle_description(const std::string& id) { return entry(id).description; }

std::vector<std::pair<std::string, Hypergraph>> select_instances(const std::string& selector) {
  std::vector<std::pair<std::string, Hypergraph>> out;
  if (selector == "all") {
    for (const auto& n : fixtures::names()) {
      out.push_back({n, fixtures::by_name(n)});
      if (n != "PT") out.push_back({n + "^op", fixtures::by_name(n + "^op")});
    }
    return out;
  }
  if (std::filesystem::exists(selector)) {
    out.push_back({selector, io::load_hypergraph(selector)});
    return out;
  }
  out.push_back({selector, fixtures::by_name(selector)});
  return out;
}

OracleResult run_oracle_on(const std::string& id, const std::string& instance, const Hypergraph& h) {
  const Entry& e = entry(id);
  OracleResult r{id, instance, false, false, "", {}};
  AxiomReport a = is_opetope(h);
  if (!a.ok()) {
    r.invalid_input = true;
    r.counterexample = a;
    r.detail = "input is not an opetope";
    return r;
  }
  try {
    e.run(instance, h, r);
  } catch (const std::exception& ex) {
    r.counterexample.add("exception", {}, ex.what());
  }
  r.pass = r.counterexample.ok();
  return r;
}

std::vector<OracleResult> run_oracle(const std::string& id, const std::string& selector) {
  entry(id);
  std::vector<OracleResult> out;
  for (const auto& [name, h] : select_instances(selector)) out.push_back(run_oracle_on(id, name, h));
  return out;
}

std::vector<Mutation> single_field_mutations(const Hypergraph& h) {
  struct Rec {
    std::string id;
    int dim;
    std::string gamma;
    std::vector<std::string> delta;
  };
  std::vector<Rec> base;
  for (int f = 0; f < h.size(); ++f) {
    Rec r{h.id(f), h.dim(f), h.gamma(f) >= 0 ? h.id(h.gamma(f)) : "", {}};
    for (int d : h.delta(f)) r.delta.push_back(h.id(d));
    base.push_back(r);
  }
  auto build = [&](const std::vector<Rec>& recs) {
    Hypergraph m(h.name());
    for (const auto& r : recs) m.add_face(r.id, r.dim);
    for (size_t i = 0; i < recs.size(); ++i) {
      if (!recs[i].gamma.empty()) m.set_gamma(int(i), m.at(recs[i].gamma));
      std::vector<int> d;
      for (const auto& x : recs[i].delta) d.push_back(m.at(x));
      m.set_delta(int(i), d);
    }
    return m;
  };
  auto has = [](const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };

  std::map<std::string, std::vector<Mutation>> by_kind;
  const std::vector<std::string> kinds{"gamma-retarget", "delta-drop",    "gamma-delta-swap",
                                       "delta-add",      "delta-replace", "dimension"};
  auto emit = [&](const std::string& kind, std::vector<Rec> recs, std::string desc) {
    by_kind[kind].push_back({kind, std::move(desc), build(recs)});
  };
  int n = h.size();
  // dimension-respecting targets first, then the rest; faces from the top down
  for (int pass = 0; pass < 2; ++pass)
    for (int f = n - 1; f >= 0; --f) {
      const Rec& r = base[f];
      for (int g = 0; g < n; ++g) {
        bool fits = h.dim(g) == r.dim - 1;
        if (fits != (pass == 0)) continue;
        if (r.gamma != h.id(g)) {
          auto recs = base;
          recs[f].gamma = h.id(g);
          emit("gamma-retarget", recs, "gamma(" + r.id + "): " + (r.gamma.empty() ? "none" : r.gamma) + " -> " + h.id(g));
        }
        if (!has(r.delta, h.id(g))) {
          auto recs = base;
          recs[f].delta.push_back(h.id(g));
          emit("delta-add", recs, "delta(" + r.id + "): add " + h.id(g));
          for (const auto& d : r.delta) {
            auto rr = base;
            std::replace(rr[f].delta.begin(), rr[f].delta.end(), d, h.id(g));
            emit("delta-replace", rr, "delta(" + r.id + "): " + d + " -> " + h.id(g));
          }
        }
      }
    }
  for (int f = n - 1; f >= 0; --f) {
    const Rec& r = base[f];
    for (const auto& d : r.delta) {
      auto recs = base;
      recs[f].delta.erase(std::find(recs[f].delta.begin(), recs[f].delta.end(), d));
      emit("delta-drop", recs, "delta(" + r.id + "): drop " + d);
      if (!r.gamma.empty()) {
        auto sw = base;
        sw[f].gamma = d;
        std::replace(sw[f].delta.begin(), sw[f].delta.end(), d, r.gamma);
        emit("gamma-delta-swap", sw, "swap gamma(" + r.id + ") = " + r.gamma + " with " + d);
      }
    }
    for (int step : {1, -1}) {
      if (r.dim + step < 0) continue;
      auto recs = base;
      recs[f].dim += step;
      emit("dimension", recs, "dim(" + r.id + "): " + std::to_string(r.dim) + " -> " + std::to_string(r.dim + step));
    }
  }

  std::vector<Mutation> out;
  for (size_t i = 0;; ++i) {
    bool any = false;
    for (const auto& k : kinds) {
      auto& v = by_kind[k];
      if (i < v.size()) {
        out.push_back(std::move(v[i]));
        any = true;
      }
    }
    if (!any) break;
  }
  return out;
}

MutationRun mutation_run(const Hypergraph& h, int limit) {
  MutationRun run;
  auto all = single_field_mutations(h);
  run.candidates = int(all.size());
  for (auto& m : all) {
    if (int(run.rejected.size()) >= limit) break;
    AxiomReport r = is_opetope(m.result);
    if (r.ok()) {
      ++run.benign;
      continue;
    }
    run.rejected.push_back({std::move(m), std::move(r)});
  }
  return run;
}

std::vector<PairCase> product_pair_catalog(const std::vector<std::string>& sources) {
  std::vector<PairCase> out;
  for (const auto& s : sources) {
    auto v = pairs_out_of(shared(fixtures::by_name(s)));
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace opetope
