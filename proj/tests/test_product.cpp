#include <cstdlib>
#include <map>
#include <set>

#include "doctest.h"
#include "opetope/fixtures.hpp"
#include "opetope/product.hpp"

using namespace opetope;
using Table = std::map<std::string, std::string>;

static std::shared_ptr<const Hypergraph> shared(Hypergraph h) { return std::make_shared<const Hypergraph>(std::move(h)); }

static IotaMap to_interval(std::shared_ptr<const Hypergraph> Q, const std::string& edge) {
  return interval_map(Opetope(*Q), Q->at(edge), shared(fixtures::interval()));
}

static Table H_table(const ProductPair& pp) {
  Table t;
  const auto& Q = pp.Q().hg();
  for (int q = 0; q < Q.size(); ++q) t[Q.id(q)] = cyl_text(pp.P().hg(), pp.H_values()[q]);
  return t;
}

static std::vector<std::string> ids(const Hypergraph& h, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(h.id(x));
  return out;
}

// every (rho, h) pair over the sources I, G1, G2 and their duals
struct Pair {
  std::string name;
  IotaMap rho, h;
};
static std::vector<Pair> catalog_pairs() {
  auto iv = shared(fixtures::interval());
  auto cat = fixtures::map_catalog();
  std::vector<Pair> out;
  for (std::string q : {"I", "G1", "G2", "I^op", "G1^op", "G2^op"}) {
    auto Q = shared(fixtures::by_name(q));
    std::vector<std::pair<std::string, IotaMap>> rhos, hs;
    rhos.push_back({"-", constant_map(Q, iv, iv->at("s"))});
    rhos.push_back({"+", constant_map(Q, iv, iv->at("t"))});
    for (const auto& m : cat) {
      if (!same_structure(m.map.src(), *Q)) continue;
      if (m.map.src().name() != Q->name()) continue;
      IotaMap f{Q, m.map.target, m.map.assign};
      if (m.map.tgt().name() == "I" && m.name.rfind("h_", 0) == 0) rhos.push_back({m.name, f});
      hs.push_back({m.name, f});
    }
    for (const auto& r : rhos)
      for (const auto& h : hs) out.push_back({q + ": rho=" + r.first + ", h=" + h.first, r.second, h.second});
  }
  return out;
}

// all face functions over both projections, each checked as an iota-map
static long long brute_force_count(const ProductPair& pp) {
  const auto& Q = pp.Q().hg();
  const Cylinder& C = pp.cylinder();
  std::vector<std::vector<int>> cands(Q.size());
  for (int q = 0; q < Q.size(); ++q)
    for (int i = 0; i < C.hg().size(); ++i) {
      const CylFace& c = C.face(i);
      int side = c.kind == CylFace::Flat ? c.sign : 0;
      if (C.project(i) == pp.h()(q) && side == pp.value(q)) cands[q].push_back(i);
    }
  long long total = 1;
  for (const auto& c : cands) total *= std::max<size_t>(c.size(), 1);
  REQUIRE(total < 2'000'000);
  FaceMap f{pp.Q().hg_ptr(), C.hg_ptr(), std::vector<int>(Q.size())};
  std::vector<size_t> idx(Q.size(), 0);
  long long found = 0;
  for (;;) {
    bool empty = false;
    for (int q = 0; q < Q.size(); ++q) {
      if (cands[q].empty()) empty = true;
      else f.assign[q] = cands[q][idx[q]];
    }
    if (empty) return 0;
    if (validate_iota_map(f).ok()) ++found;
    int q = 0;
    while (q < Q.size() && ++idx[q] == cands[q].size()) idx[q++] = 0;
    if (q == Q.size()) return found;
  }
}

TEST_CASE("the worked table with rho = h_a01 and h = h_a12") {
  auto G2 = shared(fixtures::triangle());
  ProductPair pp(to_interval(G2, "a01"), to_interval(G2, "a12"));
  Table want{{"v0", "-s"}, {"v1", "+s"}, {"v2", "+t"}, {"a01", "[s]"}, {"a12", "+a"}, {"a02", "[a,0]"}, {"m", "[a,s]"}};
  CHECK(H_table(pp) == want);
  CHECK(pp.which_case(G2->at("m")) == HCase::H3);
  CHECK(pp.which_case(G2->at("a01")) == HCase::H1);
  CHECK(pp.which_case(G2->at("a02")) == HCase::H2);
  IotaMap H = pp.build_H();
  CHECK(validate_iota_map(H).ok());

  const auto& a = pp.analysis();
  CHECK(a.report.ok());
  CHECK(a.k == 2);
  CHECK(ids(*G2, a.S[1]) == std::vector<std::string>{"a01"});
  CHECK(ids(*G2, a.T[1]) == std::vector<std::string>{"a02"});
  CHECK(ids(*G2, a.S[2]) == std::vector<std::string>{"m"});
  CHECK(a.T[2].empty());
  CHECK(G2->id(pp.sigma(G2->at("m"))) == "a01");
  CHECK(G2->id(pp.xi(G2->at("m"))) == "a12");
  CHECK_THROWS_AS(pp.tau(G2->at("m")), UsageError);

  auto seq = pp.splitting_sequence(G2->at("m"));
  CHECK(seq.kind == SplittingSequence::SplittingForm);
  CHECK(ids(*G2, seq.faces) == std::vector<std::string>{"m", "a01"});
  CHECK(pp.splitting_sequence(G2->at("v0")).kind == SplittingSequence::None);

  // the image lies in the flag opetope of [a,s]
  const Cylinder& C = pp.cylinder();
  auto in = C.flag_opetope_faces(parse_flag(pp.P().hg(), "[a,s]"));
  for (int q = 0; q < G2->size(); ++q) CHECK(std::binary_search(in.begin(), in.end(), H(q)));
  CHECK(h_lemma_suite(pp).ok());
}

TEST_CASE("the worked table with rho = h_a01 and h = id") {
  auto G2 = shared(fixtures::triangle());
  ProductPair pp(to_interval(G2, "a01"), identity_map(G2));
  Table want{{"v0", "-v0"},       {"v1", "+v1"},        {"v2", "+v2"},       {"a01", "[a01,0]"},
             {"a12", "+a12"},     {"a02", "[a02,0]"},  {"m", "[m,a01,0]"}};
  CHECK(H_table(pp) == want);
  CHECK(pp.which_case(G2->at("m")) == HCase::H5);
  CHECK(pp.build_H().assign.size() == 7);

  const auto& a = pp.analysis();
  CHECK(a.report.ok());
  CHECK(a.k == 1);
  for (const auto& s : a.S) CHECK(s.empty());
  CHECK(ids(*G2, a.T[1]) == std::vector<std::string>{"a01", "a02"});
  CHECK(ids(*G2, a.B[2]) == std::vector<std::string>{"m"});
  CHECK(G2->id(pp.tau(G2->at("m"))) == "a01");
  CHECK_THROWS_AS(pp.sigma(G2->at("m")), UsageError);

  auto seq = pp.splitting_sequence(G2->at("m"));
  CHECK(seq.kind == SplittingSequence::ThresholdForm);
  CHECK(ids(*G2, seq.faces) == std::vector<std::string>{"m", "a01"});
  CHECK(h_lemma_suite(pp).ok());
}

TEST_CASE("a constant rho gives a flat H") {
  auto iv = shared(fixtures::interval());
  auto G2 = shared(fixtures::triangle());
  for (const char* end : {"s", "t"}) {
    ProductPair pp(constant_map(G2, iv, iv->at(end)), identity_map(G2));
    for (const auto& c : pp.H_values()) {
      CHECK(c.kind == CylFace::Flat);
      CHECK(c.sign == (std::string(end) == "s" ? -1 : 1));
    }
    CHECK(pp.analysis().k == 0);
    CHECK(verify_product(pp).report.ok());
  }
  // both maps constant
  auto PT = shared(fixtures::point());
  ProductPair pp(constant_map(G2, iv, iv->at("s")), constant_map(G2, PT, 0));
  auto v = verify_product(pp);
  CHECK(v.report.ok());
  CHECK(v.search.solutions == 1);
  for (const auto& c : pp.H_values()) CHECK(c == CylFace::flat(-1, 0));
}

TEST_CASE("every catalog pair has exactly one H") {
  auto pairs = catalog_pairs();
  CHECK(pairs.size() >= 12);
  int checked_by_brute_force = 0;
  for (const auto& p : pairs) {
    CAPTURE(p.name);
    ProductPair pp(p.rho, p.h);
    auto v = verify_product(pp);
    CHECK_MESSAGE(v.report.ok(), v.report.summary());
    CHECK(v.search.solutions == 1);
    auto lem = h_lemma_suite(pp);
    CHECK_MESSAGE(lem.ok(), lem.summary());
    if (pp.Q().hg().size() <= 7) {
      CHECK(brute_force_count(pp) == 1);
      ++checked_by_brute_force;
    }
  }
  CHECK(checked_by_brute_force > 0);
}

TEST_CASE("O3 with rho = h_a12 and h = id") {
  auto O3 = shared(fixtures::tetra());
  ProductPair pp(to_interval(O3, "a12"), identity_map(O3));
  auto v = verify_product(pp);
  CHECK_MESSAGE(v.report.ok(), v.report.summary());
  CHECK(v.search.solutions == 1);
  auto lem = h_lemma_suite(pp);
  CHECK_MESSAGE(lem.ok(), lem.summary());
}

TEST_CASE("O3 over every interval map and every degeneracy") {
  auto iv = shared(fixtures::interval());
  auto O3 = shared(fixtures::tetra());
  Opetope P(*O3);
  std::vector<IotaMap> hs{identity_map(O3), fixtures::collapse_a23_to_triangle()};
  hs[1].source = O3;
  for (int g : interval_map_generators(P)) hs.push_back(interval_map(P, g, iv));
  for (int g : interval_map_generators(P))
    for (const auto& h : hs) {
      CAPTURE(O3->id(g));
      CAPTURE(h.tgt().name());
      ProductPair pp(interval_map(P, g, iv), h);
      auto v = verify_product(pp);
      CHECK_MESSAGE(v.report.ok(), v.report.summary());
      auto lem = h_lemma_suite(pp);
      CHECK_MESSAGE(lem.ok(), lem.summary());
    }
}

TEST_CASE("projection pairs reproduce the inclusion of a flag opetope") {
  auto iv = shared(fixtures::interval());
  SUBCASE("the interval at [a,s]") {
    Cylinder C{Opetope(fixtures::interval())};
    auto pr = projection_pair(C, parse_flag(C.base().hg(), "[a,s]"), iv);
    CHECK(validate_iota_map(pr.pi).ok());
    CHECK(validate_iota_map(pr.rho).ok());
    std::map<std::string, std::string> pi;
    for (int i = 0; i < pr.source->size(); ++i) pi[pr.source->id(i)] = pr.pi.tgt().id(pr.pi(i));
    CHECK(pi["flag:[a,s]"] == "a");
    CHECK(pi["pflag:[a,0]"] == "a");
    CHECK(pi["flag:[s]"] == "s");
    CHECK(pi["flat:+:a"] == "a");
    CHECK(pi["flat:-:s"] == "s");
  }
  for (std::string name : {"I", "G2", "G2^op", "O3"}) {
    CAPTURE(name);
    auto C = std::make_shared<const Cylinder>(Opetope(fixtures::by_name(name)));
    for (int x = 0; x < C->base().hg().size(); ++x) {
      if (x != C->base().top()) continue;
      for (const auto& f : C->table().maximal_flags()) {
        auto pr = projection_pair(*C, f, iv);
        CHECK(validate_iota_map(pr.pi).ok());
        CHECK(validate_iota_map(pr.rho).ok());
        ProductPair pp(pr.rho, pr.pi, C);
        auto v = verify_product(pp);
        CHECK_MESSAGE(v.report.ok(), v.report.summary());
        IotaMap H = pp.build_H();
        for (int i = 0; i < pr.source->size(); ++i) CHECK(C->hg().id(H(i)) == pr.source->id(i));
      }
    }
  }
}

TEST_CASE("the search cap stops the uniqueness search") {
  auto G2 = shared(fixtures::triangle());
  ProductPair pp(to_interval(G2, "a01"), identity_map(G2));
  auto st = pp.count_solutions(3);
  CHECK(st.capped);
  auto full = pp.count_solutions(search_cap(), 10);
  CHECK(!full.capped);
  CHECK(full.solutions == 1);
  ::setenv("OPETOPE_MAX_SEARCH", "2", 1);
  auto v = verify_product(pp);
  CHECK(v.report.has("uniqueness"));
  ::setenv("OPETOPE_MAX_SEARCH", "many", 1);
  CHECK_THROWS_AS(search_cap(), UsageError);
  ::unsetenv("OPETOPE_MAX_SEARCH");
}

TEST_CASE("the cylinder projections") {
  auto iv = shared(fixtures::interval());
  for (std::string name : {"I", "G2", "O3"}) {
    CAPTURE(name);
    Cylinder C{Opetope(fixtures::by_name(name))};
    CHECK(validate_iota_map(cylinder_projection(C)).ok());
    CHECK(validate_iota_map(cylinder_interval_map(C, iv)).ok());
  }
}

TEST_CASE("mismatched inputs are rejected") {
  auto iv = shared(fixtures::interval());
  auto G2 = shared(fixtures::triangle());
  auto I = shared(fixtures::interval());
  CHECK_THROWS_AS(ProductPair(to_interval(G2, "a01"), identity_map(I)), UsageError);
  IotaMap bad = identity_map(G2);
  bad.assign[G2->at("m")] = G2->at("a01");
  CHECK_THROWS_AS(ProductPair(to_interval(G2, "a01"), bad), ValidationError);
  // rho must land in the interval
  CHECK_THROWS_AS(ProductPair(identity_map(G2), identity_map(G2)), UsageError);
}

TEST_CASE("the sweeps reach every case of the table") {
  auto iv = shared(fixtures::interval());
  std::set<HCase> seen;
  std::set<SplittingSequence::Kind> kinds;
  auto note = [&](const ProductPair& pp) {
    for (int q = 0; q < pp.Q().hg().size(); ++q) {
      seen.insert(pp.which_case(q));
      kinds.insert(pp.splitting_sequence(q).kind);
    }
  };
  for (const auto& p : catalog_pairs()) note(ProductPair(p.rho, p.h));
  for (std::string name : {"G2", "O3", "O3^op"}) {
    auto C = std::make_shared<const Cylinder>(Opetope(fixtures::by_name(name)));
    for (const auto& f : C->table().maximal_flags()) {
      auto pr = projection_pair(*C, f, iv);
      note(ProductPair(pr.rho, pr.pi, C));
    }
    Opetope P(fixtures::by_name(name));
    for (int g : interval_map_generators(P))
      for (int g2 : interval_map_generators(P)) note(ProductPair(interval_map(P, g, iv), interval_map(P, g2, iv)));
  }
  for (HCase c : {HCase::FlatMinus, HCase::FlatPlus, HCase::H1, HCase::H2, HCase::H3, HCase::H4, HCase::H5, HCase::H6,
                  HCase::H7}) {
    CAPTURE(hcase_text(c));
    CHECK(seen.count(c) == 1);
  }
  CHECK(kinds.size() == 4);
}
