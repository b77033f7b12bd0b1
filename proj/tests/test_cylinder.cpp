#include <algorithm>
#include <set>

#include "doctest.h"
#include "opetope/cylinder.hpp"
#include "opetope/fixtures.hpp"

using namespace opetope;
using Names = std::set<std::string>;

static std::vector<std::string> all_fixtures() {
  std::vector<std::string> out;
  for (const auto& n : fixtures::names()) {
    out.push_back(n);
    if (n != "PT") out.push_back(n + "^op");
  }
  return out;
}

static Names ids(const Cylinder& C, const std::vector<int>& fs) {
  Names n;
  for (int f : fs) n.insert(cyl_text(C.base().hg(), C.face(f)));
  return n;
}

static std::vector<int> census(const Hypergraph& h) {
  std::vector<int> c(std::max(0, h.dim() + 1), 0);
  for (int f = 0; f < h.size(); ++f) ++c[h.dim(f)];
  return c;
}

static std::string star_text(const Opetope& P, const std::string& p, const std::string& x) {
  const auto& h = P.hg();
  return cyl_text(h, star(P, h.at(p), CylFace::of(parse_flag(h, x))).face);
}

// p-flags by definition: every flag of every face punctured at top - 1 and at its low level
static std::set<Flag> pflag_oracle(const Opetope& P) {
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

TEST_CASE("cylinder of the interval") {
  Opetope P(fixtures::interval());
  Cylinder C(P);
  const auto& g = C.hg();
  CHECK(census(g) == std::vector<int>{4, 5, 2});
  auto face = [&](const std::string& id) { return g.at(id); };
  int at = face("flag:[a,t]"), as = face("flag:[a,s]");
  CHECK(g.id(g.gamma(at)) == "pflag:[a,0]");
  CHECK(g.names(g.delta(at)) == std::vector<std::string>{"flat:-:a", "flag:[t]"});
  CHECK(g.id(g.gamma(as)) == "pflag:[a,0]");
  auto das = g.names(g.delta(as));
  CHECK(Names(das.begin(), das.end()) == Names{"flag:[s]", "flat:+:a"});
  CHECK(g.names(g.delta(face("flag:[s]"))) == std::vector<std::string>{"flat:-:s"});
  CHECK(g.id(g.gamma(face("flag:[s]"))) == "flat:+:s");
  // the cylinder is a structure but not a cardinal
  CHECK(validate_structure(g).ok());
  CHECK(is_opetopic_cardinal(g).has("pencil-linearity"));
  CHECK(ids(C, C.flag_opetope_faces(parse_flag(P.hg(), "[a,s]"))) ==
        Names{"-s", "+s", "+t", "[s]", "+a", "[a,0]", "[a,s]"});
  CHECK(ids(C, C.flag_opetope_faces(parse_flag(P.hg(), "[a,t]"))) ==
        Names{"-s", "-t", "+t", "-a", "[t]", "[a,0]", "[a,t]"});
}

TEST_CASE("cylinder of the point") {
  Opetope P(fixtures::point());
  Cylinder C(P);
  CHECK(census(C.hg()) == std::vector<int>{2, 1});
  CHECK(is_opetope(C.hg()).ok());
}

TEST_CASE("cylinder face counts agree with the definition") {
  for (const auto& name : all_fixtures()) {
    CAPTURE(name);
    Opetope P(fixtures::by_name(name));
    Cylinder C(P);
    std::set<Flag> flags, pflags;
    for (const auto& c : C.faces()) {
      if (c.kind == CylFace::FlagFace) flags.insert(c.flag);
      if (c.kind == CylFace::PFlagFace) pflags.insert(c.flag);
    }
    CHECK(pflags == pflag_oracle(P));
    size_t nflags = 0;
    for (int x = 0; x < P.hg().size(); ++x) nflags += enumerate_flag_set(P, {x}).size();
    CHECK(flags.size() == nflags);
    CHECK(C.hg().size() == int(2 * P.hg().size() + flags.size() + pflags.size()));
  }
  Opetope G(fixtures::triangle());
  // the 2-dimensional p-flags of m are 3 high and 2 low ones
  CHECK(census(Cylinder(G).hg()) == std::vector<int>{6, 12, 13, 6});
}

TEST_CASE("star on maximal flags of the triangle") {
  Opetope P(fixtures::triangle());
  CHECK(star_text(P, "a01", "[m,a02,v2]") == "-a01");
  CHECK(star_text(P, "a12", "[m,a01,v0]") == "+a12");
  CHECK(star_text(P, "a02", "[m,a02,v2]") == "[a02,v2]");
  CHECK(star_text(P, "a02", "[m,a12,v2]") == "[a02,0]");
  CHECK(star_text(P, "m", "[m,a12,v1]") == "[m,a12,v1]");
  const auto& h = P.hg();
  CHECK(star(P, h.at("a01"), CylFace::of(parse_flag(h, "[m,a02,v2]"))).which == StarCase::BottomFlat);
  CHECK(star(P, h.at("a12"), CylFace::of(parse_flag(h, "[m,a01,v0]"))).which == StarCase::TopFlat);
  FlagTable T(P);
  auto x = parse_flag(h, "[m,a02,v2]");
  CHECK(cyl_text(h, star_low(T, h.at("a02"), x)) == "-a02");
  CHECK(cyl_text(h, star_high(T, h.at("a02"), x)) == "[a02,0]");
  CHECK(cyl_text(h, star_low(T, h.at("a01"), x)) == "-a01");
}

TEST_CASE("star on p-flags and flats") {
  Opetope P(fixtures::triangle());
  const auto& h = P.hg();
  auto z = CylFace::of(parse_flag(h, "[m,a01,0]"));
  CHECK(cyl_text(h, star(P, h.at("a12"), z).face) == "+a12");
  CHECK(cyl_text(h, star(P, h.at("a01"), z).face) == "[a01,0]");
  CHECK(star(P, h.at("a01"), z).which == StarCase::Truncation);
  CHECK(cyl_text(h, star(P, h.at("v1"), CylFace::flat(-1, h.at("a01"))).face) == "-v1");
  CHECK_THROWS_AS(star(P, h.at("v2"), CylFace::flat(-1, h.at("a01"))), UsageError);
}

TEST_CASE("cylinder face ids") {
  Opetope P(fixtures::triangle());
  Cylinder C(P);
  for (int i = 0; i < C.hg().size(); ++i) CHECK(parse_cyl_id(P.hg(), C.hg().id(i)) == C.face(i));
  CHECK_THROWS_AS(parse_cyl_id(P.hg(), "flag:[m,0,v2]"), SchemaError);
  CHECK_THROWS_AS(parse_cyl_id(P.hg(), "face:[m]"), SchemaError);
  CHECK_THROWS_AS(parse_cyl_id(P.hg(), "flag:[m,a02]"), SchemaError);
}

TEST_CASE("flag and p-flag opetopes") {
  for (const auto& name : all_fixtures()) {
    CAPTURE(name);
    Opetope P(fixtures::by_name(name));
    Cylinder C(P);
    for (const auto& x : C.table().maximal_flags()) {
      auto r = flag_opetope_check(C, x);
      CHECK_MESSAGE(r.ok(), flag_text(P.hg(), x) << ": " << r.summary());
      auto u = unique_projection_check(C, x);
      CHECK_MESSAGE(u.ok(), u.summary());
    }
    for (const auto& z : C.table().pflags_under(P.top())) {
      auto r = flag_opetope_check(C, z);
      CHECK_MESSAGE(r.ok(), flag_text(P.hg(), z) << ": " << r.summary());
    }
  }
  Opetope G(fixtures::triangle());
  Cylinder C(G);
  for (const auto& x : C.table().maximal_flags()) {
    Hypergraph s = flag_opetope(C, x);
    CHECK(s.dim() == 3);
    CHECK(size_vector(s) == std::vector<int>{1, 1, 1, 1});
  }
}

TEST_CASE("consecutive flag opetopes meet in the p-flag opetope") {
  Opetope I(fixtures::interval());
  Cylinder CI(I);
  auto a = CI.flag_opetope_faces(parse_flag(I.hg(), "[a,t]"));
  auto b = CI.flag_opetope_faces(parse_flag(I.hg(), "[a,s]"));
  std::vector<int> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  CHECK(ids(CI, both) == Names{"-s", "+t", "[a,0]"});
  for (const auto& name : all_fixtures()) {
    CAPTURE(name);
    Opetope P(fixtures::by_name(name));
    Cylinder C(P);
    const auto& fl = C.table().maximal_flags();
    for (size_t i = 0; i + 1 < fl.size(); ++i) {
      auto r = intersection_check(C, fl[i]);
      CHECK_MESSAGE(r.ok(), r.summary());
    }
    CHECK_THROWS_AS(intersection_check(C, fl.back()), UsageError);
  }
}

TEST_CASE("straightness certificates") {
  std::vector<std::pair<std::string, int>> steps{{"I", 2}, {"G2", 6}, {"O3", 20}};
  for (auto [name, n] : steps) {
    CAPTURE(name);
    Opetope P(fixtures::by_name(name));
    Cylinder C(P);
    auto cert = straightness_certificate(C);
    CHECK_MESSAGE(cert.ok(), cert.report.summary());
    CHECK(int(cert.steps.size()) == n);
    CHECK(cert.total_faces == C.hg().size());
  }
  for (const auto& name : all_fixtures()) {
    Opetope P(fixtures::by_name(name));
    CHECK(straightness_certificate(Cylinder(P)).ok());
  }
}

TEST_CASE("iteration of star") {
  for (const auto& name : all_fixtures()) {
    CAPTURE(name);
    Opetope P(fixtures::by_name(name));
    Cylinder C(P);
    auto r = iteration_suite(C);
    CHECK_MESSAGE(r.ok(), r.summary());
  }
}

TEST_CASE("star_l and star_h are monotone") {
  for (const auto& name : all_fixtures()) {
    CAPTURE(name);
    Opetope P(fixtures::by_name(name));
    FlagTable T(P);
    auto r = monotone_suite(T);
    CHECK_MESSAGE(r.ok(), r.summary());
  }
}

TEST_CASE("star over the dual swaps flat signs") {
  for (const auto& name : fixtures::names()) {
    CAPTURE(name);
    Opetope P(fixtures::by_name(name));
    auto r = dual_star_suite(P);
    CHECK_MESSAGE(r.ok(), r.summary());
  }
}

TEST_CASE("the two readings of the lower puncture bound") {
  for (const auto& name : all_fixtures()) {
    CAPTURE(name);
    Opetope P(fixtures::by_name(name));
    auto d = star_bound_divergences(Cylinder(P));
    std::string all;
    for (const auto& s : d) all += s + "\n";
    MESSAGE(name << ": " << d.size() << " divergences\n" << all);
  }
}

TEST_CASE("cylinder maps") {
  for (const auto& name : all_fixtures()) {
    Opetope P(fixtures::by_name(name));
    Cylinder C(P);
    auto id = cyl_map(identity_map(P.hg_ptr()), C, C);
    CHECK(validate_face_map(id).ok());
    for (int i = 0; i < C.hg().size(); ++i) CHECK(id(i) == i);
  }
  // inclusion of a generated sub-opetope
  Opetope O(fixtures::tetra());
  for (int p = 0; p < O.hg().size(); ++p) {
    if (O.hg().dim(p) == 0) continue;
    Opetope S(generated_sub(O.hg(), p));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int f = 0; f < S.hg().size(); ++f) pairs.emplace_back(S.hg().id(f), S.hg().id(f));
    FaceMap inc = make_map(S.hg_ptr(), O.hg_ptr(), pairs);
    REQUIRE(validate_face_map(inc).ok());
    Cylinder CS(S), CO(O);
    CAPTURE(O.hg().id(p));
    try {
      auto m = cyl_map(inc, CS, CO);
      auto r = validate_face_map(m);
      CHECK_MESSAGE(r.ok(), r.summary());
    } catch (const ValidationError& e) {
      FAIL(e.what());
    }
  }
}
