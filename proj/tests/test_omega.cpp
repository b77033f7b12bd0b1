#include <set>

#include "doctest.h"
#include "opetope/fixtures.hpp"
#include "opetope/omega.hpp"

using namespace opetope;
using Names = std::set<std::string>;

static std::shared_ptr<const Hypergraph> shared(Hypergraph h) {
  return std::make_shared<const Hypergraph>(std::move(h));
}

static Names names_of(const Cell& c) {
  Names n;
  for (int f : c.faces()) n.insert(c.ambient->id(f));
  return n;
}

static Cell generated_cell(std::shared_ptr<const Hypergraph> t, const std::vector<std::string>& seeds) {
  std::vector<int> s;
  for (const auto& x : seeds) s.push_back(t->at(x));
  auto m = closure_mask(*t, s);
  Cell c{t, m, 0};
  c.level = c.carrier_dim();
  return make_cell(t, m, c.level);
}

TEST_CASE("domains and codomains of the triangle and the interval") {
  auto g = shared(fixtures::triangle());
  Cell whole = generated_cell(g, {"m"});
  CHECK(whole.proper());
  Cell d1 = cell_domain(whole, 1);
  CHECK(names_of(d1) == Names{"v0", "v1", "v2", "a01", "a12"});
  CHECK(d1.level == 1);
  Cell c1 = cell_codomain(whole, 1);
  CHECK(names_of(c1) == Names{"v0", "v2", "a02"});
  auto iv = shared(fixtures::interval());
  Cell i = generated_cell(iv, {"a"});
  CHECK(names_of(cell_domain(i, 0)) == Names{"s"});
  CHECK(names_of(cell_codomain(i, 0)) == Names{"t"});
  CHECK_THROWS_AS(cell_domain(i, 1), UsageError);
}

TEST_CASE("identities") {
  auto iv = shared(fixtures::interval());
  Cell i = generated_cell(iv, {"a"});
  Cell id = cell_identity(i);
  CHECK(id.level == 2);
  CHECK(id.carrier == i.carrier);
  CHECK_FALSE(id.proper());
  auto g = shared(fixtures::triangle());
  Cell whole = generated_cell(g, {"m"});
  CHECK(cell_domain(cell_identity(whole), 1) == cell_domain(whole, 1));
  CHECK(cell_codomain(cell_identity(whole), 1) == cell_codomain(whole, 1));
}

TEST_CASE("composition along a vertex and along an edge") {
  auto o = shared(fixtures::tetra());
  Cell e01 = generated_cell(o, {"a01"});
  Cell e12 = generated_cell(o, {"a12"});
  CHECK_FALSE(composable(e01, e12, 0));
  REQUIRE(composable(e12, e01, 0));
  CHECK(names_of(cell_compose(e12, e01, 0)) == Names{"v0", "v1", "v2", "a01", "a12"});
  CHECK_THROWS_AS(cell_compose(e01, e12, 0), UsageError);

  // p and q do not meet in a common 1-boundary; q composes with p whiskered by a23
  Cell p = generated_cell(o, {"p"});
  Cell q = generated_cell(o, {"q"});
  CHECK_FALSE(composable(p, q, 1));
  CHECK_FALSE(composable(q, p, 1));
  Cell pw = generated_cell(o, {"p", "a23"});
  REQUIRE(composable(q, pw, 1));
  Cell pq = cell_compose(q, pw, 1);
  CHECK(pq.level == 2);
  CHECK(names_of(pq) == Names{"v0", "v1", "v2", "v3", "a01", "a12", "a23", "a02", "a03", "p", "q"});
  Cell top = generated_cell(o, {"c"});
  CHECK(pq.carrier == cell_domain(top, 2).carrier);
}

TEST_CASE("cells are validated") {
  auto g = shared(fixtures::triangle());
  CHECK_THROWS_AS(make_cell(g, std::vector<int>{g->at("a01")}, 1), ValidationError);
  CHECK_THROWS_AS(make_cell(g, std::vector<int>{g->at("v0"), g->at("v1")}, 0), ValidationError);
  CHECK_THROWS_AS(make_cell(g, std::vector<int>{g->at("v0"), g->at("v1"), g->at("a01")}, 0), ValidationError);
}

// hand count: 3 vertices, 3 edges, the path a01 a12, and the whole triangle
TEST_CASE("subcardinals of the triangle") {
  CHECK(enumerate_subcardinals(fixtures::triangle()).size() == 8);
  CHECK(enumerate_subcardinals(fixtures::interval()).size() == 3);
}

TEST_CASE("images of cells") {
  Opetope P(fixtures::triangle());
  auto iv = shared(fixtures::interval());
  auto h = onto_maps_to_interval(P, iv)[0];
  Cell v = generated_cell(P.hg_ptr(), {"v1"});
  Cell hv = map_image_cell(h, v);
  CHECK(names_of(hv) == Names{"t"});
  CHECK(hv.level == 0);
  Cell whole = generated_cell(P.hg_ptr(), {"m"});
  Cell hw = map_image_cell(h, whole);
  CHECK(names_of(hw) == Names{"s", "t", "a"});
  CHECK(hw.level == 2);
  CHECK(image_suite(h).ok());
}

TEST_CASE("omega laws on small fixtures") {
  for (const std::string n : {"I", "G1", "G2", "O3", "G2^op"}) {
    LawStats st;
    auto r = omega_law_suite(fixtures::by_name(n), &st);
    CAPTURE(n);
    CAPTURE(r.summary());
    CHECK(r.ok());
    CHECK(st.compositions > 0);
  }
}

TEST_CASE("images under every catalog map") {
  for (const auto& nm : fixtures::map_catalog()) {
    CAPTURE(nm.name);
    auto r = image_suite(nm.map);
    CAPTURE(r.summary());
    CHECK(r.ok());
    CHECK(two_collapse_suite(nm.map).ok());
    CHECK(restriction_suite(nm.map).ok());
  }
}
