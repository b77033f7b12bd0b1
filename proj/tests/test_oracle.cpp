#include <filesystem>
#include <set>

#include "doctest.h"
#include "opetope/fixtures.hpp"
#include "opetope/io.hpp"
#include "opetope/oracle.hpp"

using namespace opetope;

static std::vector<std::string> all_fixtures() {
  std::vector<std::string> out;
  for (const auto& n : fixtures::names()) {
    out.push_back(n);
    if (n != "PT") out.push_back(n + "^op");
  }
  return out;
}

TEST_CASE("every suite passes on every fixture and dual") {
  for (const auto& id : oracle_ids()) {
    auto results = run_oracle(id, "all");
    CHECK(results.size() == 9);
    for (const auto& r : results) CHECK_MESSAGE(r.pass, id << " " << r.instance << ": " << r.counterexample.summary());
  }
}

TEST_CASE("named instances") {
  auto walk = run_oracle("successor-walk", "G2");
  REQUIRE(walk.size() == 1);
  CHECK(walk[0].pass);
  CHECK(walk[0].detail == "6 maximal flags");
  auto meet = run_oracle("intersections", "O3");
  REQUIRE(meet.size() == 1);
  CHECK(meet[0].pass);
  CHECK(meet[0].detail == "19 intersections checked");
  CHECK(run_oracle("successor-walk", "O3")[0].detail == "20 maximal flags");
  CHECK(run_oracle("census", "I")[0].detail == "Cyl census [4,5,2]");
  CHECK_THROWS_AS(run_oracle("no-such-suite", "G2"), UsageError);
  CHECK_THROWS_AS(run_oracle("axioms", "G9"), UsageError);
}

TEST_CASE("files are accepted as selectors") {
  auto r = run_oracle("straightness", std::string(FIXTURE_DIR) + "/O3.json");
  REQUIRE(r.size() == 1);
  CHECK(r[0].pass);
}

TEST_CASE("mutants fail with a named axiom") {
  std::map<std::string, size_t> counts;
  for (const auto& n : all_fixtures()) {
    CAPTURE(n);
    Hypergraph h = fixtures::by_name(n);
    MutationRun run = mutation_run(h, 20);
    counts[n] = run.rejected.size();
    std::set<std::string> kinds;
    for (const auto& m : run.rejected) {
      CHECK_FALSE(m.report.ok());
      CHECK_FALSE(m.report.violations.front().axiom.empty());
      CHECK_FALSE(same_structure(m.mutation.result, h));
      kinds.insert(m.mutation.kind);
    }
    // the interval has a single swap and it is benign
    if (n != "PT") CHECK(kinds.size() >= (n[0] == 'I' ? 5u : 6u));
  }
  // the point has only three single-field changes: a codomain, a domain, a dimension
  CHECK(counts["PT"] == 3);
  for (const auto& [n, c] : counts)
    if (n != "PT") CHECK(c == 20);
}

TEST_CASE("a mutated fixture fails every suite with a counterexample") {
  Hypergraph h = fixtures::triangle();
  auto muts = single_field_mutations(h);
  auto it = std::find_if(muts.begin(), muts.end(), [](const Mutation& m) { return m.kind == "gamma-retarget"; });
  REQUIRE(it != muts.end());
  std::string path = (std::filesystem::temp_directory_path() / "opetope_mutant.json").string();
  io::save_hypergraph(path, it->result);
  for (const std::string id : {"axioms", "successor-walk", "product"}) {
    auto r = run_oracle(id, path);
    REQUIRE(r.size() == 1);
    CHECK_FALSE(r[0].pass);
    CHECK(r[0].invalid_input);
    CHECK_FALSE(r[0].counterexample.ok());
  }
  std::filesystem::remove(path);
}

TEST_CASE("reversing the only edge of the interval is benign") {
  Hypergraph h = fixtures::interval();
  MutationRun run = mutation_run(h, 1000);
  CHECK(run.benign >= 1);
  for (const auto& m : single_field_mutations(h))
    if (m.description == "swap gamma(a) = t with s") CHECK(is_opetope(m.result).ok());
}

TEST_CASE("the product catalog") {
  auto pairs = product_pair_catalog({"I", "G1", "G2", "I^op", "G1^op", "G2^op"});
  CHECK(pairs.size() >= 12);
  std::set<std::string> names;
  for (const auto& p : pairs) names.insert(p.name);
  CHECK(names.count("G2: rho=h_a01:G2->I, h=h_a12:G2->I") == 1);
  CHECK(names.count("G2: rho=h_a01:G2->I, h=id_G2") == 1);
}
