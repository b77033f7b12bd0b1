#pragma once

#include <string>
#include <vector>

#include "opetope/core.hpp"
#include "opetope/morphisms.hpp"

namespace opetope {

struct OracleResult {
  std::string id;
  std::string instance;
  bool pass = false;
  bool invalid_input = false;  // the instance itself is not an opetope
  std::string detail;           // what was checked, e.g. "19 intersections checked"
  AxiomReport counterexample;   // empty on pass
};

// the suite ids accepted by run_oracle, in a fixed order
const std::vector<std::string>& oracle_ids();
std::string oracle_description(const std::string& id);

// selector: a fixture name ("G2", "O3^op"), "all" for every fixture and dual, or a path to a hypergraph file
std::vector<std::pair<std::string, Hypergraph>> select_instances(const std::string& selector);
std::vector<OracleResult> run_oracle(const std::string& id, const std::string& selector);
// one suite on one hypergraph; an input that is not an opetope fails with its axiom report
OracleResult run_oracle_on(const std::string& id, const std::string& instance, const Hypergraph& h);

struct Mutation {
  std::string kind;
  std::string description;
  Hypergraph result;
};
struct MutationOutcome {
  Mutation mutation;
  AxiomReport report;  // empty when the mutant is still an opetope
};
struct MutationRun {
  std::vector<MutationOutcome> rejected;
  int benign = 0;
  int candidates = 0;
};
// every single-field change to one face, interleaved over the kinds
std::vector<Mutation> single_field_mutations(const Hypergraph& h);
// the first `limit` mutants that are not opetopes, skipping benign ones
MutationRun mutation_run(const Hypergraph& h, int limit = 20);

struct PairCase {
  std::string name;
  IotaMap rho;
  IotaMap h;
};
// rho in {constant -, constant +, onto maps to I} and h over the catalog maps out of each source
std::vector<PairCase> product_pair_catalog(const std::vector<std::string>& sources);

}  // namespace opetope
