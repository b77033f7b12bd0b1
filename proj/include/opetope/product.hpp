#pragma once

#include <memory>
#include <string>
#include <vector>

#include "opetope/core.hpp"
#include "opetope/cylinder.hpp"
#include "opetope/flags.hpp"
#include "opetope/morphisms.hpp"

namespace opetope {

// -1 or +1 on the endpoints of the interval, 0 on its arrow
int interval_value(const IotaMap& rho, int q);

struct SplitAnalysis {
  int k = 0;  // 0 when there is nothing to split
  // indexed by dimension; A[i] and B[i] are the witnesses (faces of dimension i) for S[i-1] and T[i-1]
  std::vector<std::vector<int>> S, T, A, B;
  std::vector<char> splitting, threshold;
  std::vector<int> sigma, tau, xi;  // -1 where undefined
  AxiomReport report;
};

struct SplittingSequence {
  enum Kind { None, ThresholdForm, SplittingForm, Inherited };
  Kind kind = None;
  std::vector<int> faces;
  int threshold_at = -1;  // index of the threshold entry in threshold form
  int clause = 0;
};
std::string sequence_kind_text(SplittingSequence::Kind k);

enum class HCase { FlatMinus, FlatPlus, H1, H2, H3, H4, H5, H6, H7 };
std::string hcase_text(HCase c);

struct SearchStats {
  long long solutions = 0;
  long long visited = 0;
  long long cap = 0;
  bool capped = false;
};

struct ProductVerdict {
  AxiomReport report;
  SearchStats search;
};

// A pair rho: Q -> I, h: Q -> P of iota-maps with a common source, and Cyl(P).
class ProductPair {
 public:
  ProductPair(const IotaMap& rho, const IotaMap& h);
  ProductPair(const IotaMap& rho, const IotaMap& h, std::shared_ptr<const Cylinder> cyl);

  const Opetope& Q() const { return Q_; }
  const Opetope& P() const { return cyl_->base(); }
  const Cylinder& cylinder() const { return *cyl_; }
  std::shared_ptr<const Cylinder> cylinder_ptr() const { return cyl_; }
  const IotaMap& rho() const { return rho_; }
  const IotaMap& h() const { return h_; }
  int value(int q) const { return interval_value(rho_, q); }

  const SplitAnalysis& analysis() const { return an_; }
  // throw UsageError where undefined
  int sigma(int q) const;
  int tau(int q) const;
  int xi(int q) const;
  SplittingSequence splitting_sequence(int q) const;

  // the case table; throws ValidationError if the result is not an iota-map
  IotaMap build_H() const;
  HCase which_case(int q) const { return cases_[q]; }
  const std::vector<CylFace>& H_values() const { return values_; }

  // every iota-map Q -> Cyl(P) over both projections, by backtracking; stops after `stop_after` solutions
  SearchStats count_solutions(long long cap, long long stop_after = 2, std::vector<int>* first = nullptr) const;

 private:
  void analyze();
  void compute_H();

  Opetope Q_;
  IotaMap rho_, h_;
  std::shared_ptr<const Cylinder> cyl_;
  SplitAnalysis an_;
  std::vector<CylFace> values_;
  std::vector<HCase> cases_;
  std::vector<SplittingSequence> seqs_;
};

// pi_P and rho_I on Cyl(P)
FaceMap cylinder_projection(const Cylinder& C);
FaceMap cylinder_interval_map(const Cylinder& C, std::shared_ptr<const Hypergraph> interval);

// the search cap: OPETOPE_MAX_SEARCH if set, else 10^7
long long search_cap();
ProductVerdict verify_product(const ProductPair& pp);
AxiomReport h_lemma_suite(const ProductPair& pp);

struct ProjectionPair {
  std::shared_ptr<const Hypergraph> source;  // P^x, with the cylinder's face ids
  IotaMap pi;
  IotaMap rho;
};
ProjectionPair projection_pair(const Cylinder& C, const Flag& x, std::shared_ptr<const Hypergraph> interval);

}  // namespace opetope
