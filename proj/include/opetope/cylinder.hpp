#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "opetope/core.hpp"
#include "opetope/flags.hpp"
#include "opetope/morphisms.hpp"

namespace opetope {

enum class StarCase {
  Flat,  // p * -x = -p, p * +x = +p
  Truncation,
  HighPFlag,
  LowPFlag,
  PunctureAt,  // p-flag argument, puncture kept at its level
  PunctureAbove,  // puncture moved one level down
  PunctureBelow,
  BottomFlat,
  TopFlat,
};
std::string star_case_text(StarCase c);

struct StarValue {
  CylFace face;
  StarCase which;
};

// p * phi; p must be a face of P[pi(phi)]. phi is a flat face, or a flag or p-flag of
// its top face, which is read as a maximal (p-)flag of P[top].
StarValue star(const Opetope& P, int p, const CylFace& phi);
// the p-flag clause bounding the lower puncture by dim(p) - 2 instead of dim(p) - 1
StarValue star_narrow(const Opetope& P, int p, const CylFace& phi);
CylFace star_low(const FlagTable& T, int p, const Flag& x);
CylFace star_high(const FlagTable& T, int p, const Flag& x);

int projection(const CylFace& c);
int cyl_dim(const Hypergraph& h, const CylFace& c);
// "flat:-:a01", "flag:[m,a02,v2]", "pflag:[m,0,v2]"
std::string cyl_id(const Hypergraph& h, const CylFace& c);
CylFace parse_cyl_id(const Hypergraph& h, const std::string& id);

// Cyl(P) as a positive hypergraph; face i of hg() is faces()[i].
class Cylinder {
 public:
  explicit Cylinder(const Opetope& P);

  const Opetope& base() const { return table_->opetope(); }
  const FlagTable& table() const { return *table_; }
  const Hypergraph& hg() const { return *hg_; }
  std::shared_ptr<const Hypergraph> hg_ptr() const { return hg_; }
  const std::vector<CylFace>& faces() const { return faces_; }
  const CylFace& face(int i) const { return faces_[i]; }
  int find(const CylFace& c) const;
  int at(const CylFace& c) const;  // throws InternalError
  int project(int i) const { return projection(faces_[i]); }

  // closure of one face under gamma and delta, as sorted indices
  std::vector<int> closure(const CylFace& c) const;
  std::vector<int> flag_opetope_faces(const Flag& x) const { return closure(CylFace::of(x)); }
  Hypergraph sub_hypergraph(const std::vector<int>& faces, const std::string& name) const;

 private:
  std::shared_ptr<const FlagTable> table_;
  std::shared_ptr<const Hypergraph> hg_;
  std::vector<CylFace> faces_;
  std::map<CylFace, int> index_;
};

// the face census of P^x (x a maximal flag or maximal p-flag) from the explicit per-level formulas
std::vector<CylFace> flag_opetope_census(const FlagTable& T, const Flag& x);
Hypergraph flag_opetope(const Cylinder& C, const Flag& x);

// closure equals census, is_opetope holds, dimension and size are as expected
AxiomReport flag_opetope_check(const Cylinder& C, const Flag& x);
AxiomReport unique_projection_check(const Cylinder& C, const Flag& x);
// P^x meets P^next(x) exactly in the p-flag opetope of their intersection, and every
// earlier P^y meets P^next(x) inside it
AxiomReport intersection_check(const Cylinder& C, const Flag& x);

struct StraightnessStep {
  Flag flag;
  Flag meet;  // intersection with the previous flag; empty on the first step
  int faces_added;
};
struct StraightnessCertificate {
  std::vector<StraightnessStep> steps;
  int total_faces;
  AxiomReport report;
  bool ok() const { return report.ok(); }
};
StraightnessCertificate straightness_certificate(const Cylinder& C);

// entrywise image of a face map P -> Q; throws ValidationError when an image is not a face of Cyl(Q)
FaceMap cyl_map(const FaceMap& f, const Cylinder& CP, const Cylinder& CQ);

AxiomReport iteration_suite(const Cylinder& C);
AxiomReport monotone_suite(const FlagTable& T);
AxiomReport dual_star_suite(const Opetope& P);
// inputs where the two readings of the lower-puncture bound give different values
std::vector<std::string> star_bound_divergences(const Cylinder& C);

}  // namespace opetope
