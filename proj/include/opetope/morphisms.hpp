#pragma once

#include <memory>
#include <string>
#include <vector>

#include "opetope/core.hpp"

namespace opetope {

// Face function between hypergraphs; used both for face maps and for iota-maps.
struct FaceMap {
  std::shared_ptr<const Hypergraph> source;
  std::shared_ptr<const Hypergraph> target;
  std::vector<int> assign;

  int operator()(int q) const { return assign[q]; }
  const Hypergraph& src() const { return *source; }
  const Hypergraph& tgt() const { return *target; }
};
using IotaMap = FaceMap;

FaceMap make_map(std::shared_ptr<const Hypergraph> source, std::shared_ptr<const Hypergraph> target,
                 const std::vector<std::pair<std::string, std::string>>& pairs);
FaceMap identity_map(std::shared_ptr<const Hypergraph> h);
FaceMap constant_map(std::shared_ptr<const Hypergraph> source, std::shared_ptr<const Hypergraph> target, int face);

AxiomReport validate_face_map(const FaceMap& f);
AxiomReport validate_iota_map(const IotaMap& h);
// throws ValidationError unless h is an iota-map
const IotaMap& checked(const IotaMap& h);

std::vector<int> kernel(const IotaMap& h);
int collapse_degree(const IotaMap& h, int q);
bool in_kernel(const IotaMap& h, int q);

IotaMap compose_iota(const IotaMap& h2, const IotaMap& h1);
bool is_onto(const FaceMap& f);

bool is_plus_interval(const Hypergraph& h, const Orders& o, const std::vector<int>& xs);
std::vector<int> fiber(const IotaMap& h, int p);
bool fiber_interval_check(const IotaMap& h, int p);

// h_p for p in P_1 - gamma(P_2), with the interval fixture as target
IotaMap interval_map(const Opetope& P, int p, std::shared_ptr<const Hypergraph> interval);
std::vector<IotaMap> onto_maps_to_interval(const Opetope& P, std::shared_ptr<const Hypergraph> interval);
std::vector<int> interval_map_generators(const Opetope& P);

AxiomReport iota_preservation_suite(const IotaMap& h);
// h restricted to Q[q] -> P[h(q)]
IotaMap restrict_map(const IotaMap& h, int q);

// q in Q_{k+2}, q' in delta(q), h(q), h(q') in P_k  =>  h(q') = h(gamma(q))
AxiomReport two_collapse_suite(const IotaMap& h);
// every restriction Q[q] -> P[h(q)] is an onto iota-map, and non-kernel
// h(gamma^(l)(q)) is <+-maximal in P[h(q)]_l
AxiomReport restriction_suite(const IotaMap& h);

}  // namespace opetope
