#pragma once

#include <string>
#include <vector>

#include "opetope/core.hpp"
#include "opetope/morphisms.hpp"

namespace opetope::fixtures {

Hypergraph point();
Hypergraph interval();
Hypergraph globe();
Hypergraph triangle();
Hypergraph tetra();

// "PT", "I", "G1", "G2", "O3", optionally suffixed with "^op"
Hypergraph by_name(const std::string& name);
const std::vector<std::string>& names();

struct NamedMap {
  std::string name;
  IotaMap map;
};

// identities, onto maps to the interval, terminal maps, and the degeneracies
// G2 -> G1 and O3 -> G2; every entry is a valid iota-map
std::vector<NamedMap> map_catalog();
// the three hand-written degeneracies, with sources and targets built from the fixtures
IotaMap collapse_a01_to_globe();
IotaMap collapse_a12_to_globe();
IotaMap collapse_a23_to_triangle();

}  // namespace opetope::fixtures
