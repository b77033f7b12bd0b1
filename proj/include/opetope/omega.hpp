#pragma once

#include <memory>
#include <vector>

#include "opetope/core.hpp"
#include "opetope/morphisms.hpp"

namespace opetope {

// An n-cell (S, n) of T*, with S a sub-opetopic cardinal of the ambient T.
struct Cell {
  std::shared_ptr<const Hypergraph> ambient;
  std::vector<char> carrier;
  int level = 0;

  int carrier_dim() const;
  bool proper() const { return level == carrier_dim(); }
  std::vector<int> faces() const;
  bool operator==(const Cell& o) const { return carrier == o.carrier && level == o.level; }
};

// validates closure, cardinal axioms and level >= dim
Cell make_cell(std::shared_ptr<const Hypergraph> ambient, const std::vector<int>& faces, int level);
Cell make_cell(std::shared_ptr<const Hypergraph> ambient, std::vector<char> carrier, int level);
AxiomReport check_cell(const Hypergraph& ambient, const std::vector<char>& carrier, int level);

Cell cell_domain(const Cell& c, int k);
Cell cell_codomain(const Cell& c, int k);
Cell cell_identity(const Cell& c);
// defined when d^(k)(c1) = c^(k)(c2)
bool composable(const Cell& c1, const Cell& c2, int k);
Cell cell_compose(const Cell& c1, const Cell& c2, int k);

// image under an iota-map, same level
Cell map_image_cell(const IotaMap& h, const Cell& c);

// all nonempty gamma/delta-closed subsets passing the cardinal axioms
std::vector<std::vector<char>> enumerate_subcardinals(const Hypergraph& t);

}  // namespace opetope

namespace opetope {

// Exhaustive checks of the omega-category laws over every cell (S, n) of T
// with n in {dim S, dim S + 1}: globular identities, units, and composites.
struct LawStats {
  int cells = 0;
  int compositions = 0;
};
AxiomReport omega_law_suite(const Hypergraph& t, LawStats* stats = nullptr);

// h*(A) is a cardinal commuting with d^(k), c^(k) for all subcardinals A of the
// source, and h*(Q[q]) = P[h(q)] for all q
AxiomReport image_suite(const IotaMap& h);

}  // namespace opetope
