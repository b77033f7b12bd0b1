#include "opetope/omega.hpp"

#include <algorithm>

namespace opetope {

int Cell::carrier_dim() const {
  int d = -1;
  for (int f = 0; f < ambient->size(); ++f)
    if (carrier[f]) d = std::max(d, ambient->dim(f));
  return d;
}

std::vector<int> Cell::faces() const {
  std::vector<int> out;
  for (int f = 0; f < int(carrier.size()); ++f)
    if (carrier[f]) out.push_back(f);
  return out;
}

static bool closed(const Hypergraph& t, const std::vector<char>& m) {
  for (int f = 0; f < t.size(); ++f) {
    if (!m[f]) continue;
    if (t.gamma(f) >= 0 && !m[t.gamma(f)]) return false;
    for (int d : t.delta(f))
      if (!m[d]) return false;
  }
  return true;
}

AxiomReport check_cell(const Hypergraph& ambient, const std::vector<char>& carrier, int level) {
  AxiomReport r;
  if (int(carrier.size()) != ambient.size()) {
    r.add("cell-carrier", {}, "carrier size does not match the ambient");
    return r;
  }
  if (!closed(ambient, carrier)) {
    r.add("cell-closed", {}, "carrier is not closed under γ and δ");
    return r;
  }
  r.merge(is_opetopic_cardinal(restrict_to(ambient, carrier)));
  int d = -1;
  for (int f = 0; f < ambient.size(); ++f)
    if (carrier[f]) d = std::max(d, ambient.dim(f));
  if (level < d) r.add("cell-level", {}, "level below the carrier dimension");
  return r;
}

Cell make_cell(std::shared_ptr<const Hypergraph> ambient, std::vector<char> carrier, int level) {
  auto r = check_cell(*ambient, carrier, level);
  if (!r.ok()) throw ValidationError("invalid cell: " + r.summary());
  return Cell{std::move(ambient), std::move(carrier), level};
}

Cell make_cell(std::shared_ptr<const Hypergraph> ambient, const std::vector<int>& faces, int level) {
  std::vector<char> m(ambient->size(), 0);
  for (int f : faces) m[f] = 1;
  return make_cell(std::move(ambient), std::move(m), level);
}

static std::vector<int> at_dim(const Cell& c, int k) {
  std::vector<int> out;
  for (int f : c.ambient->faces_of_dim(k))
    if (c.carrier[f]) out.push_back(f);
  return out;
}

Cell cell_domain(const Cell& c, int k) {
  if (k < 0 || k >= c.level) throw UsageError("domain index must be below the level");
  const auto& t = *c.ambient;
  std::vector<char> m(t.size(), 0);
  for (int f = 0; f < t.size(); ++f)
    if (c.carrier[f] && t.dim(f) < k) m[f] = 1;
  auto g = gamma_of(t, at_dim(c, k + 1));
  for (int f : at_dim(c, k))
    if (!std::binary_search(g.begin(), g.end(), f)) m[f] = 1;
  return Cell{c.ambient, std::move(m), k};
}

Cell cell_codomain(const Cell& c, int k) {
  if (k < 0 || k >= c.level) throw UsageError("codomain index must be below the level");
  const auto& t = *c.ambient;
  std::vector<char> m(t.size(), 0);
  for (int f = 0; f < t.size(); ++f)
    if (c.carrier[f] && t.dim(f) < k - 1) m[f] = 1;
  auto top = at_dim(c, k + 1);
  auto d = delta_of(t, top);
  for (int f : at_dim(c, k))
    if (!std::binary_search(d.begin(), d.end(), f)) m[f] = 1;
  if (k >= 1) {
    auto i = iota_faces(t, top);
    for (int f : at_dim(c, k - 1))
      if (!std::binary_search(i.begin(), i.end(), f)) m[f] = 1;
  }
  return Cell{c.ambient, std::move(m), k};
}

Cell cell_identity(const Cell& c) { return Cell{c.ambient, c.carrier, c.level + 1}; }

bool composable(const Cell& c1, const Cell& c2, int k) {
  if (k >= c1.level || k >= c2.level || c1.ambient != c2.ambient) return false;
  return cell_domain(c1, k) == cell_codomain(c2, k);
}

Cell cell_compose(const Cell& c1, const Cell& c2, int k) {
  if (!composable(c1, c2, k)) throw UsageError("cells are not composable at dimension " + std::to_string(k));
  std::vector<char> m(c1.carrier.size());
  for (size_t f = 0; f < m.size(); ++f) m[f] = c1.carrier[f] || c2.carrier[f];
  return make_cell(c1.ambient, std::move(m), std::max(c1.level, c2.level));
}

Cell map_image_cell(const IotaMap& h, const Cell& c) {
  if (c.ambient != h.source && !same_structure(*c.ambient, h.src()))
    throw UsageError("cell does not live in the source of the map");
  std::vector<char> m(h.tgt().size(), 0);
  for (int f = 0; f < h.src().size(); ++f)
    if (c.carrier[f]) m[h(f)] = 1;
  return make_cell(h.target, std::move(m), c.level);
}

std::vector<std::vector<char>> enumerate_subcardinals(const Hypergraph& t) {
  int n = t.size();
  if (n > 24) throw UsageError("subcardinal enumeration is limited to 24 faces");
  std::vector<std::vector<char>> out;
  std::vector<char> m(n);
  for (uint32_t bits = 1; bits < (uint32_t(1) << n); ++bits) {
    for (int f = 0; f < n; ++f) m[f] = (bits >> f) & 1U;
    if (!closed(t, m)) continue;
    if (is_opetopic_cardinal(restrict_to(t, m)).ok()) out.push_back(m);
  }
  return out;
}

}  // namespace opetope

namespace opetope {

static std::string carrier_text(const Cell& c) {
  std::string s = "{";
  bool first = true;
  for (int f : c.faces()) {
    s += (first ? "" : ",") + c.ambient->id(f);
    first = false;
  }
  return s + "}@" + std::to_string(c.level);
}

AxiomReport omega_law_suite(const Hypergraph& t, LawStats* stats) {
  AxiomReport r;
  auto amb = std::make_shared<const Hypergraph>(t);
  std::vector<Cell> cells;
  for (auto& m : enumerate_subcardinals(t)) {
    Cell c{amb, m, 0};
    c.level = c.carrier_dim();
    cells.push_back(c);
    cells.push_back(cell_identity(c));
  }
  if (stats) stats->cells = int(cells.size());
  auto valid = [&](const Cell& c, const std::string& what) {
    auto rep = check_cell(t, c.carrier, c.level);
    if (!rep.ok()) r.add("cell-valid", {carrier_text(c)}, what + " is not a cell");
  };
  for (const auto& c : cells) {
    for (int k = 0; k < c.level; ++k) {
      Cell d = cell_domain(c, k), e = cell_codomain(c, k);
      valid(d, "domain");
      valid(e, "codomain");
      for (int j = 0; j < k; ++j) {
        Cell dj = cell_domain(c, j), cj = cell_codomain(c, j);
        if (!(cell_domain(d, j) == dj) || !(cell_domain(e, j) == dj))
          r.add("globular-domain", {carrier_text(c)}, "d^(j) of a k-boundary differs from d^(j)");
        if (!(cell_codomain(e, j) == cj) || !(cell_codomain(d, j) == cj))
          r.add("globular-codomain", {carrier_text(c)}, "c^(j) of a k-boundary differs from c^(j)");
      }
      Cell left{c.ambient, d.carrier, c.level}, right{c.ambient, e.carrier, c.level};
      if (!composable(c, left, k) || !(cell_compose(c, left, k) == c))
        r.add("unit", {carrier_text(c)}, "c o id(d^(k)c) != c");
      if (!composable(right, c, k) || !(cell_compose(right, c, k) == c))
        r.add("unit", {carrier_text(c)}, "id(c^(k)c) o c != c");
    }
  }
  for (const auto& a : cells)
    for (const auto& b : cells)
      for (int k = 0; k < std::min(a.level, b.level); ++k) {
        if (!composable(a, b, k)) continue;
        if (stats) ++stats->compositions;
        std::vector<char> m(t.size());
        for (int f = 0; f < t.size(); ++f) m[f] = a.carrier[f] || b.carrier[f];
        Cell ab{amb, m, std::max(a.level, b.level)};
        auto rep = check_cell(t, ab.carrier, ab.level);
        if (!rep.ok()) {
          r.add("composite-cardinal", {carrier_text(a), carrier_text(b)}, rep.summary());
          continue;
        }
        if (!(cell_domain(ab, k) == cell_domain(b, k)))
          r.add("composite-domain", {carrier_text(a), carrier_text(b)}, "d^(k)(a o b) != d^(k)(b)");
        if (!(cell_codomain(ab, k) == cell_codomain(a, k)))
          r.add("composite-codomain", {carrier_text(a), carrier_text(b)}, "c^(k)(a o b) != c^(k)(a)");
      }
  return r;
}

AxiomReport image_suite(const IotaMap& h) {
  AxiomReport r;
  const auto& Q = h.src();
  const auto& P = h.tgt();
  for (int q = 0; q < Q.size(); ++q) {
    auto gq = closure_mask(Q, {q});
    std::vector<char> img(P.size(), 0);
    for (int f = 0; f < Q.size(); ++f)
      if (gq[f]) img[h(f)] = 1;
    if (img != closure_mask(P, {h(q)}))
      r.add("image-of-generator", {Q.id(q)}, "h*(Q[q]) != P[h(q)]");
  }
  for (auto& m : enumerate_subcardinals(Q)) {
    Cell a{h.source, m, 0};
    a.level = a.carrier_dim();
    for (int lvl : {a.level, a.level + 1}) {
      a.level = lvl;
      std::vector<char> img(P.size(), 0);
      for (int f = 0; f < Q.size(); ++f)
        if (m[f]) img[h(f)] = 1;
      auto rep = check_cell(P, img, lvl);
      if (!rep.ok()) {
        r.add("image-cardinal", {carrier_text(a)}, rep.summary());
        continue;
      }
      Cell ha{h.target, img, lvl};
      for (int k = 0; k < lvl; ++k) {
        if (!(map_image_cell(h, cell_domain(a, k)) == cell_domain(ha, k)))
          r.add("image-domain", {carrier_text(a)}, "h*(d^(" + std::to_string(k) + ")A) != d^(k)h*(A)");
        if (!(map_image_cell(h, cell_codomain(a, k)) == cell_codomain(ha, k)))
          r.add("image-codomain", {carrier_text(a)}, "h*(c^(" + std::to_string(k) + ")A) != c^(k)h*(A)");
      }
    }
  }
  return r;
}

}  // namespace opetope
