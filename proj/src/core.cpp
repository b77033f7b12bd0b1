#include "opetope/core.hpp"

#include <algorithm>
#include <sstream>

namespace opetope {

void AxiomReport::add(std::string axiom, std::vector<std::string> faces, std::string witness) {
  violations.push_back({std::move(axiom), std::move(faces), std::move(witness)});
}

void AxiomReport::merge(const AxiomReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

bool AxiomReport::has(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

std::string AxiomReport::summary() const {
  if (ok()) return "pass";
  std::ostringstream os;
  os << "fail (" << violations.size() << ")";
  for (const auto& v : violations) {
    os << "\n  " << v.axiom << ":";
    for (const auto& f : v.faces) os << ' ' << f;
    if (!v.witness.empty()) os << " -- " << v.witness;
  }
  return os.str();
}

int Hypergraph::add_face(const std::string& id, int dim) {
  if (id.empty()) throw SchemaError("empty face id");
  if (index_.count(id)) throw SchemaError("duplicate face id '" + id + "'");
  if (dim < 0) throw SchemaError("negative dimension for face '" + id + "'");
  int f = size();
  ids_.push_back(id);
  dim_.push_back(dim);
  gamma_.push_back(-1);
  delta_.emplace_back();
  index_[id] = f;
  if (dim <= kMaxDim) {
    if (int(by_dim_.size()) <= dim) by_dim_.resize(dim + 1);
    by_dim_[dim].push_back(f);
  }
  return f;
}

void Hypergraph::set_delta(int f, std::vector<int> d) {
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  delta_[f] = std::move(d);
}

int Hypergraph::add(const std::string& id, int dim, const std::string& gamma,
                    const std::vector<std::string>& delta) {
  int f = add_face(id, dim);
  if (!gamma.empty()) set_gamma(f, at(gamma));
  std::vector<int> d;
  for (const auto& s : delta) d.push_back(at(s));
  set_delta(f, std::move(d));
  return f;
}

int Hypergraph::dim() const {
  for (int k = int(by_dim_.size()) - 1; k >= 0; --k)
    if (!by_dim_[k].empty()) return k;
  return -1;
}

const std::vector<int>& Hypergraph::faces_of_dim(int k) const {
  static const std::vector<int> empty;
  if (k < 0 || k >= int(by_dim_.size())) return empty;
  return by_dim_[k];
}

int Hypergraph::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

int Hypergraph::at(const std::string& id) const {
  int f = find(id);
  if (f < 0) throw SchemaError("unknown face '" + id + "'");
  return f;
}

std::vector<std::string> Hypergraph::names(const std::vector<int>& fs) const {
  std::vector<std::string> out;
  out.reserve(fs.size());
  for (int f : fs) out.push_back(f < 0 ? std::string("0") : ids_[f]);
  return out;
}

void BitMatrix::close() {
  for (int k = 0; k < n_; ++k) {
    const uint64_t* rk = &bits_[size_t(k) * words_];
    for (int i = 0; i < n_; ++i) {
      if (!get(i, k)) continue;
      uint64_t* ri = &bits_[size_t(i) * words_];
      for (int w = 0; w < words_; ++w) ri[w] |= rk[w];
    }
  }
}

bool Orders::le_plus_any(int a, const std::vector<int>& s) const {
  return std::any_of(s.begin(), s.end(), [&](int b) { return le_plus(a, b); });
}

Orders compute_orders(const Hypergraph& h, const std::vector<char>* mask) {
  int n = h.size();
  Orders o{BitMatrix(n), BitMatrix(n)};
  auto in = [&](int f) { return !mask || (*mask)[f]; };
  for (int f = 0; f < n; ++f) {
    if (!in(f) || h.dim(f) == 0 || h.gamma(f) < 0) continue;
    for (int d : h.delta(f)) o.plus.set(d, h.gamma(f));
  }
  // a <- b iff gamma(a) in delta(b)
  std::vector<std::vector<int>> in_delta_of(n);
  for (int b = 0; b < n; ++b) {
    if (!in(b)) continue;
    for (int d : h.delta(b)) in_delta_of[d].push_back(b);
  }
  for (int a = 0; a < n; ++a) {
    if (!in(a) || h.dim(a) == 0 || h.gamma(a) < 0) continue;
    for (int b : in_delta_of[h.gamma(a)])
      if (h.dim(b) == h.dim(a)) o.minus.set(a, b);
  }
  o.plus.close();
  o.minus.close();
  return o;
}

static OrderRelation order_pairs(const Hypergraph& h, int k, bool upper) {
  if (k < 0 || k > h.dim() || (!upper && k == 0))
    throw std::out_of_range("order dimension " + std::to_string(k) + " out of range");
  Orders o = compute_orders(h);
  OrderRelation r{upper ? OrderRelation::Upper : OrderRelation::Lower, k, {}};
  for (int a : h.faces_of_dim(k))
    for (int b : h.faces_of_dim(k))
      if (upper ? o.lt_plus(a, b) : o.lt_minus(a, b)) r.pairs.emplace_back(a, b);
  return r;
}

OrderRelation lower_order(const Hypergraph& h, int k) { return order_pairs(h, k, false); }
OrderRelation upper_order(const Hypergraph& h, int k) { return order_pairs(h, k, true); }

AxiomReport validate_structure(const Hypergraph& h) {
  AxiomReport r;
  for (int f = 0; f < h.size(); ++f) {
    const std::string& id = h.id(f);
    int k = h.dim(f);
    if (k > kMaxDim) {
      r.add("dimension-cap", {id}, "dimension " + std::to_string(k) + " exceeds " + std::to_string(kMaxDim));
      continue;
    }
    if (k == 0) {
      if (h.gamma(f) >= 0 || !h.delta(f).empty())
        r.add("vertex-boundary", {id}, "a 0-face has no codomain or domain");
      continue;
    }
    if (h.gamma(f) < 0) {
      r.add("gamma-missing", {id}, "no codomain");
    } else if (h.dim(h.gamma(f)) != k - 1) {
      r.add("gamma-dimension", {id, h.id(h.gamma(f))}, "codomain must have dimension " + std::to_string(k - 1));
    }
    if (h.delta(f).empty()) r.add("delta-empty", {id}, "domain is empty");
    for (int d : h.delta(f))
      if (h.dim(d) != k - 1)
        r.add("delta-dimension", {id, h.id(d)}, "domain face must have dimension " + std::to_string(k - 1));
    if (k == 1 && h.delta(f).size() > 1)
      r.add("delta0-single-valued", {id}, "δ_0 not single-valued");
  }
  return r;
}

AxiomReport is_opetopic_cardinal(const Hypergraph& h) {
  AxiomReport r = validate_structure(h);
  if (!r.ok()) return r;
  if (h.faces_of_dim(0).empty()) {
    r.add("nonempty", {}, "no 0-faces");
    return r;
  }
  auto as_set = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  auto minus = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  for (int k = 2; k <= h.dim(); ++k) {
    for (int a : h.faces_of_dim(k)) {
      std::vector<int> gg{h.gamma(h.gamma(a))};
      std::vector<int> dg = h.delta(h.gamma(a));
      std::vector<int> gd = as_set(gamma_of(h, h.delta(a)));
      std::vector<int> dd = delta_of(h, h.delta(a));
      if (gg != minus(gd, dd))
        r.add("globularity", {h.id(a)}, "γγ(a) differs from γδ(a)−δδ(a)");
      if (dg != minus(dd, gd))
        r.add("globularity", {h.id(a)}, "δγ(a) differs from δδ(a)−γδ(a)");
    }
  }
  Orders o = compute_orders(h);
  for (int k = 0; k <= h.dim(); ++k) {
    const auto& fs = h.faces_of_dim(k);
    for (int a : fs)
      if (o.lt_plus(a, a)) r.add("strictness", {h.id(a)}, "a <+ a");
    if (k == 0)
      for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = i + 1; j < fs.size(); ++j)
          if (!o.perp_plus(fs[i], fs[j]))
            r.add("strictness", {h.id(fs[i]), h.id(fs[j])}, "<+ on 0-faces is not linear");
    if (k == 0) continue;
    for (size_t i = 0; i < fs.size(); ++i)
      for (size_t j = i; j < fs.size(); ++j)
        if (o.perp_minus(fs[i], fs[j]) && o.perp_plus(fs[i], fs[j]))
          r.add("disjointness", {h.id(fs[i]), h.id(fs[j])}, "comparable in both <- and <+");
  }
  for (int k = 1; k <= h.dim(); ++k) {
    for (int x : h.faces_of_dim(k - 1)) {
      std::vector<int> by_gamma, by_delta;
      for (int a : h.faces_of_dim(k)) {
        if (h.gamma(a) == x) by_gamma.push_back(a);
        if (std::binary_search(h.delta(a).begin(), h.delta(a).end(), x)) by_delta.push_back(a);
      }
      for (const auto* pencil : {&by_gamma, &by_delta})
        for (size_t i = 0; i < pencil->size(); ++i)
          for (size_t j = i + 1; j < pencil->size(); ++j)
            if (!o.perp_plus((*pencil)[i], (*pencil)[j]))
              r.add("pencil-linearity", {h.id(x), h.id((*pencil)[i]), h.id((*pencil)[j])},
                    pencil == &by_gamma ? "codomain pencil not linear" : "domain pencil not linear");
    }
  }
  return r;
}

std::vector<int> size_vector(const Hypergraph& h) {
  std::vector<int> s;
  for (int n = 0; n <= h.dim(); ++n) {
    std::vector<int> above = delta_of(h, h.faces_of_dim(n + 1));
    int c = 0;
    for (int f : h.faces_of_dim(n))
      if (!std::binary_search(above.begin(), above.end(), f)) ++c;
    s.push_back(c);
  }
  return s;
}

bool size_less(const std::vector<int>& a, const std::vector<int>& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = n; i-- > 0;) {
    int x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

AxiomReport is_opetope(const Hypergraph& h) {
  AxiomReport r = is_opetopic_cardinal(h);
  if (!r.ok()) return r;
  auto s = size_vector(h);
  for (size_t n = 0; n < s.size(); ++n)
    if (s[n] > 1)
      r.add("size", {}, "size entry " + std::to_string(s[n]) + " at dimension " + std::to_string(n));
  return r;
}

std::vector<char> closure_mask(const Hypergraph& h, const std::vector<int>& seeds) {
  std::vector<char> m(h.size(), 0);
  std::vector<int> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    if (m[f]) continue;
    m[f] = 1;
    if (h.gamma(f) >= 0) stack.push_back(h.gamma(f));
    for (int d : h.delta(f)) stack.push_back(d);
  }
  return m;
}

Hypergraph restrict_to(const Hypergraph& h, const std::vector<char>& mask) {
  Hypergraph s(h.name());
  std::vector<int> idx(h.size(), -1);
  for (int f = 0; f < h.size(); ++f)
    if (mask[f]) idx[f] = s.add_face(h.id(f), h.dim(f));
  for (int f = 0; f < h.size(); ++f) {
    if (!mask[f]) continue;
    if (h.gamma(f) >= 0) s.set_gamma(idx[f], idx[h.gamma(f)]);
    std::vector<int> d;
    for (int x : h.delta(f)) d.push_back(idx[x]);
    s.set_delta(idx[f], std::move(d));
  }
  return s;
}

Hypergraph generated_sub(const Hypergraph& h, int x) {
  Hypergraph s = restrict_to(h, closure_mask(h, {x}));
  s.set_name(h.name() + "[" + h.id(x) + "]");
  return s;
}

int iterated_codomain(const Hypergraph& h, int p, int k) {
  while (h.dim(p) > k) p = h.gamma(p);
  return p;
}

std::vector<int> boundary(const Hypergraph& h, int p) {
  if (h.dim(p) == 0) throw UsageError("boundary of a 0-face '" + h.id(p) + "'");
  std::vector<int> b = h.delta(p);
  b.push_back(h.gamma(p));
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

bool occurs(const Hypergraph& h, int q, int p) {
  int k = h.dim(q);
  if (k > h.dim(p)) return false;
  if (q == p) return true;
  if (h.dim(p) == 0) return false;
  auto b = boundary(h, p);
  if (std::binary_search(b.begin(), b.end(), q)) return true;
  int g = iterated_codomain(h, p, k + 2);
  if (h.dim(g) == 0) return false;
  for (int y : boundary(h, g)) {
    if (h.dim(y) == 0) continue;
    auto by = boundary(h, y);
    if (std::binary_search(by.begin(), by.end(), q)) return true;
  }
  return false;
}

std::vector<int> gamma_of(const Hypergraph& h, const std::vector<int>& xs) {
  std::vector<int> out;
  for (int x : xs)
    if (h.gamma(x) >= 0) out.push_back(h.gamma(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> delta_of(const Hypergraph& h, const std::vector<int>& xs) {
  std::vector<int> out;
  for (int x : xs) out.insert(out.end(), h.delta(x).begin(), h.delta(x).end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> iota_faces(const Hypergraph& h, int x) {
  std::vector<int> gd = gamma_of(h, h.delta(x));
  std::vector<int> dd = delta_of(h, h.delta(x));
  std::vector<int> out;
  std::set_intersection(gd.begin(), gd.end(), dd.begin(), dd.end(), std::back_inserter(out));
  return out;
}

std::vector<int> iota_faces(const Hypergraph& h, const std::vector<int>& xs) {
  std::vector<int> out;
  for (int x : xs) {
    auto i = iota_faces(h, x);
    out.insert(out.end(), i.begin(), i.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Hypergraph dual(const Hypergraph& h) {
  Hypergraph d = h;
  std::string n = h.name();
  if (n.size() > 3 && n.compare(n.size() - 3, 3, "^op") == 0)
    d.set_name(n.substr(0, n.size() - 3));
  else
    d.set_name(n + "^op");
  for (int f : h.faces_of_dim(1)) {
    if (h.delta(f).size() != 1) throw UsageError("dual needs single-valued δ on 1-faces");
    d.set_gamma(f, h.delta(f)[0]);
    d.set_delta(f, {h.gamma(f)});
  }
  return d;
}

bool same_structure(const Hypergraph& a, const Hypergraph& b) {
  if (a.size() != b.size()) return false;
  for (int f = 0; f < a.size(); ++f)
    if (a.id(f) != b.id(f) || a.dim(f) != b.dim(f) || a.gamma(f) != b.gamma(f) || a.delta(f) != b.delta(f))
      return false;
  return true;
}

Opetope::Opetope(Hypergraph h) {
  AxiomReport r = is_opetope(h);
  if (!r.ok()) throw ValidationError("'" + h.name() + "' is not a positive opetope: " + r.summary());
  h_ = std::make_shared<const Hypergraph>(std::move(h));
  const auto& g = *h_;
  top_ = g.faces_of_dim(g.dim()).front();
  masks_.resize(g.size());
  sub_orders_.resize(g.size());
  for (int x = 0; x < g.size(); ++x) {
    masks_[x] = closure_mask(g, {x});
    sub_orders_[x] = compute_orders(g, &masks_[x]);
  }
}

}  // namespace opetope
