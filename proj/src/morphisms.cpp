#include "opetope/morphisms.hpp"

#include <algorithm>
#include <set>

namespace opetope {

FaceMap make_map(std::shared_ptr<const Hypergraph> source, std::shared_ptr<const Hypergraph> target,
                 const std::vector<std::pair<std::string, std::string>>& pairs) {
  FaceMap f{source, target, std::vector<int>(source->size(), -1)};
  for (const auto& [a, b] : pairs) {
    int q = source->at(a);
    if (f.assign[q] >= 0) throw SchemaError("face '" + a + "' assigned twice");
    f.assign[q] = target->at(b);
  }
  for (int q = 0; q < source->size(); ++q)
    if (f.assign[q] < 0) throw SchemaError("face '" + source->id(q) + "' has no image");
  return f;
}

FaceMap identity_map(std::shared_ptr<const Hypergraph> h) {
  FaceMap f{h, h, std::vector<int>(h->size())};
  for (int q = 0; q < h->size(); ++q) f.assign[q] = q;
  return f;
}

FaceMap constant_map(std::shared_ptr<const Hypergraph> source, std::shared_ptr<const Hypergraph> target, int face) {
  int n = source->size();
  return FaceMap{std::move(source), std::move(target), std::vector<int>(n, face)};
}

static bool well_typed(const FaceMap& f, AxiomReport& r) {
  if (int(f.assign.size()) != f.src().size()) {
    r.add("assignment", {}, "assignment does not cover the source");
    return false;
  }
  for (int q = 0; q < f.src().size(); ++q)
    if (f.assign[q] < 0 || f.assign[q] >= f.tgt().size()) {
      r.add("assignment", {f.src().id(q)}, "image outside the target");
      return false;
    }
  return true;
}

// restriction of f to dom must be a bijection onto cod
static bool bijects(const FaceMap& f, const std::vector<int>& dom, const std::vector<int>& cod) {
  std::vector<int> img;
  for (int q : dom) img.push_back(f(q));
  std::sort(img.begin(), img.end());
  if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
  return img == cod;
}

AxiomReport validate_face_map(const FaceMap& f) {
  AxiomReport r;
  if (!well_typed(f, r)) return r;
  const auto& Q = f.src();
  const auto& P = f.tgt();
  for (int q = 0; q < Q.size(); ++q) {
    if (P.dim(f(q)) != Q.dim(q)) {
      r.add("dimension", {Q.id(q), P.id(f(q))}, "face maps preserve dimension");
      continue;
    }
    if (Q.dim(q) == 0) continue;
    if (P.gamma(f(q)) != f(Q.gamma(q)))
      r.add("codomain", {Q.id(q)}, "γ(f(a)) != f(γ(a))");
    if (!bijects(f, Q.delta(q), P.delta(f(q))))
      r.add("domain-bijection", {Q.id(q)}, "δ(a) -> δ(f(a)) is not a bijection");
  }
  return r;
}

bool in_kernel(const IotaMap& h, int q) { return h.src().dim(q) > h.tgt().dim(h(q)); }

std::vector<int> kernel(const IotaMap& h) {
  std::vector<int> k;
  for (int q = 0; q < h.src().size(); ++q)
    if (in_kernel(h, q)) k.push_back(q);
  return k;
}

int collapse_degree(const IotaMap& h, int q) { return h.src().dim(q) - h.tgt().dim(h(q)); }

AxiomReport validate_iota_map(const IotaMap& h) {
  AxiomReport r;
  if (!well_typed(h, r)) return r;
  const auto& Q = h.src();
  const auto& P = h.tgt();
  for (int q = 0; q < Q.size(); ++q) {
    int m = Q.dim(q), n = P.dim(h(q));
    if (n > m) {
      r.add("1", {Q.id(q), P.id(h(q))}, "dimension increases");
      continue;
    }
    for (int k = 0; k < m; ++k)
      if (h(iterated_codomain(Q, q, k)) != iterated_codomain(P, h(q), k))
        r.add("2", {Q.id(q)}, "h(γ^(" + std::to_string(k) + ")(q)) != γ^(" + std::to_string(k) + ")(h(q))");
    if (m == 0) continue;
    std::vector<int> live;
    for (int d : Q.delta(q))
      if (!in_kernel(h, d)) live.push_back(d);
    if (n == m) {
      if (!bijects(h, live, P.delta(h(q))))
        r.add("3a", {Q.id(q)}, "δ(q)−ker(h) -> δ(h(q)) is not a bijection");
    } else if (n == m - 1) {
      if (!bijects(h, live, {h(q)}))
        r.add("3b", {Q.id(q)}, "δ(q)−ker(h) -> {h(q)} is not a bijection");
    } else if (!live.empty()) {
      r.add("3c", {Q.id(q)}, "δ(q) is not contained in ker(h)");
    }
  }
  return r;
}

const IotaMap& checked(const IotaMap& h) {
  auto r = validate_iota_map(h);
  if (!r.ok()) throw ValidationError("not an ι-map " + h.src().name() + " -> " + h.tgt().name() + ": " + r.summary());
  return h;
}

IotaMap compose_iota(const IotaMap& h2, const IotaMap& h1) {
  if (h1.target != h2.source && !same_structure(h1.tgt(), h2.src()))
    throw UsageError("maps are not composable");
  IotaMap c{h1.source, h2.target, std::vector<int>(h1.assign.size())};
  for (size_t q = 0; q < h1.assign.size(); ++q) c.assign[q] = h2(h1(int(q)));
  return c;
}

bool is_onto(const FaceMap& f) {
  std::vector<char> hit(f.tgt().size(), 0);
  for (int x : f.assign) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_plus_interval(const Hypergraph& h, const Orders& o, const std::vector<int>& xs) {
  if (xs.empty()) return true;
  std::set<int> want(xs.begin(), xs.end());
  int k = h.dim(xs.front());
  for (int lo : xs)
    for (int hi : xs) {
      if (!o.le_plus(lo, hi)) continue;
      std::set<int> between;
      for (int x : h.faces_of_dim(k))
        if (o.le_plus(lo, x) && o.le_plus(x, hi)) between.insert(x);
      if (between == want) return true;
    }
  return false;
}

std::vector<int> fiber(const IotaMap& h, int p) {
  std::vector<int> f;
  for (int q = 0; q < h.src().size(); ++q)
    if (h(q) == p && !in_kernel(h, q)) f.push_back(q);
  return f;
}

bool fiber_interval_check(const IotaMap& h, int p) {
  return is_plus_interval(h.src(), compute_orders(h.src()), fiber(h, p));
}

std::vector<int> interval_map_generators(const Opetope& P) {
  const auto& H = P.hg();
  auto g2 = gamma_of(H, H.faces_of_dim(2));
  std::vector<int> out;
  for (int p : H.faces_of_dim(1))
    if (!std::binary_search(g2.begin(), g2.end(), p)) out.push_back(p);
  return out;
}

IotaMap interval_map(const Opetope& P, int p, std::shared_ptr<const Hypergraph> interval) {
  const auto& H = P.hg();
  const auto& o = P.orders();
  if (H.dim(p) != 1) throw UsageError("h_p needs a 1-face");
  int minus = interval->at("s"), plus = interval->at("t"), arrow = interval->at("a");
  IotaMap h{P.hg_ptr(), interval, std::vector<int>(H.size())};
  for (int x = 0; x < H.size(); ++x) {
    int g1 = iterated_codomain(H, x, 1);
    // the domain of a 0-face is read as the face itself
    std::vector<int> dg1 = H.dim(g1) == 0 ? std::vector<int>{g1} : H.delta(g1);
    if (o.le_plus_any(iterated_codomain(H, x, 0), H.delta(p)))
      h.assign[x] = minus;
    else if (o.le_plus_any(H.gamma(p), dg1))
      h.assign[x] = plus;
    else
      h.assign[x] = arrow;
  }
  return h;
}

std::vector<IotaMap> onto_maps_to_interval(const Opetope& P, std::shared_ptr<const Hypergraph> interval) {
  if (P.dim() < 1) throw UsageError("no onto maps to the interval from a point");
  std::vector<IotaMap> out;
  for (int p : interval_map_generators(P)) out.push_back(interval_map(P, p, interval));
  return out;
}

AxiomReport iota_preservation_suite(const IotaMap& h) {
  AxiomReport r;
  const auto& Q = h.src();
  const auto& P = h.tgt();
  Orders oq = compute_orders(Q), op = compute_orders(P);
  std::vector<int> live;
  for (int q = 0; q < Q.size(); ++q)
    if (!in_kernel(h, q)) live.push_back(q);
  for (int a : live)
    for (int b : live) {
      std::vector<std::string> w{Q.id(a), Q.id(b)};
      if (oq.lt_minus(a, b) != op.lt_minus(h(a), h(b))) r.add("lower-order-reflected", w, "q1 <- q2 iff h(q1) <- h(q2)");
      if (oq.lt_plus(a, b) && !op.le_plus(h(a), h(b))) r.add("upper-order-preserved", w, "q1 <+ q2 but not h(q1) <=+ h(q2)");
      if (op.lt_plus(h(a), h(b)) && !oq.lt_plus(a, b)) r.add("upper-order-reflected", w, "h(q1) <+ h(q2) but not q1 <+ q2");
      if (a != b && h(a) == h(b) && !oq.perp_plus(a, b)) r.add("equal-image-comparable", w, "h(q1) = h(q2) but q1, q2 not <+-comparable");
    }
  return r;
}

IotaMap restrict_map(const IotaMap& h, int q) {
  auto sq = std::make_shared<const Hypergraph>(generated_sub(h.src(), q));
  auto sp = std::make_shared<const Hypergraph>(generated_sub(h.tgt(), h(q)));
  IotaMap r{sq, sp, std::vector<int>(sq->size())};
  for (int f = 0; f < sq->size(); ++f) {
    int img = sp->find(h.tgt().id(h(h.src().at(sq->id(f)))));
    if (img < 0) throw InternalError("restriction of " + h.src().id(q) + " leaves P[h(q)]");
    r.assign[f] = img;
  }
  return r;
}

AxiomReport two_collapse_suite(const IotaMap& h) {
  AxiomReport r;
  const auto& Q = h.src();
  const auto& P = h.tgt();
  for (int q = 0; q < Q.size(); ++q) {
    int k = Q.dim(q) - 2;
    if (k < 0 || P.dim(h(q)) != k) continue;
    for (int d : Q.delta(q))
      if (P.dim(h(d)) == k && h(d) != h(Q.gamma(q)))
        r.add("two-collapse", {Q.id(q), Q.id(d)}, "h(q') != h(γ(q))");
  }
  return r;
}

AxiomReport restriction_suite(const IotaMap& h) {
  AxiomReport r;
  const auto& Q = h.src();
  const auto& P = h.tgt();
  for (int q = 0; q < Q.size(); ++q) {
    IotaMap rq = restrict_map(h, q);
    auto v = validate_iota_map(rq);
    if (!v.ok()) r.add("restriction-iota", {Q.id(q)}, v.summary());
    if (!is_onto(rq)) r.add("restriction-onto", {Q.id(q)}, "Q[q] -> P[h(q)] is not onto");
    auto mask = closure_mask(P, {h(q)});
    Orders o = compute_orders(P, &mask);
    for (int l = 0; l <= Q.dim(q); ++l) {
      int g = iterated_codomain(Q, q, l);
      if (in_kernel(h, g)) continue;
      for (int x : P.faces_of_dim(l))
        if (mask[x] && o.lt_plus(h(g), x))
          r.add("codomain-maximal", {Q.id(q), P.id(x)}, "h(γ^(l)(q)) is not <+-maximal in P[h(q)]");
    }
  }
  return r;
}

}  // namespace opetope
