#include "opetope/product.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace opetope {

namespace {

int arrow_of(const Hypergraph& I) {
  const auto& edges = I.faces_of_dim(1);
  if (edges.size() != 1 || I.dim() != 1) throw UsageError("'" + I.name() + "' is not the interval");
  return edges[0];
}

std::string names_text(const Hypergraph& h, const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + h.id(x);
  return "[" + s + "]";
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// [p, 0?, rest] with rest a (p-)flag one or two levels below p
Flag prepend(const Flag& rest, int p, int pdim, bool puncture) {
  Flag f = rest;
  f.e.resize(pdim + 1, kAbsent);
  f.e[pdim] = p;
  if (puncture) f.e[pdim - 1] = kDummy;
  return f;
}

}  // namespace

int interval_value(const IotaMap& rho, int q) {
  const auto& I = rho.tgt();
  int a = arrow_of(I);
  int x = rho(q);
  if (x == a) return 0;
  return x == I.gamma(a) ? 1 : -1;
}

std::string sequence_kind_text(SplittingSequence::Kind k) {
  switch (k) {
    case SplittingSequence::None: return "none";
    case SplittingSequence::ThresholdForm: return "threshold-form";
    case SplittingSequence::SplittingForm: return "splitting-form";
    case SplittingSequence::Inherited: return "inherited";
  }
  return "?";
}

std::string hcase_text(HCase c) {
  switch (c) {
    case HCase::FlatMinus: return "flat-";
    case HCase::FlatPlus: return "flat+";
    case HCase::H1: return "H1";
    case HCase::H2: return "H2";
    case HCase::H3: return "H3";
    case HCase::H4: return "H4/H4.1";
    case HCase::H5: return "H5";
    case HCase::H6: return "H6";
    case HCase::H7: return "H7";
  }
  return "?";
}

ProductPair::ProductPair(const IotaMap& rho, const IotaMap& h)
    : ProductPair(rho, h, std::make_shared<const Cylinder>(Opetope(h.tgt()))) {}

ProductPair::ProductPair(const IotaMap& rho, const IotaMap& h, std::shared_ptr<const Cylinder> cyl)
    : Q_(h.src()), rho_(checked(rho)), h_(checked(h)), cyl_(std::move(cyl)) {
  if (rho.source != h.source && !same_structure(rho.src(), h.src()))
    throw UsageError("rho and h have different sources");
  if (!same_structure(cyl_->base().hg(), h.tgt())) throw UsageError("cylinder is not over the target of h");
  arrow_of(rho.tgt());
  analyze();
  compute_H();
}

void ProductPair::analyze() {
  const auto& Q = Q_.hg();
  const auto& P = h_.tgt();
  const Orders& ord = Q_.orders();
  int n = Q.size(), D = Q.dim();
  SplitAnalysis& a = an_;
  a.S.assign(D + 2, {});
  a.T.assign(D + 2, {});
  a.A.assign(D + 2, {});
  a.B.assign(D + 2, {});
  a.splitting.assign(n, 0);
  a.threshold.assign(n, 0);
  a.sigma.assign(n, -1);
  a.tau.assign(n, -1);
  a.xi.assign(n, -1);
  auto hdim = [&](int q) { return P.dim(h_(q)); };
  auto r = [&](std::string ax, std::vector<int> fs, std::string w) { a.report.add(std::move(ax), Q.names(fs), std::move(w)); };

  // classification by the definitions, bottom-up
  for (int d = 1; d <= D; ++d)
    for (int q : Q.faces_of_dim(d)) {
      bool arrow = value(q) == 0;
      if (d == 1) {
        a.splitting[q] = arrow && hdim(q) == 0;
        a.threshold[q] = arrow && hdim(q) == 1;
        if (hdim(q) == 0) a.xi[q] = Q.delta(q)[0];
        continue;
      }
      std::vector<int> sp, th, xs;
      for (int x : Q.delta(q)) {
        if (a.splitting[x]) sp.push_back(x);
        if (a.threshold[x]) th.push_back(x);
        if (h_(x) == h_(Q.gamma(q))) xs.push_back(x);
      }
      if (sp.size() > 1) r("sigma-unique", {q}, "two splitting faces in δ(q)");
      if (th.size() > 1) r("tau-unique", {q}, "two threshold faces in δ(q)");
      if (!sp.empty()) a.sigma[q] = sp[0];
      if (!th.empty()) a.tau[q] = th[0];
      a.splitting[q] = arrow && hdim(q) == d - 1 && !sp.empty();
      a.threshold[q] = !in_kernel(h_, q) && !sp.empty();
      if (hdim(q) == d - 1) {
        if (xs.size() != 1) r("xi-unique", {q}, std::to_string(xs.size()) + " faces of δ(q) over h(γ(q))");
        if (!xs.empty()) a.xi[q] = xs[0];
      }
    }

  if (value(Q_.top()) != 0) return;

  // the interval-building iteration
  auto next_up = [&](int x, int l) {
    std::vector<int> found;
    if (l + 1 > D) return -1;
    auto g = l + 2 <= D ? gamma_of(Q, Q.faces_of_dim(l + 2)) : std::vector<int>{};
    for (int y : Q.faces_of_dim(l + 1)) {
      if (std::binary_search(g.begin(), g.end(), y)) continue;
      if (contains(Q.delta(y), x)) found.push_back(y);
    }
    if (found.size() > 1) r("witness-unique", {x}, "two generating faces have it in their domain");
    return found.empty() ? -1 : found[0];
  };
  std::vector<int> starts;
  auto g2 = gamma_of(Q, D >= 2 ? Q.faces_of_dim(2) : std::vector<int>{});
  for (int x : Q.faces_of_dim(1))
    if (value(x) == 0 && !std::binary_search(g2.begin(), g2.end(), x)) starts.push_back(x);
  if (starts.size() != 1) {
    r("start", starts, std::to_string(starts.size()) + " generating 1-faces over the arrow");
    if (starts.empty()) return;
  }
  int start = starts[0];
  bool start_splits = hdim(start) == 0;
  for (int l = 1;; ++l) {
    a.k = l;
    int cur = start, up_split = -1, up_thr = -1;
    if (start_splits) {
      a.S[l].push_back(cur);
      bool stop = false;
      for (;;) {
        int y = next_up(cur, l);
        if (y < 0) {
          stop = true;
          break;
        }
        int c = collapse_degree(h_, y);
        cur = Q.gamma(y);
        if (c == 2) {
          a.S[l].push_back(cur);
          a.A[l + 1].push_back(y);
          continue;
        }
        a.T[l].push_back(cur);
        (c == 1 ? up_split : up_thr) = y;
        break;
      }
      if (stop) break;
    } else {
      a.T[l].push_back(cur);
    }
    for (int y; (y = next_up(cur, l)) >= 0;) {
      cur = Q.gamma(y);
      a.T[l].push_back(cur);
      a.B[l + 1].push_back(y);
    }
    if (up_split >= 0) {
      start = up_split;
      start_splits = true;
    } else if (up_thr >= 0) {
      start = up_thr;
      start_splits = false;
    } else {
      break;
    }
  }

  // structural properties of the intervals and witnesses
  int k = a.k;
  for (int i = 1; i <= D; ++i) {
    std::vector<int> sp, th;
    for (int q : Q.faces_of_dim(i)) {
      if (a.splitting[q]) sp.push_back(q);
      if (a.threshold[q]) th.push_back(q);
    }
    auto sorted = [](std::vector<int> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    if (sorted(a.S[i]) != sp) r("all-splitting", a.S[i], "S^" + std::to_string(i) + " is not the set of splitting faces " + names_text(Q, sp));
    if (sorted(a.T[i]) != th) r("all-threshold", a.T[i], "T^" + std::to_string(i) + " is not the set of threshold faces " + names_text(Q, th));
  }
  for (int i = 1; i <= k; ++i) {
    const auto &S = a.S[i], &T = a.T[i], &A = a.A[i + 1], &B = a.B[i + 1];
    std::string at = " at dimension " + std::to_string(i);
    if (i < k && (S.empty() || T.empty())) r("interval-nonempty", {}, "S or T empty below the top" + at);
    if (i == k && S.empty() == T.empty()) r("interval-nonempty", {}, "S^k and T^k must have exactly one empty" + at);
    auto gi = gamma_of(Q, i + 1 <= D ? Q.faces_of_dim(i + 1) : std::vector<int>{});
    auto di = delta_of(Q, i + 1 <= D ? Q.faces_of_dim(i + 1) : std::vector<int>{});
    auto chain = [&](const std::vector<int>& xs) {
      for (size_t j = 1; j < xs.size(); ++j)
        if (!ord.lt_plus(xs[j - 1], xs[j])) return false;
      return true;
    };
    if (!chain(S) || !is_plus_interval(Q, ord, S)) r("splitting-interval", S, "S is not a <+-interval" + at);
    if (!S.empty() && std::binary_search(gi.begin(), gi.end(), S[0])) r("splitting-interval", S, "S is not initial" + at);
    if (!chain(T) || !is_plus_interval(Q, ord, T)) r("threshold-interval", T, "T is not a <+-interval" + at);
    auto witness = [&](const std::vector<int>& xs, const std::vector<int>& ys, const std::string& item, int lo, int hi) {
      if (ys.size() + 1 != std::max<size_t>(xs.size(), 1)) {
        r(item, ys, "wrong number of witnesses" + at);
        return;
      }
      auto gg = gamma_of(Q, i + 2 <= D ? Q.faces_of_dim(i + 2) : std::vector<int>{});
      for (size_t j = 0; j < ys.size(); ++j) {
        int y = ys[j], c = collapse_degree(h_, y);
        if (!contains(Q.delta(y), xs[j]) || Q.gamma(y) != xs[j + 1]) r(item, {y}, "not a witness step" + at);
        if (std::binary_search(gg.begin(), gg.end(), y)) r(item, {y}, "witness is a codomain" + at);
        if (c < lo || c > hi) r(item, {y}, "witness collapses by " + std::to_string(c));
      }
      for (size_t j = 1; j < ys.size(); ++j)
        if (!ord.lt_minus(ys[j - 1], ys[j])) r(item, {ys[j - 1], ys[j]}, "witnesses are not <- ordered" + at);
    };
    witness(S, A, "splitting-witness", 2, 2);
    witness(T, B, "threshold-witness", 0, 1);
    std::vector<int> ST = S;
    ST.insert(ST.end(), T.begin(), T.end());
    if (!chain(ST) || !is_plus_interval(Q, ord, ST)) r("joint-interval", ST, "S∪T is not a <+-interval" + at);
    if (!ST.empty()) {
      if (std::binary_search(gi.begin(), gi.end(), ST.front())) r("joint-interval", {ST.front()}, "min is not <+-minimal" + at);
      if (std::binary_search(di.begin(), di.end(), ST.back())) r("joint-interval", {ST.back()}, "max is not <+-maximal" + at);
    }
    if (i < k && !S.empty() && !T.empty()) {
      std::vector<int> up = a.S[i + 1];
      up.insert(up.end(), a.T[i + 1].begin(), a.T[i + 1].end());
      if (up.empty() || !contains(Q.delta(up[0]), S.back()) || Q.gamma(up[0]) != T[0])
        r("joint-step", {S.back(), T[0]}, "the first face one dimension up does not join S and T" + at);
    }
    for (size_t j = 0; j < B.size(); ++j) {
      int c = collapse_degree(h_, B[j]);
      int lo = h_(T[j]), hi = h_(T[j + 1]);
      const Orders& po = cyl_->base().orders();
      if (c == 0 && !po.lt_plus(lo, hi)) r("threshold-images-increase", {B[j]}, "threshold images do not increase");
      if (c == 1 && lo != hi) r("threshold-images-distinct", {B[j]}, "threshold images differ");
    }
    if (i < k) {
      std::vector<int> up = a.S[i + 1];
      up.insert(up.end(), a.T[i + 1].begin(), a.T[i + 1].end());
      if (!up.empty() && !ST.empty()) {
        int mx = up.back();
        if (!contains(Q.delta(iterated_codomain(Q, mx, i + 1)), ST.front()))
          r("level-nesting", {ST.front(), mx}, "min^i is not in δγ^(i+1)(max^(i+1))");
        if (iterated_codomain(Q, mx, i) != ST.back()) r("level-nesting", {ST.back(), mx}, "γ^(i)(max^(i+1)) != max^i");
      }
    }
  }

  // sigma, tau, xi
  for (int q = 0; q < n; ++q) {
    if (a.sigma[q] >= 0 && a.tau[q] >= 0) r("sigma-tau-exclusive", {q}, "both σ(q) and τ(q) are defined");
    if (a.splitting[q] && Q.dim(q) >= 2 && a.xi[q] >= 0 && !ord.perp_minus(a.sigma[q], a.xi[q]))
      r("sigma-xi", {q}, "σ(q) and ξ(q) are not <- comparable");
    int levels = 0;
    for (int l = 0; l + 2 <= Q.dim(q); ++l)
      if (a.tau[iterated_codomain(Q, q, l + 2)] >= 0) ++levels;
    if (levels > 1) r("tau-one-level", {q}, "τ is defined on two codomain iterates");
  }
  for (int d = 2; d <= D; ++d)
    for (int q : Q.faces_of_dim(d))
      for (int q2 : Q.faces_of_dim(d))
        if (q < q2 && a.sigma[q] >= 0 && a.sigma[q2] >= 0 && collapse_degree(h_, q) <= 1 &&
            collapse_degree(h_, q2) <= 1 && ord.perp_minus(q, q2))
          r("sigma-incomparable", {q, q2}, "two at most 1-collapsing faces with σ are <- comparable");
}

int ProductPair::sigma(int q) const {
  if (an_.sigma[q] < 0) throw UsageError("σ(" + Q_.hg().id(q) + ") is undefined");
  return an_.sigma[q];
}

int ProductPair::tau(int q) const {
  if (an_.tau[q] < 0) throw UsageError("τ(" + Q_.hg().id(q) + ") is undefined");
  return an_.tau[q];
}

int ProductPair::xi(int q) const {
  if (an_.xi[q] < 0) throw UsageError("ξ(" + Q_.hg().id(q) + ") is undefined");
  return an_.xi[q];
}

SplittingSequence ProductPair::splitting_sequence(int q) const {
  const auto& Q = Q_.hg();
  const auto& a = an_;
  SplittingSequence s;
  int d = Q.dim(q);
  auto sigma_chain = [&](int x) {
    while (Q.dim(x) > 1 && a.sigma[x] >= 0) {
      x = a.sigma[x];
      s.faces.push_back(x);
    }
  };
  if (d == 0) return s;
  if (d == 1) {
    if (value(q) != 0) return s;
    s.kind = a.threshold[q] ? SplittingSequence::ThresholdForm : SplittingSequence::SplittingForm;
    s.faces = {q};
    s.threshold_at = a.threshold[q] ? 0 : -1;
    s.clause = 2;
    return s;
  }
  // a threshold face is its own threshold level
  if (a.threshold[q]) {
    s.kind = SplittingSequence::ThresholdForm;
    s.faces = {q};
    s.threshold_at = 0;
    s.clause = 3;
    sigma_chain(q);
    return s;
  }
  if (!in_kernel(h_, q))
    for (int l = d - 2; l >= 0; --l) {
      int g = iterated_codomain(Q, q, l + 2);
      if (a.tau[g] < 0) continue;
      for (int j = d; j >= l + 2; --j) s.faces.push_back(iterated_codomain(Q, q, j));
      s.faces.push_back(a.tau[g]);
      s.threshold_at = int(s.faces.size()) - 1;
      sigma_chain(a.tau[g]);
      s.kind = SplittingSequence::ThresholdForm;
      s.clause = 3;
      return s;
    }
  if (collapse_degree(h_, q) == 1 && a.sigma[q] >= 0) {
    s.kind = SplittingSequence::SplittingForm;
    s.faces = {q};
    sigma_chain(q);
    s.clause = 4;
    return s;
  }
  SplittingSequence g = splitting_sequence(Q.gamma(q));
  if (g.kind == SplittingSequence::None) return s;
  g.kind = SplittingSequence::Inherited;
  g.clause = 5;
  return g;
}

void ProductPair::compute_H() {
  const auto& Q = Q_.hg();
  const auto& P = h_.tgt();
  int n = Q.size();
  values_.assign(n, CylFace{});
  cases_.assign(n, HCase::H7);
  std::vector<int> order(n);
  for (int q = 0; q < n; ++q) order[q] = q;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return Q.dim(x) < Q.dim(y); });
  for (int q : order) {
    int v = value(q), p = h_(q), pd = P.dim(p);
    CylFace& out = values_[q];
    HCase& c = cases_[q];
    if (v != 0) {
      out = CylFace::flat(v, p);
      c = v < 0 ? HCase::FlatMinus : HCase::FlatPlus;
    } else if (Q.dim(q) == 1) {
      bool split = an_.splitting[q];
      out = CylFace::of(split ? Flag{{p}} : Flag{{kDummy, p}});
      c = split ? HCase::H1 : HCase::H2;
    } else if (an_.splitting[q]) {
      out = CylFace::of(prepend(values_[an_.sigma[q]].flag, p, pd, false));
      c = HCase::H3;
    } else if (!in_kernel(h_, q) && an_.sigma[q] >= 0) {
      out = CylFace::of(prepend(values_[an_.sigma[q]].flag, p, pd, true));
      c = HCase::H4;
    } else if (!in_kernel(h_, q) && an_.tau[q] >= 0) {
      out = CylFace::of(prepend(values_[an_.tau[q]].flag, p, pd, false));
      c = HCase::H5;
    } else if (!in_kernel(h_, q)) {
      out = CylFace::of(prepend(values_[Q.gamma(q)].flag, p, pd, false));
      c = HCase::H6;
    } else {
      out = values_[Q.gamma(q)];
      c = HCase::H7;
    }
  }
}

IotaMap ProductPair::build_H() const {
  const auto& Q = Q_.hg();
  const auto& Ph = P().hg();
  IotaMap H{Q_.hg_ptr(), cyl_->hg_ptr(), std::vector<int>(Q.size(), -1)};
  for (int q = 0; q < Q.size(); ++q) {
    const CylFace& c = values_[q];
    bool bad = c.kind != CylFace::Flat && !is_valid_flag(Ph, c.flag);
    int i = bad ? -1 : cyl_->find(c);
    if (i < 0) {
      std::string shown = c.kind == CylFace::Flat ? cyl_id(Ph, c) : "a malformed flag";
      throw ValidationError("H(" + Q.id(q) + ") = " + shown + " (" + hcase_text(cases_[q]) + ") is not a face of " +
                            cyl_->hg().name());
    }
    H.assign[q] = i;
  }
  auto r = validate_iota_map(H);
  if (!r.ok()) throw ValidationError("H is not an ι-map: " + r.summary());
  return H;
}

SearchStats ProductPair::count_solutions(long long cap, long long stop_after, std::vector<int>* first) const {
  const auto& Q = Q_.hg();
  const auto& C = cyl_->hg();
  int n = Q.size();
  SearchStats st;
  st.cap = cap;
  std::vector<int> order(n);
  for (int q = 0; q < n; ++q) order[q] = q;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return Q.dim(x) < Q.dim(y); });
  auto cyl_value = [&](int i) {
    const CylFace& c = cyl_->face(i);
    return c.kind == CylFace::Flat ? c.sign : 0;
  };
  std::vector<std::vector<int>> over(P().hg().size());
  for (int i = 0; i < C.size(); ++i) over[cyl_->project(i)].push_back(i);
  std::vector<int> as(n, -1);
  auto kernel_face = [&](int q) { return C.dim(as[q]) < Q.dim(q); };
  auto fits = [&](int q, int c) {
    int m = Q.dim(q), d = C.dim(c);
    if (d > m) return false;
    for (int k = 0; k < m; ++k)
      if (as[iterated_codomain(Q, q, k)] != iterated_codomain(C, c, k)) return false;
    if (m == 0) return true;
    std::vector<int> live;
    for (int x : Q.delta(q))
      if (!kernel_face(x)) live.push_back(as[x]);
    std::sort(live.begin(), live.end());
    if (std::adjacent_find(live.begin(), live.end()) != live.end()) return false;
    if (d == m) {
      std::vector<int> want = C.delta(c);
      std::sort(want.begin(), want.end());
      return live == want;
    }
    if (d == m - 1) return live == std::vector<int>{c};
    return live.empty();
  };
  auto rec = [&](auto&& self, int idx) -> void {
    if (st.capped || st.solutions >= stop_after) return;
    if (idx == n) {
      if (st.solutions++ == 0 && first) *first = as;
      return;
    }
    int q = order[idx];
    for (int c : over[h_(q)]) {
      if (cyl_value(c) != value(q)) continue;
      if (++st.visited > cap) {
        st.capped = true;
        return;
      }
      if (!fits(q, c)) continue;
      as[q] = c;
      self(self, idx + 1);
      as[q] = -1;
      if (st.capped || st.solutions >= stop_after) return;
    }
  };
  rec(rec, 0);
  return st;
}

FaceMap cylinder_projection(const Cylinder& C) {
  FaceMap f{C.hg_ptr(), C.base().hg_ptr(), std::vector<int>(C.hg().size())};
  for (int i = 0; i < C.hg().size(); ++i) f.assign[i] = C.project(i);
  return f;
}

FaceMap cylinder_interval_map(const Cylinder& C, std::shared_ptr<const Hypergraph> interval) {
  int a = arrow_of(*interval);
  int plus = interval->gamma(a), minus = interval->delta(a)[0];
  FaceMap f{C.hg_ptr(), interval, std::vector<int>(C.hg().size())};
  for (int i = 0; i < C.hg().size(); ++i) {
    const CylFace& c = C.face(i);
    f.assign[i] = c.kind != CylFace::Flat ? a : c.sign < 0 ? minus : plus;
  }
  return f;
}

long long search_cap() {
  if (const char* s = std::getenv("OPETOPE_MAX_SEARCH")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
    throw UsageError(std::string("OPETOPE_MAX_SEARCH must be a positive integer, got '") + s + "'");
  }
  return 10'000'000;
}

ProductVerdict verify_product(const ProductPair& pp) {
  ProductVerdict v;
  AxiomReport& r = v.report;
  const auto& Q = pp.Q().hg();
  r.merge(pp.analysis().report);
  IotaMap H;
  try {
    H = pp.build_H();
  } catch (const ValidationError& e) {
    r.add("H-valid", {}, e.what());
    return v;
  }
  const Cylinder& C = pp.cylinder();
  for (int q = 0; q < Q.size(); ++q) {
    if (C.project(H(q)) != pp.h()(q)) r.add("projection-P", {Q.id(q)}, "π(H(q)) != h(q)");
    const CylFace& c = C.face(H(q));
    int side = c.kind == CylFace::Flat ? c.sign : 0;
    if (side != pp.value(q)) r.add("projection-I", {Q.id(q)}, "ρ_I(H(q)) != ρ(q)");
  }
  std::vector<int> found;
  v.search = pp.count_solutions(search_cap(), 2, &found);
  if (v.search.capped)
    r.add("uniqueness", {}, "search cap " + std::to_string(v.search.cap) + " reached");
  else if (v.search.solutions != 1)
    r.add("uniqueness", {}, std::to_string(v.search.solutions) + " maps over both projections");
  else if (found != H.assign)
    r.add("uniqueness", {}, "the only map found differs from H");
  return v;
}

AxiomReport h_lemma_suite(const ProductPair& pp) {
  AxiomReport r;
  const auto& Q = pp.Q().hg();
  const auto& h = pp.h();
  const auto& a = pp.analysis();
  const auto& H = pp.H_values();
  const Orders& ord = pp.Q().orders();
  const FlagTable& T = pp.cylinder().table();
  const auto& Ph = pp.P().hg();
  auto add = [&](std::string ax, std::vector<int> fs, std::string w) { r.add(std::move(ax), Q.names(fs), std::move(w)); };
  auto txt = [&](const CylFace& c) { return cyl_id(Ph, c); };
  r.merge(two_collapse_suite(h));
  for (int q = 0; q < Q.size(); ++q) {
    int d = Q.dim(q), c = collapse_degree(h, q);
    const CylFace& Hq = H[q];
    // ker(H) and dimension bookkeeping
    int hd = cyl_dim(Ph, Hq);
    bool kerH = hd < d, expect_ker = in_kernel(h, q) && !a.splitting[q];
    if (kerH != expect_ker) add("kernel", {q}, "q in ker(H) != (q in ker(h) and not splitting)");
    HCase hc = pp.which_case(q);
    if ((hc == HCase::H1 || hc == HCase::H3) && (Hq.kind != CylFace::FlagFace || hd != d))
      add("dimension", {q}, "splitting face not sent to a flag of its dimension");
    if ((hc == HCase::H2 || hc == HCase::H4 || hc == HCase::H5 || hc == HCase::H6) &&
        (Hq.kind != CylFace::PFlagFace || hd != d))
      add("dimension", {q}, "face not sent to a p-flag of its dimension");
    if (hc == HCase::H7 && hd >= d) add("dimension", {q}, "H7 face keeps its dimension");

    if (d >= 2 && c == 1 && !a.splitting[q] && a.xi[q] >= 0 && !(H[a.xi[q]] == H[Q.gamma(q)]))
      add("collapse-gamma", {q}, "H(ξ(q)) = " + txt(H[a.xi[q]]) + " but H(γ(q)) = " + txt(H[Q.gamma(q)]));
    if (d >= 2 && a.splitting[q]) {
      int s = a.sigma[q], x = a.xi[q];
      CylFace lo = T.low(Hq.flag), hi = T.high(Hq.flag);
      if (x >= 0 && !(H[x] == lo)) add("collapse-low", {q}, "H(ξ(q)) = " + txt(H[x]) + " but H(q)_low = " + txt(lo));
      if (!(H[Q.gamma(q)] == hi))
        add("collapse-high", {q}, "H(γ(q)) = " + txt(H[Q.gamma(q)]) + " but H(q)_high = " + txt(hi));
      // below dimension 3, γ(σ(q)) is a vertex and never a threshold face
      if (d >= 3 && x >= 0 && ord.lt_minus(s, x) && a.tau[x] != Q.gamma(s))
        add("xi-sigma-1", {q}, "γ(σ(q)) is not τ(ξ(q))");
      if (x >= 0 && ord.lt_minus(x, s) && Q.dim(s) >= 1) {
        int v1 = h(s), v2 = h(Q.gamma(s)), v3 = h(iterated_codomain(Q, q, d - 2)), v4 = h(Q.gamma(x));
        if (!(v1 == v2 && v2 == v3 && v3 == v4)) add("xi-sigma-2", {q}, "h(σ), h(γσ), h(γγ), h(γξ) differ");
      }
    }
    if (d >= 2 && !in_kernel(h, q))
      for (int qb : Q.delta(q)) {
        if (in_kernel(h, qb)) continue;
        CylFace s = star(pp.P(), h(qb), Hq).face;
        if (!(s == H[qb])) add("star-preservation", {q, qb}, "H(q̄) = " + txt(H[qb]) + " but h(q̄)*H(q) = " + txt(s));
      }
    // splitting sequences
    SplittingSequence seq = pp.splitting_sequence(q);
    bool exists = seq.kind != SplittingSequence::None;
    if (exists != (pp.value(q) == 0)) add("sequence-exists", {q}, "a splitting sequence exists iff ρ(q) = a fails");
    if (seq.kind == SplittingSequence::ThresholdForm || seq.kind == SplittingSequence::SplittingForm) {
      Flag f{std::vector<int>(d + 1, kAbsent)};
      int lvl = d;
      for (size_t j = 0; j < seq.faces.size(); ++j) {
        int img = h(seq.faces[j]);
        lvl = Ph.dim(img);
        f.e[lvl] = img;
        if (int(j) == seq.threshold_at) f.e[--lvl] = kDummy;
      }
      while (!f.e.empty() && f.e.back() == kAbsent) f.e.pop_back();
      bool threshold = seq.kind == SplittingSequence::ThresholdForm;
      if (threshold && in_kernel(h, q)) add("sequence-form", {q}, "threshold-form sequence on a kernel face");
      if (!threshold && c != 1) add("sequence-form", {q}, "splitting-form sequence on a face that is not 1-collapsing");
      if (!(CylFace::of(f) == Hq))
        add(threshold ? "sequence-threshold" : "sequence-splitting", {q},
            "H(q) = " + txt(Hq) + " but the sequence gives " + flag_text(Ph, f));
    } else if (seq.kind == SplittingSequence::Inherited) {
      if (!in_kernel(h, q)) add("sequence-form", {q}, "inherited sequence on a non-kernel face");
      if (!(Hq == H[Q.gamma(q)])) add("sequence-inherited", {q}, "H(q) != H(γ(q))");
    } else if (d >= 1) {
      int g1 = iterated_codomain(Q, q, 1);
      for (int x : Q.faces_of_dim(1)) {
        if (pp.value(x) != 0) continue;
        if (ord.lt_minus(g1, x) && !(Hq == CylFace::flat(-1, h(q))))
          add("sequence-none", {q, x}, "γ^(1)(q) <- x but H(q) is not -h(q)");
        if (ord.lt_minus(x, g1) && !(Hq == CylFace::flat(1, h(q))))
          add("sequence-none", {q, x}, "x <- γ^(1)(q) but H(q) is not +h(q)");
      }
    }
  }
  return r;
}

ProjectionPair projection_pair(const Cylinder& C, const Flag& x, std::shared_ptr<const Hypergraph> interval) {
  auto src = std::make_shared<const Hypergraph>(flag_opetope(C, x));
  ProjectionPair out{src, {src, C.base().hg_ptr(), {}}, {src, interval, {}}};
  FaceMap pi = cylinder_projection(C);
  FaceMap rho = cylinder_interval_map(C, interval);
  for (int i = 0; i < src->size(); ++i) {
    int j = C.hg().at(src->id(i));
    out.pi.assign.push_back(pi(j));
    out.rho.assign.push_back(rho(j));
  }
  return out;
}

}  // namespace opetope
