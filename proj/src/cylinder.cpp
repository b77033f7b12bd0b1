#include "opetope/cylinder.hpp"

#include <algorithm>
#include <set>

namespace opetope {

namespace {

// delta gamma^(j+1)(p) for j < dim p, and {p} for j = dim p
std::vector<int> lower_side(const Hypergraph& h, int p, int j) {
  if (j == h.dim(p)) return {p};
  return h.delta(iterated_codomain(h, p, j + 1));
}

// [p, gamma(p), ..., t, 0, x_{punct-1}, ..., x_0] with t at level punct + 1
Flag lift(const Hypergraph& h, int p, int t, int punct, const Flag& x) {
  int k = h.dim(p);
  Flag f{std::vector<int>(k + 1, kAbsent)};
  for (int j = k; j > punct + 1; --j) f.e[j] = iterated_codomain(h, p, j);
  f.e[punct + 1] = t;
  f.e[punct] = kDummy;
  for (int j = 0; j < punct; ++j) f.e[j] = x.e[j];
  return f;
}

// the t in side with a <=+ t, if any
int above_in(const Hypergraph& h, const Orders& ord, int a, const std::vector<int>& side) {
  int found = -1;
  for (int t : side) {
    if (!ord.le_plus(a, t)) continue;
    if (found >= 0) throw InternalError("star: '" + h.id(a) + "' lies below two faces of one domain");
    found = t;
  }
  return found;
}

StarValue star_flag(const Opetope& P, int p, const Flag& x) {
  const auto& h = P.hg();
  const auto& ord = P.orders_in(x.top_face());
  int k = h.dim(p);
  if (x.e[k] == p) return {CylFace::of(truncate(x, k)), StarCase::Truncation};
  if (k >= 1 && ord.lt_plus(x.e[k], p)) return {CylFace::of(lift(h, p, p, k - 1, x)), StarCase::HighPFlag};
  for (int l = k - 2; l >= 0; --l) {
    int t = above_in(h, ord, x.e[l + 1], lower_side(h, p, l + 1));
    if (t >= 0) return {CylFace::of(lift(h, p, t, l, x)), StarCase::LowPFlag};
  }
  int g0 = iterated_codomain(h, p, 0);
  if (ord.le_plus(g0, x.e[0])) return {CylFace::flat(-1, p), StarCase::BottomFlat};
  if (ord.lt_plus(x.e[0], g0)) return {CylFace::flat(+1, p), StarCase::TopFlat};
  throw InternalError("star: no case applies to " + h.id(p) + " * " + flag_text(h, x));
}

StarValue star_pflag(const Opetope& P, int p, const Flag& x, bool narrow) {
  const auto& h = P.hg();
  const auto& ord = P.orders_in(x.top_face());
  int k = h.dim(p), i = x.puncture();
  if (k != i && x.e[k] == p) return {CylFace::of(truncate(x, k)), StarCase::Truncation};
  if (k > i) {
    int t = above_in(h, ord, x.e[i + 1], lower_side(h, p, i + 1));
    if (t >= 0) return {CylFace::of(lift(h, p, t, i, x)), StarCase::PunctureAt};
  }
  if (i > 0 && k >= i) {
    int t = above_in(h, ord, h.gamma(x.e[i + 1]), lower_side(h, p, i));
    if (t >= 0) return {CylFace::of(lift(h, p, t, i - 1, x)), StarCase::PunctureAbove};
  }
  for (int l = std::min(i - 2, narrow ? k - 2 : k - 1); l >= 0; --l) {
    int t = above_in(h, ord, x.e[l + 1], lower_side(h, p, l + 1));
    if (t >= 0) return {CylFace::of(lift(h, p, t, l, x)), StarCase::PunctureBelow};
  }
  int g0 = iterated_codomain(h, p, 0);
  if (i > 0) {
    if (ord.le_plus(g0, x.e[0])) return {CylFace::flat(-1, p), StarCase::BottomFlat};
    if (ord.lt_plus(x.e[0], g0)) return {CylFace::flat(+1, p), StarCase::TopFlat};
  } else {
    int g1 = h.gamma(x.e[1]);
    if (ord.lt_plus(g0, g1)) return {CylFace::flat(-1, p), StarCase::BottomFlat};
    if (ord.le_plus(g1, g0)) return {CylFace::flat(+1, p), StarCase::TopFlat};
  }
  throw InternalError("star: no case applies to " + h.id(p) + " * " + flag_text(h, x));
}

StarValue star_impl(const Opetope& P, int p, const CylFace& phi, bool narrow) {
  const auto& h = P.hg();
  int base = projection(phi);
  if (!P.in(base, p)) throw UsageError("star: '" + h.id(p) + "' is not a face of '" + h.id(base) + "'");
  switch (phi.kind) {
    case CylFace::Flat: return {CylFace::flat(phi.sign, p), StarCase::Flat};
    case CylFace::FlagFace: return star_flag(P, p, phi.flag);
    case CylFace::PFlagFace: return star_pflag(P, p, phi.flag, narrow);
  }
  throw InternalError("star: bad face kind");
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> meet(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string list_text(const Cylinder& C, const std::vector<int>& fs) {
  std::string s;
  for (int f : fs) s += (s.empty() ? "" : " ") + C.hg().id(f);
  return "{" + s + "}";
}

}  // namespace

std::string star_case_text(StarCase c) {
  switch (c) {
    case StarCase::Flat: return "flat";
    case StarCase::Truncation: return "truncation";
    case StarCase::HighPFlag: return "high-pflag";
    case StarCase::LowPFlag: return "low-pflag";
    case StarCase::PunctureAt: return "puncture-at";
    case StarCase::PunctureAbove: return "puncture-above";
    case StarCase::PunctureBelow: return "puncture-below";
    case StarCase::BottomFlat: return "bottom-flat";
    case StarCase::TopFlat: return "top-flat";
  }
  return "?";
}

StarValue star(const Opetope& P, int p, const CylFace& phi) { return star_impl(P, p, phi, false); }
StarValue star_narrow(const Opetope& P, int p, const CylFace& phi) { return star_impl(P, p, phi, true); }

CylFace star_low(const FlagTable& T, int p, const Flag& x) {
  int k = T.opetope().hg().dim(p);
  if (x.e[k] != p) return star(T.opetope(), p, CylFace::of(x)).face;
  return T.low(truncate(x, k));
}

CylFace star_high(const FlagTable& T, int p, const Flag& x) {
  int k = T.opetope().hg().dim(p);
  if (x.e[k] != p) return star(T.opetope(), p, CylFace::of(x)).face;
  return T.high(truncate(x, k));
}

int projection(const CylFace& c) { return c.kind == CylFace::Flat ? c.base : c.flag.top_face(); }

int cyl_dim(const Hypergraph& h, const CylFace& c) {
  switch (c.kind) {
    case CylFace::Flat: return h.dim(c.base);
    case CylFace::FlagFace: return c.flag.dim();
    case CylFace::PFlagFace: return c.flag.dim();
  }
  return -1;
}

std::string cyl_id(const Hypergraph& h, const CylFace& c) {
  switch (c.kind) {
    case CylFace::Flat: return std::string("flat:") + (c.sign < 0 ? "-" : "+") + ":" + h.id(c.base);
    case CylFace::FlagFace: return "flag:" + flag_text(h, c.flag);
    case CylFace::PFlagFace: return "pflag:" + flag_text(h, c.flag);
  }
  return "";
}

CylFace parse_cyl_id(const Hypergraph& h, const std::string& id) {
  if (id.rfind("flat:", 0) == 0 && id.size() > 7 && (id[5] == '-' || id[5] == '+') && id[6] == ':')
    return CylFace::flat(id[5] == '-' ? -1 : 1, h.at(id.substr(7)));
  bool fl = id.rfind("flag:", 0) == 0, pf = id.rfind("pflag:", 0) == 0;
  if (!fl && !pf) throw SchemaError("cylinder face id '" + id + "' has no flat:/flag:/pflag: tag");
  Flag f = parse_flag(h, id.substr(fl ? 5 : 6));
  if (f.is_pflag() != pf) throw SchemaError("cylinder face id '" + id + "': tag does not match the puncture");
  if (f.bottom() != 0) throw SchemaError("cylinder face id '" + id + "' must reach dimension 0");
  return CylFace::of(f);
}

Cylinder::Cylinder(const Opetope& P) : table_(std::make_shared<FlagTable>(P)) {
  const auto& h = P.hg();
  const FlagTable& T = *table_;
  for (int x = 0; x < h.size(); ++x) {
    faces_.push_back(CylFace::flat(-1, x));
    faces_.push_back(CylFace::flat(+1, x));
  }
  for (int x = 0; x < h.size(); ++x)
    for (const auto& f : T.flags_under(x)) faces_.push_back(CylFace::of(f));
  for (int x = 0; x < h.size(); ++x)
    for (const auto& f : T.pflags_under(x)) faces_.push_back(CylFace::of(f));
  auto g = std::make_shared<Hypergraph>("Cyl(" + h.name() + ")");
  for (const auto& c : faces_) {
    index_.emplace(c, g->size());
    g->add_face(cyl_id(h, c), cyl_dim(h, c));
  }
  for (int i = 0; i < int(faces_.size()); ++i) {
    const CylFace& c = faces_[i];
    CylFace gam;
    std::vector<CylFace> del;
    bool has_gamma = true;
    if (c.kind == CylFace::Flat) {
      if (h.dim(c.base) == 0) {
        has_gamma = false;
      } else {
        gam = CylFace::flat(c.sign, h.gamma(c.base));
        for (int q : h.delta(c.base)) del.push_back(CylFace::flat(c.sign, q));
      }
    } else if (c.kind == CylFace::FlagFace) {
      const Flag& f = c.flag;
      gam = T.high(f);
      del.push_back(T.low(f));
      if (f.top() >= 1) del.push_back(CylFace::of(truncate(f, f.top() - 1)));
    } else {
      const Flag& f = c.flag;
      int y = f.top_face(), k = f.top();
      gam = star(P, h.gamma(y), c).face;
      for (int q : h.delta(y)) del.push_back(star(P, q, c).face);
      if (f.puncture() == k - 1 && k >= 2) del.push_back(CylFace::of(truncate(f, k - 2)));
    }
    if (has_gamma) g->set_gamma(i, at(gam));
    std::vector<int> d;
    for (const auto& x : del) d.push_back(at(x));
    g->set_delta(i, d);
  }
  AxiomReport r = validate_structure(*g);
  if (!r.ok()) throw InternalError("cylinder of '" + h.name() + "' is malformed: " + r.summary());
  hg_ = g;
}

int Cylinder::find(const CylFace& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

int Cylinder::at(const CylFace& c) const {
  int i = find(c);
  if (i < 0) throw InternalError("not a face of the cylinder: " + cyl_id(base().hg(), c));
  return i;
}

std::vector<int> Cylinder::closure(const CylFace& c) const {
  auto m = closure_mask(*hg_, {at(c)});
  std::vector<int> out;
  for (int i = 0; i < int(m.size()); ++i)
    if (m[i]) out.push_back(i);
  return out;
}

Hypergraph Cylinder::sub_hypergraph(const std::vector<int>& faces, const std::string& name) const {
  std::vector<char> m(hg_->size(), 0);
  for (int f : faces) m[f] = 1;
  Hypergraph s = restrict_to(*hg_, m);
  s.set_name(name);
  return s;
}

std::vector<CylFace> flag_opetope_census(const FlagTable& T, const Flag& x) {
  const Opetope& P = T.opetope();
  const auto& h = P.hg();
  int n = x.top();
  int pu = x.puncture();
  std::set<CylFace> out{CylFace::of(x)};
  auto stars = [&](int l, bool skip_own) {
    for (int p : h.faces_of_dim(l))
      if (P.in(x.top_face(), p) && !(skip_own && p == x.e[l])) out.insert(star(P, p, CylFace::of(x)).face);
  };
  if (pu < 0) {
    for (int l = 1; l <= n; ++l) {
      stars(l, true);
      Flag t = truncate(x, l);
      out.insert(T.low(t));
      out.insert(T.high(t));
      out.insert(CylFace::of(truncate(x, l - 1)));
    }
    const auto& ord = P.orders_in(x.top_face());
    for (int v : h.faces_of_dim(0)) {
      if (!P.in(x.top_face(), v)) continue;
      if (ord.le_plus(v, x.e[0])) out.insert(CylFace::flat(-1, v));
      if (ord.le_plus(x.e[0], v)) out.insert(CylFace::flat(+1, v));
    }
  } else {
    for (int l = 0; l < n; ++l) {
      if (l >= pu) {
        stars(l, false);
        if (l == pu && l > 0) out.insert(CylFace::of(truncate(x, l - 1)));
      } else {
        stars(l, true);
        Flag t = truncate(x, l);
        out.insert(T.low(t));
        out.insert(T.high(t));
        if (l > 0) out.insert(CylFace::of(truncate(x, l - 1)));
      }
    }
  }
  return {out.begin(), out.end()};
}

Hypergraph flag_opetope(const Cylinder& C, const Flag& x) {
  return C.sub_hypergraph(C.closure(CylFace::of(x)), "P^" + flag_text(C.base().hg(), x));
}

AxiomReport flag_opetope_check(const Cylinder& C, const Flag& x) {
  AxiomReport r;
  const auto& h = C.base().hg();
  std::string name = flag_text(h, x);
  auto closed = C.closure(CylFace::of(x));
  std::vector<int> census;
  for (const auto& c : flag_opetope_census(C.table(), x)) {
    int i = C.find(c);
    if (i < 0) {
      r.add("census-face", {name}, cyl_id(h, c) + " is not a cylinder face");
      continue;
    }
    census.push_back(i);
  }
  census = sorted_unique(census);
  if (census != closed) {
    std::vector<int> extra, missing;
    std::set_difference(closed.begin(), closed.end(), census.begin(), census.end(), std::back_inserter(extra));
    std::set_difference(census.begin(), census.end(), closed.begin(), closed.end(), std::back_inserter(missing));
    r.add("closure-census", {name}, "closure only " + list_text(C, extra) + ", census only " + list_text(C, missing));
  }
  Hypergraph s = C.sub_hypergraph(closed, "P^" + name);
  AxiomReport op = is_opetope(s);
  for (auto v : op.violations) r.add("opetope:" + v.axiom, v.faces, v.witness);
  int want = x.is_pflag() ? x.top() : x.top() + 1;
  if (s.dim() != want) r.add("dimension", {name}, "dimension " + std::to_string(s.dim()));
  return r;
}

AxiomReport unique_projection_check(const Cylinder& C, const Flag& x) {
  AxiomReport r;
  const Opetope& P = C.base();
  const auto& h = P.hg();
  auto faces = C.closure(CylFace::of(x));
  for (int p = 0; p < h.size(); ++p) {
    if (!P.in(x.top_face(), p) || x.e[h.dim(p)] == p) continue;
    std::vector<int> over;
    for (int f : faces)
      if (C.project(f) == p) over.push_back(f);
    if (over.size() != 1) {
      r.add("unique-projection", {flag_text(h, x), h.id(p)}, std::to_string(over.size()) + " faces " + list_text(C, over));
      continue;
    }
    CylFace s = star(P, p, CylFace::of(x)).face;
    if (C.face(over[0]) != s) r.add("projection-is-star", {flag_text(h, x), h.id(p)}, cyl_id(h, s));
  }
  return r;
}

AxiomReport intersection_check(const Cylinder& C, const Flag& x) {
  AxiomReport r;
  const Opetope& P = C.base();
  const auto& h = P.hg();
  const auto& order = C.table().maximal_flags();
  int pos = C.table().position(x);
  if (pos + 1 >= int(order.size())) throw UsageError("intersection_check: " + flag_text(h, x) + " is terminal");
  const Flag& nx = order[pos + 1];
  auto b = C.closure(CylFace::of(nx));
  auto both = meet(C.closure(CylFace::of(x)), b);
  auto want = C.closure(CylFace::of(intersect_consecutive(x, nx)));
  if (both != want)
    r.add("consecutive-intersection", {flag_text(h, x), flag_text(h, nx)},
          list_text(C, both) + " vs " + list_text(C, want));
  for (int j = 0; j < pos; ++j) {
    auto m = meet(C.closure(CylFace::of(order[j])), b);
    if (!std::includes(both.begin(), both.end(), m.begin(), m.end()))
      r.add("earlier-intersection", {flag_text(h, order[j]), flag_text(h, nx)}, "escapes the consecutive intersection");
  }
  return r;
}

StraightnessCertificate straightness_certificate(const Cylinder& C) {
  StraightnessCertificate cert;
  const auto& h = C.base().hg();
  const auto& order = C.table().maximal_flags();
  std::vector<int> covered;
  for (size_t j = 0; j < order.size(); ++j) {
    auto faces = C.closure(CylFace::of(order[j]));
    StraightnessStep st{order[j], {}, 0};
    if (j > 0) {
      st.meet = intersect_consecutive(order[j - 1], order[j]);
      auto m = meet(covered, faces);
      auto want = C.closure(CylFace::of(st.meet));
      if (m != want)
        cert.report.add("step-intersection", {flag_text(h, order[j])}, list_text(C, m) + " vs " + list_text(C, want));
    }
    std::vector<int> merged;
    std::set_union(covered.begin(), covered.end(), faces.begin(), faces.end(), std::back_inserter(merged));
    st.faces_added = int(merged.size() - covered.size());
    covered.swap(merged);
    cert.steps.push_back(st);
  }
  cert.total_faces = int(covered.size());
  if (cert.total_faces != C.hg().size())
    cert.report.add("union-covers", {}, std::to_string(cert.total_faces) + " of " + std::to_string(C.hg().size()));
  return cert;
}

FaceMap cyl_map(const FaceMap& f, const Cylinder& CP, const Cylinder& CQ) {
  if (f.src().size() != CP.base().hg().size() || f.tgt().size() != CQ.base().hg().size())
    throw UsageError("cyl_map: cylinders do not match the map");
  FaceMap out{CP.hg_ptr(), CQ.hg_ptr(), std::vector<int>(CP.hg().size(), -1)};
  for (int i = 0; i < CP.hg().size(); ++i) {
    CylFace c = CP.face(i);
    if (c.kind == CylFace::Flat) {
      c.base = f(c.base);
    } else {
      for (int& v : c.flag.e)
        if (v >= 0) v = f(v);
    }
    int j = CQ.find(c);
    if (j < 0)
      throw ValidationError("cyl_map: image of " + CP.hg().id(i) + " is not a face of " + CQ.hg().name());
    out.assign[i] = j;
  }
  return out;
}

AxiomReport iteration_suite(const Cylinder& C) {
  AxiomReport r;
  const Opetope& P = C.base();
  const auto& h = P.hg();
  const FlagTable& T = C.table();
  const auto& ord = P.orders();
  for (int i = 0; i < C.hg().size(); ++i) {
    const CylFace& phi = C.face(i);
    int base = projection(phi);
    for (int p = 0; p < h.size(); ++p) {
      if (!P.in(base, p)) continue;
      StarValue sv = star(P, p, phi);
      if (projection(sv.face) != p) r.add("projection", {C.hg().id(i), h.id(p)}, cyl_id(h, sv.face));
      if (C.find(sv.face) < 0) r.add("star-in-cylinder", {C.hg().id(i), h.id(p)}, cyl_id(h, sv.face));
    }
    if (phi.kind == CylFace::Flat || base != P.top()) continue;
    const Flag& x = phi.flag;
    for (int p = 0; p < h.size(); ++p) {
      int m = h.dim(p);
      StarValue sp = star(P, p, phi);
      bool flat = sp.face.kind == CylFace::Flat;
      for (int q = 0; q < h.size(); ++q) {
        if (!P.in(p, q)) continue;
        int k = h.dim(q);
        std::vector<std::string> where{C.hg().id(i), h.id(p), h.id(q)};
        CylFace twice = star(P, q, sp.face).face;
        if (q != x.e[k] || p == x.e[m]) {
          if (twice != star(P, q, phi).face) r.add("iteration-1", where, cyl_id(h, twice));
          if (flat && p != x.e[m]) {
            CylFace once = star(P, q, phi).face;
            if (once != CylFace::flat(sp.face.sign, q)) r.add("flat-star", where, cyl_id(h, once));
          }
          continue;
        }
        if (flat) {
          if (twice != CylFace::flat(sp.face.sign, q)) r.add("iteration-2", where, cyl_id(h, twice));
          continue;
        }
        if (x.is_pflag()) continue;
        const Flag& z = sp.face.flag;
        int l = z.puncture();
        int t = z.e[l + 1];
        bool shape = true;
        for (int j = m; j >= l + 2; --j) shape = shape && z.e[j] == iterated_codomain(h, p, j);
        auto side = lower_side(h, p, l + 1);
        shape = shape && std::find(side.begin(), side.end(), t) != side.end();
        if (l < k) shape = shape && t == x.e[l + 1];
        if (!shape) r.add("iteration-3a", where, cyl_id(h, sp.face));
        Flag tr = truncate(x, k);
        CylFace want;
        if (k < l) want = CylFace::of(tr);
        else if ((k == l && h.gamma(t) == x.e[k]) || k == l + 1) want = T.high(tr);
        else if ((k == l && !ord.le_plus(h.gamma(t), x.e[k])) || k >= l + 2) want = T.low(tr);
        else {
          r.add("iteration-3-uncovered", where, cyl_id(h, sp.face));
          continue;
        }
        if (twice != want) r.add("iteration-3b", where, cyl_id(h, twice) + " vs " + cyl_id(h, want));
      }
    }
  }
  return r;
}

AxiomReport monotone_suite(const FlagTable& T) {
  AxiomReport r;
  const Opetope& P = T.opetope();
  const auto& h = P.hg();
  const auto& fl = T.maximal_flags();
  for (int p = 0; p < h.size(); ++p) {
    if (p == P.top()) continue;
    auto pos = [&](const CylFace& c) {
      try {
        return T.chain_position(p, c);
      } catch (const UsageError&) {
        r.add("in-chain", {h.id(p)}, cyl_text(h, c));
        return -1;
      }
    };
    for (size_t i = 0; i + 1 < fl.size(); ++i) {
      int l0 = pos(star_low(T, p, fl[i])), l1 = pos(star_low(T, p, fl[i + 1]));
      int h0 = pos(star_high(T, p, fl[i])), h1 = pos(star_high(T, p, fl[i + 1]));
      std::vector<std::string> where{h.id(p), flag_text(h, fl[i])};
      if (l0 > l1) r.add("monotone-low", where, "");
      if (h0 > h1) r.add("monotone-high", where, "");
      // when both flags pass through p the lift of their meet is a flag, outside the chain
      CylFace lifted = star(P, p, CylFace::of(intersect_consecutive(fl[i], fl[i + 1]))).face;
      if (lifted.kind == CylFace::FlagFace) continue;
      int mid = pos(lifted);
      if (!(l0 <= mid && mid <= l1)) r.add("sandwich-low", where, "");
      if (!(h0 <= mid && mid <= h1)) r.add("sandwich-high", where, "");
    }
  }
  return r;
}

AxiomReport dual_star_suite(const Opetope& P) {
  AxiomReport r;
  const auto& h = P.hg();
  Opetope Q(dual(h));
  for (const auto& x : sorted_flags(P, {P.top()}))
    for (int p = 0; p < h.size(); ++p) {
      CylFace a = star(P, p, CylFace::of(x)).face;
      CylFace b = star(Q, p, CylFace::of(x)).face;
      if (a.kind == CylFace::Flat) a.sign = -a.sign;
      if (a != b) r.add("dual-star", {h.id(p), flag_text(h, x)}, cyl_text(h, a) + " vs " + cyl_text(h, b));
    }
  return r;
}

std::vector<std::string> star_bound_divergences(const Cylinder& C) {
  std::vector<std::string> out;
  const Opetope& P = C.base();
  const auto& h = P.hg();
  for (const auto& phi : C.faces()) {
    if (phi.kind != CylFace::PFlagFace) continue;
    for (int p = 0; p < h.size(); ++p) {
      if (!P.in(projection(phi), p)) continue;
      CylFace a = star(P, p, phi).face, b = star_narrow(P, p, phi).face;
      if (a != b) out.push_back(h.id(p) + " * " + flag_text(h, phi.flag) + ": " + cyl_text(h, a) + " / " + cyl_text(h, b));
    }
  }
  return out;
}

}  // namespace opetope
