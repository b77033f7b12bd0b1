#include "opetope/flags.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace opetope {

namespace {

// the extra (-1)-face t with gamma(v) = t for every vertex v
constexpr int kT = -3;

bool in_delta(const Hypergraph& h, int a, int x) {
  const auto& d = h.delta(a);
  return std::binary_search(d.begin(), d.end(), x);
}

bool in_boundary(const Hypergraph& h, int a, int x) {
  if (a == kT) return false;
  if (x == kT) return h.dim(a) == 0;
  return h.dim(a) > 0 && (h.gamma(a) == x || in_delta(h, a, x));
}

// +1 if lower = gamma(upper), -1 if lower in delta(upper), 0 otherwise
int step(const Hypergraph& h, int upper, int lower) {
  if (lower == kT) return h.dim(upper) == 0 ? 1 : 0;
  if (h.dim(upper) == 0) return 0;
  if (h.gamma(upper) == lower) return 1;
  return in_delta(h, upper, lower) ? -1 : 0;
}

bool present(int v) { return v >= 0; }

int unique_of(const std::vector<int>& cands, const Hypergraph& h, const std::string& what) {
  if (cands.size() != 1)
    throw InternalError(what + ": expected one candidate, found " + std::to_string(cands.size()) +
                        " {" + [&] {
                          std::string s;
                          for (int c : cands) s += (s.empty() ? "" : ",") + h.id(c);
                          return s;
                        }() + "}");
  return cands.front();
}

int base_level(const Hypergraph& h, const FlagSet& s) { return s.over < 0 ? -1 : h.dim(s.over); }

// the face below level k, or t when k is the bottom of a flag set over 0
int below(const Flag& x, int k) { return k == 0 ? kT : x.e[k - 1]; }

// pencil order over x (x may be t) in P[within]
bool less_at(const Opetope& P, int within, int x, int a, int b) {
  const auto& h = P.hg();
  const auto& ord = P.orders_in(within);
  if (x == kT) return ord.lt_plus(b, a);
  bool da = in_delta(h, a, x), db = in_delta(h, b, x);
  bool ga = h.gamma(a) == x, gb = h.gamma(b) == x;
  if (gb && da) return true;
  if (da && db) return ord.lt_plus(a, b);
  if (ga && gb) return ord.lt_plus(b, a);
  return false;
}

void check_member(const Opetope& P, const FlagSet& s) {
  const auto& h = P.hg();
  if (s.top < 0 || s.top >= h.size()) throw UsageError("flag set: bad top face");
  if (s.over >= 0 && !P.in(s.top, s.over))
    throw UsageError("flag set: '" + h.id(s.over) + "' is not a face of P[" + h.id(s.top) + "]");
}

}  // namespace

int Flag::bottom() const {
  for (int i = 0; i < int(e.size()); ++i)
    if (e[i] != kAbsent) return i;
  return int(e.size());
}

int Flag::puncture() const {
  for (int i = 0; i < int(e.size()); ++i)
    if (e[i] == kDummy) return i;
  return -1;
}

int Flag::dim() const {
  return int(std::count_if(e.begin(), e.end(), [](int v) { return v >= 0; }));
}

std::string flag_text(const Hypergraph& h, const Flag& f) {
  std::string s = "[";
  for (int i = f.top(); i >= f.bottom(); --i) {
    if (i != f.top()) s += ",";
    s += f.e[i] == kDummy ? "0" : h.id(f.e[i]);
  }
  return s + "]";
}

std::string cyl_text(const Hypergraph& h, const CylFace& c) {
  if (c.kind == CylFace::Flat) return (c.sign < 0 ? "-" : "+") + h.id(c.base);
  return flag_text(h, c.flag);
}

Flag parse_flag(const Hypergraph& h, const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw SchemaError("flag literal '" + text + "' must be [..]");
  std::vector<std::string> toks;
  std::stringstream ss(t.substr(1, t.size() - 2));
  for (std::string tok; std::getline(ss, tok, ',');) toks.push_back(tok);
  if (toks.empty() || toks.front() == "0") throw SchemaError("flag literal '" + text + "' needs a top face");
  int top = h.dim(h.at(toks.front()));
  int bottom = top - int(toks.size()) + 1;
  if (bottom < 0) throw SchemaError("flag literal '" + text + "' is longer than its top dimension");
  Flag f{std::vector<int>(top + 1, kAbsent)};
  for (int j = 0; j < int(toks.size()); ++j) {
    int lvl = top - j;
    if (toks[j] == "0") {
      f.e[lvl] = kDummy;
      continue;
    }
    int x = h.at(toks[j]);
    if (h.dim(x) != lvl) throw SchemaError("flag literal '" + text + "': '" + toks[j] + "' is not at level " + std::to_string(lvl));
    f.e[lvl] = x;
  }
  if (!is_valid_flag(h, f)) throw SchemaError("flag literal '" + text + "' is not a chain of faces");
  return f;
}

bool is_valid_flag(const Hypergraph& h, const Flag& f) {
  if (f.e.empty()) return false;
  int b = f.bottom(), k = f.top();
  if (b > k || f.e[k] < 0) return false;
  int dummies = 0;
  for (int i = b; i <= k; ++i) {
    int v = f.e[i];
    if (v == kDummy) {
      if (++dummies > 1) return false;
      continue;
    }
    if (v < 0 || v >= h.size() || h.dim(v) != i) return false;
  }
  for (int i = b; i < k; ++i) {
    int lo = f.e[i], up = f.e[i + 1];
    if (present(lo) && present(up) && !in_boundary(h, up, lo)) return false;
    if (lo == kDummy) {
      // some face fills the puncture
      bool ok = false;
      for (int y : h.faces_of_dim(i)) {
        if (!in_boundary(h, up, y)) continue;
        if (i > b && !in_boundary(h, y, f.e[i - 1])) continue;
        ok = true;
        break;
      }
      if (!ok) return false;
    }
  }
  return true;
}

int sign(const Hypergraph& h, const Flag& f) {
  if (f.is_pflag()) throw UsageError("sign of a punctured flag");
  int s = 1;
  for (int i = f.bottom(); i < f.top(); ++i) {
    int st = step(h, f.e[i + 1], f.e[i]);
    if (st == 0) throw UsageError("sign: not a flag " + flag_text(h, f));
    s *= st;
  }
  return s;
}

namespace {
// sign of [x_{k-1}, ..., x_bottom]; +1 when empty
int sign_below(const Hypergraph& h, const Flag& x, int k) {
  if (k - 1 < x.bottom()) return 1;
  return sign(h, truncate(x, k - 1));
}
}  // namespace

FaceType face_type(const Opetope& P, int top, int x) {
  const auto& h = P.hg();
  if (!P.in(top, x)) throw UsageError("face_type: '" + h.id(x) + "' is not in P[" + h.id(top) + "]");
  int l = h.dim(x), n = h.dim(top);
  if (x == iterated_codomain(h, top, l)) return FaceType::Gamma;
  if (l < n && in_delta(h, iterated_codomain(h, top, l + 1), x)) return FaceType::Delta;
  if (l + 2 <= n) {
    auto io = iota_faces(h, iterated_codomain(h, top, l + 2));
    if (std::binary_search(io.begin(), io.end(), x)) return FaceType::Iota;
  }
  throw InternalError("face_type: '" + h.id(x) + "' has no type in P[" + h.id(top) + "]");
}

bool pencil_less(const Opetope& P, int within, int x, int a, int b) { return less_at(P, within, x, a, b); }

std::vector<int> pencil(const Opetope& P, int x, int within) {
  const auto& h = P.hg();
  if (h.dim(x) >= h.dim(within)) throw UsageError("pencil over '" + h.id(x) + "' is empty in P[" + h.id(within) + "]");
  std::vector<int> out;
  for (int a : h.faces_of_dim(h.dim(x) + 1))
    if (P.in(within, a) && in_boundary(h, a, x)) out.push_back(a);
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j) {
      bool ab = less_at(P, within, x, out[i], out[j]), ba = less_at(P, within, x, out[j], out[i]);
      if (ab == ba)
        throw InternalError("pencil over '" + h.id(x) + "' not linear at " + h.id(out[i]) + ", " + h.id(out[j]));
    }
  std::sort(out.begin(), out.end(), [&](int a, int b) { return less_at(P, within, x, a, b); });
  return out;
}

bool flag_less(const Opetope& P, const FlagSet& s, const Flag& x, const Flag& y) {
  const auto& h = P.hg();
  if (x.e.size() != y.e.size()) throw UsageError("flag_less: flags from different sets");
  int k = -1;
  for (int i = x.bottom(); i <= x.top(); ++i)
    if (x.e[i] != y.e[i]) {
      k = i;
      break;
    }
  if (k < 0) return false;
  int lower = below(x, k);
  if (sign_below(h, x, k) > 0) return less_at(P, s.top, lower, x.e[k], y.e[k]);
  return less_at(P, s.top, lower, y.e[k], x.e[k]);
}

std::vector<Flag> enumerate_flag_set(const Opetope& P, const FlagSet& s) {
  check_member(P, s);
  const auto& h = P.hg();
  int n = h.dim(s.top), l = std::max(0, base_level(h, s));
  std::vector<Flag> out;
  Flag cur{std::vector<int>(n + 1, kAbsent)};
  auto rec = [&](auto&& self, int lvl) -> void {
    if (lvl == l) {
      if (s.over < 0 || cur.e[l] == s.over) out.push_back(cur);
      return;
    }
    for (int y : boundary(h, cur.e[lvl])) {
      if (s.over >= 0 && !P.in(y, s.over)) continue;
      cur.e[lvl - 1] = y;
      self(self, lvl - 1);
    }
    cur.e[lvl - 1] = kAbsent;
  };
  cur.e[n] = s.top;
  rec(rec, n);
  return out;
}

std::vector<Flag> sorted_flags(const Opetope& P, const FlagSet& s) {
  auto fl = enumerate_flag_set(P, s);
  int N = int(fl.size());
  std::vector<int> rank(N, 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      bool ij = flag_less(P, s, fl[i], fl[j]), ji = flag_less(P, s, fl[j], fl[i]);
      if (ij == ji)
        throw InternalError("flag order not total at " + flag_text(P.hg(), fl[i]) + ", " + flag_text(P.hg(), fl[j]));
      if (ji) ++rank[i];
    }
  std::vector<Flag> out(N);
  for (int i = 0; i < N; ++i) out[rank[i]] = fl[i];
  return out;
}

namespace {

Flag gamma_prefix(const Hypergraph& h, int top, int from) {
  int n = h.dim(top);
  Flag f{std::vector<int>(n + 1, kAbsent)};
  for (int j = n; j >= from; --j) f.e[j] = iterated_codomain(h, top, j);
  return f;
}

// entries of delta(g) whose gamma is x (want_gamma) or whose delta contains x
int pick_delta(const Hypergraph& h, int g, int x, bool want_gamma) {
  std::vector<int> c;
  for (int y : h.delta(g))
    if (want_gamma ? h.gamma(y) == x : in_delta(h, y, x)) c.push_back(y);
  return unique_of(c, h, "flag endpoint under '" + h.id(g) + "'");
}

Flag endpoint(const Opetope& P, const FlagSet& s, bool initial) {
  check_member(P, s);
  const auto& h = P.hg();
  int n = h.dim(s.top);
  if (s.over < 0) {
    if (initial || n == 0) return gamma_prefix(h, s.top, 0);
    Flag f = gamma_prefix(h, s.top, 1);
    f.e[0] = unique_of(h.delta(f.e[1]), h, "terminal vertex");
    return f;
  }
  int l = h.dim(s.over);
  if (l >= n - 1) {
    auto all = enumerate_flag_set(P, s);
    if (all.size() != 1) throw InternalError("flag set over a facet has several flags");
    return all.front();
  }
  Flag f = gamma_prefix(h, s.top, l + 2);
  int g = f.e[l + 2];
  f.e[l] = s.over;
  switch (face_type(P, s.top, s.over)) {
    case FaceType::Gamma:
      f.e[l + 1] = initial ? iterated_codomain(h, s.top, l + 1) : pick_delta(h, g, s.over, true);
      break;
    case FaceType::Iota:
      f.e[l + 1] = pick_delta(h, g, s.over, !initial);
      break;
    case FaceType::Delta:
      f.e[l + 1] = initial ? pick_delta(h, g, s.over, false) : iterated_codomain(h, s.top, l + 1);
      break;
  }
  return f;
}

}  // namespace

Flag initial_flag(const Opetope& P, const FlagSet& s) { return endpoint(P, s, true); }
Flag terminal_flag(const Opetope& P, const FlagSet& s) { return endpoint(P, s, false); }

int low_level(const Opetope& P, const FlagSet& s, const Flag& x) {
  const auto& h = P.hg();
  int base = base_level(h, s), k = x.top();
  for (int i = k - 2; i > base; --i)
    if (in_delta(h, x.e[i + 2], x.e[i + 1])) return i;
  return -1;
}

Flag neighbour(const Opetope& P, const FlagSet& s, const Flag& x, int level) {
  const auto& h = P.hg();
  if (level <= base_level(h, s) || level >= x.top())
    throw UsageError("neighbour: level " + std::to_string(level) + " is not free in " + flag_text(h, x));
  std::vector<int> c;
  for (int y : boundary(h, x.e[level + 1])) {
    if (y == x.e[level]) continue;
    if (level > 0 && !in_boundary(h, y, x.e[level - 1])) continue;
    c.push_back(y);
  }
  Flag out = x;
  out.e[level] = unique_of(c, h, "neighbour of " + flag_text(h, x) + " at level " + std::to_string(level));
  return out;
}

Flag next(const Opetope& P, const FlagSet& s, const Flag& x) {
  const auto& h = P.hg();
  int k = x.top();
  int base = s.over < 0 ? -1 : h.dim(s.over);
  if (sign(h, x) > 0) {
    if (k - 1 <= base) throw UsageError("terminal flag " + flag_text(h, x));
    return neighbour(P, s, x, k - 1);
  }
  int ll = low_level(P, s, x);
  if (ll < 0) throw UsageError("terminal flag " + flag_text(h, x));
  return neighbour(P, s, x, ll);
}

std::string kind_text(SuccessorKind k) {
  switch (k) {
    case SuccessorKind::Delta: return "delta";
    case SuccessorKind::DeltaGamma: return "delta-gamma";
    case SuccessorKind::Gamma: return "gamma";
    case SuccessorKind::InvDelta: return "inv-delta";
    case SuccessorKind::InvGammaDelta: return "inv-gamma-delta";
    case SuccessorKind::InvGamma: return "inv-gamma";
  }
  return "?";
}

Successor successor_kind(const Opetope& P, const Flag& x, const Flag& y) {
  const auto& h = P.hg();
  if (x.e.size() != y.e.size()) throw UsageError("successor_kind: flags of different length");
  int k = -1;
  for (int i = x.bottom(); i <= x.top(); ++i) {
    if (x.e[i] == y.e[i]) continue;
    if (k >= 0) throw UsageError("successor_kind: flags differ at more than one level");
    k = i;
  }
  if (k < 0 || k == x.top()) throw UsageError("successor_kind: flags are not neighbours");
  int up = x.e[k + 1], lo = below(x, k);
  // 'g' / 'd' for the upper and lower incidences of the old and the new face
  auto rel = [&](int upper, int lower) { return step(h, upper, lower) > 0 ? 'g' : 'd'; };
  std::string pat{rel(up, x.e[k]), rel(up, y.e[k]), rel(x.e[k], lo), rel(y.e[k], lo)};
  int sg = sign_below(h, x, k);
  SuccessorKind kind;
  if (sg > 0 && pat == "dgdd") kind = SuccessorKind::Delta;
  else if (sg > 0 && pat == "dddg") kind = SuccessorKind::DeltaGamma;
  else if (sg > 0 && pat == "gdgg") kind = SuccessorKind::Gamma;
  else if (sg < 0 && pat == "gddd") kind = SuccessorKind::InvDelta;
  else if (sg < 0 && pat == "ddgd") kind = SuccessorKind::InvGammaDelta;
  else if (sg < 0 && pat == "dggg") kind = SuccessorKind::InvGamma;
  else
    throw InternalError("successor_kind: unclassified step " + flag_text(h, x) + " -> " + flag_text(h, y) +
                        " pattern " + pat);
  return {kind, k, k == x.top() - 1};
}

Flag truncate(const Flag& x, int k) {
  if (k < x.bottom() || k > x.top()) throw UsageError("truncate: level out of range");
  return Flag{std::vector<int>(x.e.begin(), x.e.begin() + k + 1)};
}

Flag extend(const Hypergraph& h, const Flag& x, int face) {
  int b = x.bottom();
  if (b == 0 || h.dim(face) != b - 1 || !in_boundary(h, x.e[b], face))
    throw UsageError("extend: '" + h.id(face) + "' does not extend " + flag_text(h, x));
  Flag out = x;
  out.e[b - 1] = face;
  return out;
}

Flag puncture(const Flag& x, int i) {
  if (i < x.bottom() || i >= x.top()) throw UsageError("puncture: level out of range");
  Flag out = x;
  out.e[i] = kDummy;
  return out;
}

Flag intersect_consecutive(const Flag& x, const Flag& y) {
  if (x.e.size() != y.e.size()) throw UsageError("intersect: flags of different length");
  int k = -1;
  for (int i = 0; i < int(x.e.size()); ++i) {
    if (x.e[i] == y.e[i]) continue;
    if (k >= 0) throw UsageError("intersect: flags differ at more than one level");
    k = i;
  }
  if (k < 0) throw UsageError("intersect: equal flags");
  return puncture(x, k);
}

FlagTable::FlagTable(const Opetope& P) : P_(P) {
  const auto& h = P.hg();
  int N = h.size();
  flags_.resize(N);
  chains_.resize(N);
  chain_pos_.resize(N);
  for (int x = 0; x < N; ++x) {
    flags_[x] = sorted_flags(P, {x});
    for (int i = 0; i < int(flags_[x].size()); ++i) pos_[flags_[x][i]] = i;
  }
  for (int x = 0; x < N; ++x) {
    std::map<CylFace, int> ids;
    std::vector<CylFace> nodes;
    auto id = [&](const CylFace& c) {
      auto [it, fresh] = ids.emplace(c, int(nodes.size()));
      if (fresh) nodes.push_back(c);
      return it->second;
    };
    std::vector<std::pair<int, int>> gens;
    for (const Flag& f : flags_[x]) {
      int lo = id(low(f)), hi = id(high(f));
      if (sign(h, f) > 0) gens.emplace_back(lo, hi);
      else gens.emplace_back(hi, lo);
    }
    int M = int(nodes.size());
    BitMatrix rel(M);
    for (auto [a, b] : gens) rel.set(a, b);
    rel.close();
    std::vector<int> rank(M, 0);
    for (int a = 0; a < M; ++a) {
      if (rel.get(a, a)) throw InternalError("p-flag order of '" + h.id(x) + "' has a cycle");
      for (int b = 0; b < M; ++b) {
        if (a == b) continue;
        if (!rel.get(a, b) && !rel.get(b, a))
          throw InternalError("p-flag order of '" + h.id(x) + "' not linear at " + cyl_text(h, nodes[a]) + ", " +
                              cyl_text(h, nodes[b]));
        if (rel.get(b, a)) ++rank[a];
      }
    }
    chains_[x].resize(M);
    for (int a = 0; a < M; ++a) chains_[x][rank[a]] = nodes[a];
    for (int a = 0; a < M; ++a) chain_pos_[x][chains_[x][a]] = a;
  }
}

int FlagTable::position(const Flag& f) const {
  auto it = pos_.find(f);
  if (it == pos_.end()) throw UsageError("not a flag of the opetope: " + flag_text(P_.hg(), f));
  return it->second;
}

CylFace FlagTable::high(const Flag& f) const {
  if (f.top() == 0) return CylFace::flat(+1, f.e[0]);
  return CylFace::of(puncture(f, f.top() - 1));
}

CylFace FlagTable::low(const Flag& f) const {
  int x = f.top_face();
  if (is_initial(f)) return CylFace::flat(-1, x);
  if (is_terminal(f)) return CylFace::flat(+1, x);
  int ll = low_level(P_, {x}, f);
  if (ll < 0) throw InternalError("low level undefined on inner flag " + flag_text(P_.hg(), f));
  return CylFace::of(puncture(f, ll));
}

int FlagTable::chain_position(int x, const CylFace& z) const {
  auto it = chain_pos_[x].find(z);
  if (it == chain_pos_[x].end()) throw UsageError("not a p-flag of '" + P_.hg().id(x) + "'");
  return it->second;
}

std::vector<Flag> FlagTable::pflags_under(int x) const {
  std::vector<Flag> out;
  for (const auto& c : chains_[x])
    if (c.kind != CylFace::Flat) out.push_back(c.flag);
  return out;
}

AxiomReport dual_flag_suite(const Opetope& P) {
  AxiomReport r;
  const auto& h = P.hg();
  Opetope Q(dual(h));
  const auto& g = Q.hg();
  FlagTable tp(P), tq(Q);
  for (int x = 0; x < h.size(); ++x) {
    auto fp = tp.flags_under(x), fq = tq.flags_under(x);
    auto sp = fp, sq = fq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) {
      r.add("same-flags", {h.id(x)}, "flag sets differ");
      continue;
    }
    auto pp = tp.pflags_under(x), pq = tq.pflags_under(x);
    std::sort(pp.begin(), pp.end());
    std::sort(pq.begin(), pq.end());
    if (pp != pq) r.add("same-pflags", {h.id(x)}, "p-flag sets differ");
    for (const Flag& f : fp) {
      int want = f.top() >= 1 ? -sign(h, f) : sign(h, f);
      if (sign(g, f) != want) r.add("sign-negation", {h.id(x)}, flag_text(h, f));
    }
    if (std::vector<Flag>(fp.rbegin(), fp.rend()) != fq) r.add("flag-order-reversed", {h.id(x)}, "");
    auto cp = tp.pflag_chain(x), cq = tq.pflag_chain(x);
    std::reverse(cp.begin(), cp.end());
    for (auto& c : cp)
      if (c.kind == CylFace::Flat) c.sign = -c.sign;
    if (cp != cq) r.add("pflag-order-reversed", {h.id(x)}, "");
    if (x != P.top()) {
      auto lp = pencil(P, x, P.top()), lq = pencil(Q, x, Q.top());
      if (h.dim(x) == 0) std::reverse(lp.begin(), lp.end());
      if (lp != lq) r.add(h.dim(x) == 0 ? "vertex-pencil-reversed" : "pencil-preserved", {h.id(x)}, "");
    }
  }
  return r;
}

}  // namespace opetope
