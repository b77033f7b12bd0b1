#include "opetope/fixtures.hpp"

namespace opetope::fixtures {

Hypergraph point() {
  Hypergraph h("PT");
  h.add("v", 0);
  return h;
}

Hypergraph interval() {
  Hypergraph h("I");
  h.add("s", 0);
  h.add("t", 0);
  h.add("a", 1, "t", {"s"});
  return h;
}

Hypergraph globe() {
  Hypergraph h("G1");
  h.add("s", 0);
  h.add("t", 0);
  h.add("a", 1, "t", {"s"});
  h.add("b", 1, "t", {"s"});
  h.add("m", 2, "b", {"a"});
  return h;
}

Hypergraph triangle() {
  Hypergraph h("G2");
  h.add("v0", 0);
  h.add("v1", 0);
  h.add("v2", 0);
  h.add("a01", 1, "v1", {"v0"});
  h.add("a12", 1, "v2", {"v1"});
  h.add("a02", 1, "v2", {"v0"});
  h.add("m", 2, "a02", {"a01", "a12"});
  return h;
}

Hypergraph tetra() {
  Hypergraph h("O3");
  for (const char* v : {"v0", "v1", "v2", "v3"}) h.add(v, 0);
  h.add("a01", 1, "v1", {"v0"});
  h.add("a12", 1, "v2", {"v1"});
  h.add("a23", 1, "v3", {"v2"});
  h.add("a02", 1, "v2", {"v0"});
  h.add("a03", 1, "v3", {"v0"});
  h.add("p", 2, "a02", {"a01", "a12"});
  h.add("q", 2, "a03", {"a02", "a23"});
  h.add("r", 2, "a03", {"a01", "a12", "a23"});
  h.add("c", 3, "r", {"p", "q"});
  return h;
}

Hypergraph by_name(const std::string& name) {
  const std::string op = "^op";
  if (name.size() > op.size() && name.compare(name.size() - op.size(), op.size(), op) == 0)
    return dual(by_name(name.substr(0, name.size() - op.size())));
  if (name == "PT") return point();
  if (name == "I") return interval();
  if (name == "G1") return globe();
  if (name == "G2") return triangle();
  if (name == "O3") return tetra();
  throw UsageError("unknown fixture '" + name + "'");
}

static std::shared_ptr<const Hypergraph> shared(Hypergraph h) {
  return std::make_shared<const Hypergraph>(std::move(h));
}

IotaMap collapse_a01_to_globe() {
  return make_map(shared(triangle()), shared(globe()),
                  {{"v0", "s"}, {"v1", "s"}, {"v2", "t"}, {"a01", "s"}, {"a12", "a"}, {"a02", "b"}, {"m", "m"}});
}

IotaMap collapse_a12_to_globe() {
  return make_map(shared(triangle()), shared(globe()),
                  {{"v0", "s"}, {"v1", "t"}, {"v2", "t"}, {"a01", "a"}, {"a12", "t"}, {"a02", "b"}, {"m", "m"}});
}

IotaMap collapse_a23_to_triangle() {
  return make_map(shared(tetra()), shared(triangle()),
                  {{"v0", "v0"}, {"v1", "v1"}, {"v2", "v2"}, {"v3", "v2"}, {"a01", "a01"}, {"a12", "a12"},
                   {"a23", "v2"}, {"a02", "a02"}, {"a03", "a02"}, {"p", "m"}, {"q", "a02"}, {"r", "m"},
                   {"c", "m"}});
}

std::vector<NamedMap> map_catalog() {
  std::vector<NamedMap> out;
  auto iv = shared(interval());
  auto pt = shared(point());
  std::vector<std::string> all;
  for (const auto& n : names()) {
    all.push_back(n);
    if (n != "PT") all.push_back(n + "^op");
  }
  for (const auto& n : all) {
    Opetope P(by_name(n));
    out.push_back({"id_" + n, identity_map(P.hg_ptr())});
    out.push_back({"terminal_" + n, IotaMap{P.hg_ptr(), pt, std::vector<int>(P.hg().size(), 0)}});
    if (P.dim() >= 1)
      for (int p : interval_map_generators(P))
        out.push_back({"h_" + P.hg().id(p) + ":" + n + "->I", interval_map(P, p, iv)});
  }
  out.push_back({"collapse_a01:G2->G1", collapse_a01_to_globe()});
  out.push_back({"collapse_a12:G2->G1", collapse_a12_to_globe()});
  out.push_back({"collapse_a23:O3->G2", collapse_a23_to_triangle()});
  return out;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"PT", "I", "G1", "G2", "O3"};
  return n;
}

}  // namespace opetope::fixtures
