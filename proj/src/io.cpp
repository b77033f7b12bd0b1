#include "opetope/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace opetope::io {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + ": missing \"" + key + "\"");
  return *it;
}

std::string text_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) throw SchemaError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) throw SchemaError(where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

json to_json(const Hypergraph& h) {
  json faces = json::array();
  for (int f = 0; f < h.size(); ++f) {
    json d = json::array();
    for (int x : h.delta(f)) d.push_back(h.id(x));
    json g = h.dim(f) == 0 || h.gamma(f) < 0 ? json(nullptr) : json(h.id(h.gamma(f)));
    faces.push_back(json{{"id", h.id(f)}, {"dim", h.dim(f)}, {"gamma", g}, {"delta", d}});
  }
  return json{{"name", h.name()}, {"faces", faces}};
}

Hypergraph hypergraph_from_json(const json& j) {
  std::string name = text_field(j, "name", "hypergraph");
  const json& faces = field(j, "faces", "hypergraph '" + name + "'");
  if (!faces.is_array()) throw SchemaError("hypergraph '" + name + "': \"faces\" must be an array");
  Hypergraph h(name);
  for (const auto& f : faces) {
    std::string id = text_field(f, "id", "face of '" + name + "'");
    int dim = int_field(f, "dim", "face '" + id + "'");
    if (dim > kMaxDim) throw SchemaError("face '" + id + "': dimension above " + std::to_string(kMaxDim));
    h.add_face(id, dim);
  }
  for (const auto& f : faces) {
    std::string id = f["id"].get<std::string>();
    int x = h.at(id);
    const json& g = field(f, "gamma", "face '" + id + "'");
    const json& d = field(f, "delta", "face '" + id + "'");
    if (!d.is_array()) throw SchemaError("face '" + id + "': \"delta\" must be an array");
    if (h.dim(x) == 0) {
      if (!g.is_null() || !d.empty()) throw SchemaError("face '" + id + "': a 0-face has null gamma and empty delta");
      continue;
    }
    if (!g.is_string()) throw SchemaError("face '" + id + "': gamma must name a face");
    if (d.empty()) throw SchemaError("face '" + id + "': delta must be nonempty above dimension 0");
    auto ref = [&](const json& r) {
      if (!r.is_string()) throw SchemaError("face '" + id + "': references must be strings");
      int y = h.find(r.get<std::string>());
      if (y < 0) throw SchemaError("face '" + id + "' refers to unknown face '" + r.get<std::string>() + "'");
      return y;
    };
    h.set_gamma(x, ref(g));
    std::vector<int> ds;
    for (const auto& r : d) ds.push_back(ref(r));
    h.set_delta(x, ds);
  }
  return h;
}

json to_json(const FaceMap& f) {
  json a = json::object();
  for (int q = 0; q < f.src().size(); ++q) a[f.src().id(q)] = f.tgt().id(f(q));
  return json{{"source", f.src().name()}, {"target", f.tgt().name()}, {"assignment", a}};
}

FaceMap map_from_json(const json& j, std::shared_ptr<const Hypergraph> source, std::shared_ptr<const Hypergraph> target) {
  std::string s = text_field(j, "source", "map"), t = text_field(j, "target", "map");
  if (s != source->name()) throw SchemaError("map source '" + s + "' does not match '" + source->name() + "'");
  if (t != target->name()) throw SchemaError("map target '" + t + "' does not match '" + target->name() + "'");
  const json& a = field(j, "assignment", "map");
  if (!a.is_object()) throw SchemaError("map: \"assignment\" must be an object");
  FaceMap f{source, target, std::vector<int>(source->size(), -1)};
  for (const auto& [k, v] : a.items()) {
    int q = source->find(k);
    if (q < 0) throw SchemaError("map assigns unknown source face '" + k + "'");
    if (!v.is_string()) throw SchemaError("map: image of '" + k + "' must be a string");
    int p = target->find(v.get<std::string>());
    if (p < 0) throw SchemaError("map sends '" + k + "' to unknown face '" + v.get<std::string>() + "'");
    f.assign[q] = p;
  }
  for (int q = 0; q < source->size(); ++q)
    if (f.assign[q] < 0) throw SchemaError("map leaves '" + source->id(q) + "' unassigned");
  return f;
}

json to_json(const Cell& c) {
  json ids = json::array();
  for (int f : c.faces()) ids.push_back(c.ambient->id(f));
  return json{{"carrier", ids}, {"level", c.level}};
}

Cell cell_from_json(const json& j, std::shared_ptr<const Hypergraph> ambient) {
  const json& ids = field(j, "carrier", "cell");
  if (!ids.is_array()) throw SchemaError("cell: \"carrier\" must be an array");
  std::vector<int> fs;
  for (const auto& r : ids) {
    if (!r.is_string()) throw SchemaError("cell: carrier entries must be strings");
    int f = ambient->find(r.get<std::string>());
    if (f < 0) throw SchemaError("cell refers to unknown face '" + r.get<std::string>() + "'");
    fs.push_back(f);
  }
  return make_cell(ambient, fs, int_field(j, "level", "cell"));
}

json to_json(const AxiomReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) vs.push_back(json{{"axiom", v.axiom}, {"faces", v.faces}, {"witness", v.witness}});
  return json{{"verdict", r.ok() ? "pass" : "fail"}, {"violations", vs}};
}

json flag_json(const Hypergraph& h, const Flag& f) { return flag_text(h, f); }

Flag flag_from_json(const Hypergraph& h, const json& j) {
  if (!j.is_string()) throw SchemaError("a flag is written as a string like \"[m,a02,v2]\"");
  return parse_flag(h, j.get<std::string>());
}

json to_json(const Hypergraph& h, const StraightnessCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps)
    steps.push_back(json{{"flag", flag_text(h, s.flag)},
                         {"meet", s.meet.e.empty() ? json(nullptr) : json(flag_text(h, s.meet))},
                         {"faces_added", s.faces_added}});
  json j{{"opetope", h.name()}, {"steps", steps}, {"total_faces", c.total_faces}};
  j["report"] = to_json(c.report);
  return j;
}

json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(what + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write '" + path + "'");
  out << text;
}

Hypergraph load_hypergraph(const std::string& path) { return hypergraph_from_json(parse(read_file(path), path)); }

void save_hypergraph(const std::string& path, const Hypergraph& h) { write_file(path, dump(to_json(h))); }

}  // namespace opetope::io
