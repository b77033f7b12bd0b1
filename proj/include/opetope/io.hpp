#pragma once

#include <memory>
#include <string>

#include "json.hpp"
#include "opetope/core.hpp"
#include "opetope/cylinder.hpp"
#include "opetope/morphisms.hpp"
#include "opetope/omega.hpp"
#include "opetope/product.hpp"

namespace opetope::io {

using json = nlohmann::ordered_json;

// {"name", "faces": [{"id", "dim", "gamma", "delta"}]}; faces are written in index order
json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

// {"source", "target", "assignment": {id: id}}; names must match the given hypergraphs
json to_json(const FaceMap& f);
FaceMap map_from_json(const json& j, std::shared_ptr<const Hypergraph> source, std::shared_ptr<const Hypergraph> target);

// {"carrier": [ids], "level": n}
json to_json(const Cell& c);
Cell cell_from_json(const json& j, std::shared_ptr<const Hypergraph> ambient);

json to_json(const AxiomReport& r);
json to_json(const Hypergraph& h, const StraightnessCertificate& c);
json flag_json(const Hypergraph& h, const Flag& f);
Flag flag_from_json(const Hypergraph& h, const json& j);

// text <-> json with SchemaError on malformed input; dump is 2-space indented with a final newline
json parse(const std::string& text, const std::string& what);
std::string dump(const json& j);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const std::string& path, const Hypergraph& h);

}  // namespace opetope::io
