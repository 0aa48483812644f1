#include "allab/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "allab/errors.hpp"

namespace allab {

namespace {

using Json = nlohmann::ordered_json;

}  // namespace

FiniteLattice read_lattice_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    throw IoError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("labels") || !doc.contains("covers") ||
      !doc.contains("unary"))
    throw IoError("lattice file needs the keys labels, covers and unary");

  std::vector<std::string> labels;
  for (const auto& l : doc.at("labels")) {
    if (!l.is_string()) throw IoError("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : doc.at("covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw IoError("each cover must be a pair of labels");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  std::map<std::string, std::string> unary;
  if (!doc.at("unary").is_object()) throw IoError("unary must be an object");
  for (const auto& [k, v] : doc.at("unary").items()) {
    if (!v.is_string()) throw IoError("unary images must be labels");
    unary[k] = v.get<std::string>();
  }
  return build_from_covers(labels, covers, unary);
}

FiniteLattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_lattice_json(buf.str());
}

std::string lattice_to_json(const FiniteLattice& L) {
  Json doc;
  doc["labels"] = Json::array();
  for (const auto& l : L.labels) doc["labels"].push_back(l);
  doc["covers"] = Json::array();
  for (const auto& [lo, hi] : cover_pairs(L))
    doc["covers"].push_back(Json::array({L.label(lo), L.label(hi)}));
  doc["unary"] = Json::object();
  for (int x = 0; x < L.n; ++x) doc["unary"][L.label(x)] = L.label(L.comp(x));
  return doc.dump(2) + "\n";
}

void write_lattice_file(const std::string& path, const FiniteLattice& L) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << lattice_to_json(L);
}

}  // namespace allab
