#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"

#include "acute/errors.hpp"
#include "acute/triangulation.hpp"

namespace acute {

/// A parsed triangulation file. Labels are present only when the document
/// carried a "labels" array.
struct TriangulationDocument {
  AbstractTriangulation triangulation;
  std::optional<EdgeLabeling> labels;
};

inline TriangulationDocument parse_triangulation(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("triangulation document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InputError("missing array field 'vertices'");
  }
  if (!doc.contains("faces") || !doc["faces"].is_array()) throw InputError("missing array field 'faces'");

  std::vector<std::string> ids;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw InputError("vertex identifiers must be strings");
    ids.push_back(v.get<std::string>());
  }
  std::vector<std::array<std::string, 3>> faces;
  for (const auto& f : doc["faces"]) {
    if (!f.is_array() || f.size() != 3) throw InputError("each face must be an array of 3 vertex identifiers");
    std::array<std::string, 3> t;
    for (int k = 0; k < 3; ++k) {
      if (!f[k].is_string()) throw InputError("face entries must be vertex identifiers");
      t[k] = f[k].get<std::string>();
    }
    faces.push_back(std::move(t));
  }
  auto tri = AbstractTriangulation::from_ids(std::move(ids), faces);

  std::optional<EdgeLabeling> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw InputError("'labels' must be an array");
    labels.emplace(tri);
    for (const auto& l : doc["labels"]) {
      if (!l.is_object() || !l.contains("edge") || !l.contains("m")) {
        throw InputError("each label needs 'edge' and 'm'");
      }
      const auto& e = l["edge"];
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw InputError("label edge must be a pair of vertex identifiers");
      }
      if (!l["m"].is_number_integer()) throw InputError("label m must be an integer");
      labels->set(tri, tri.index_of(e[0].get<std::string>()), tri.index_of(e[1].get<std::string>()),
                  l["m"].get<int>());
    }
  }
  return {std::move(tri), std::move(labels)};
}

inline TriangulationDocument parse_triangulation(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_triangulation(doc);
}

inline TriangulationDocument load_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_triangulation(ss.str());
}

inline nlohmann::json to_json(const AbstractTriangulation& tri, const EdgeLabeling* labels = nullptr) {
  nlohmann::json doc;
  doc["vertices"] = tri.vertex_ids();
  auto faces = nlohmann::json::array();
  for (const auto& f : tri.faces()) faces.push_back({tri.id(f[0]), tri.id(f[1]), tri.id(f[2])});
  doc["faces"] = std::move(faces);
  if (labels != nullptr) {
    auto arr = nlohmann::json::array();
    for (int e = 0; e < tri.edge_count(); ++e) {
      if (labels->at(e) == 2) continue;
      const auto& ed = tri.edges()[e];
      arr.push_back({{"edge", {tri.id(ed.first), tri.id(ed.second)}}, {"m", labels->at(e)}});
    }
    doc["labels"] = std::move(arr);
  }
  return doc;
}

inline std::string serialize_triangulation(const AbstractTriangulation& tri, const EdgeLabeling* labels = nullptr) {
  return to_json(tri, labels).dump(1);
}

}  // namespace acute
