#include "hgraph/io.hpp"

#include <fstream>

namespace hgraph {

using nlohmann::json;

namespace {

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Multigraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph needs \"vertices\" and \"edges\"");
  int n = as_int(j["vertices"], "vertices");
  if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, v]");
    edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
  }
  return Multigraph(n, std::move(edges));
}

json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Divisor divisor_from_json(const json& j, const Multigraph& g) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("divisor needs a \"coeffs\" array");
  if (static_cast<int>(j["coeffs"].size()) != g.vertex_count())
    throw ParseError("divisor has " + std::to_string(j["coeffs"].size()) + " coefficients, graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
  Divisor d(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!j["coeffs"][i].is_number_integer()) throw ParseError("coefficients must be integers");
    d[i] = j["coeffs"][i].get<Chip>();
  }
  return d;
}

json divisor_to_json(const Divisor& d) { return {{"coeffs", d.coeffs}}; }

GraphMorphism morphism_from_json(const json& j, const Multigraph& source, const Multigraph& target) {
  if (!j.is_object() || !j.contains("vmap") || !j.contains("emap"))
    throw ParseError("morphism needs \"vmap\" and \"emap\"");
  GraphMorphism phi{source, target, {}, {}};
  for (const auto& v : j["vmap"]) phi.vmap.push_back(as_int(v, "vmap entry"));
  for (const auto& e : j["emap"]) {
    if (e.is_object() && e.contains("edge"))
      phi.emap.push_back(EdgeImage::edge(as_int(e["edge"], "emap edge")));
    else if (e.is_object() && e.contains("vertex"))
      phi.emap.push_back(EdgeImage::vertex(as_int(e["vertex"], "emap vertex")));
    else
      throw ParseError("emap entries must be {\"edge\": j} or {\"vertex\": v}");
  }
  return phi;
}

json morphism_to_json(const GraphMorphism& phi) {
  json emap = json::array();
  for (const auto& img : phi.emap)
    emap.push_back(img.vertical ? json{{"vertex", img.index}} : json{{"edge", img.index}});
  return {{"vmap", phi.vmap}, {"emap", emap}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace hgraph
