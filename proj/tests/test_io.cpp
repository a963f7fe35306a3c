#include <doctest.h>

#include "hgraph/io.hpp"

using namespace hgraph;
using nlohmann::json;

TEST_CASE("graph round trip") {
  auto g = banana({1, 2, 3});
  auto j = graph_to_json(g);
  CHECK(j["vertices"] == g.vertex_count());
  CHECK(graph_from_json(j) == g);
  CHECK(graph_from_json(json::parse(R"({"vertices": 2, "edges": [[0, 1], [1, 0]]})")).edge_count() == 2);
}

TEST_CASE("graph parse errors") {
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": 2, "edges": [[0]]})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": "2", "edges": []})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": 2, "edges": [[0, 0]]})")), GraphError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": 3, "edges": [[0, 1]]})")), GraphError);
}

TEST_CASE("divisor round trip") {
  auto g = cycle(3);
  Divisor d(std::vector<Chip>{2, -1, 0});
  CHECK(divisor_from_json(divisor_to_json(d), g) == d);
  CHECK_THROWS_AS(divisor_from_json(json::parse(R"({"coeffs": [1, 2]})"), g), ParseError);
  CHECK_THROWS_AS(divisor_from_json(json::parse(R"({"coeffs": [1, 2, 0.5]})"), g), ParseError);
}

TEST_CASE("morphism round trip") {
  auto phi = cycle_covering(3, 2);
  auto back = morphism_from_json(morphism_to_json(phi), phi.source, phi.target);
  CHECK(back.vmap == phi.vmap);
  CHECK(back.emap == phi.emap);
  auto h = harmonic_to_edge(complete(4), 0);
  auto hb = morphism_from_json(morphism_to_json(h), h.source, h.target);
  CHECK(hb.emap == h.emap);
  CHECK_THROWS_AS(morphism_from_json(json::parse(R"({"vmap": [0], "emap": [{"face": 0}]})"), path(1), path(1)),
                  ParseError);
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/graph.json"), ParseError);
}
