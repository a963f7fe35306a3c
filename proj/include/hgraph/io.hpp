#pragma once

#include <string>

#include <json.hpp>

#include "hgraph/divisor.hpp"
#include "hgraph/morphism.hpp"

namespace hgraph {

/// Malformed input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"vertices": n, "edges": [[u, v], ...]}
Multigraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Multigraph& g);

// {"coeffs": [c0, c1, ...]}
Divisor divisor_from_json(const nlohmann::json& j, const Multigraph& g);
nlohmann::json divisor_to_json(const Divisor& d);

// {"vmap": [...], "emap": [{"edge": j} | {"vertex": v}, ...]}
GraphMorphism morphism_from_json(const nlohmann::json& j, const Multigraph& source,
                                 const Multigraph& target);
nlohmann::json morphism_to_json(const GraphMorphism& phi);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
nlohmann::json read_json_file(const std::string& path);

}  // namespace hgraph
