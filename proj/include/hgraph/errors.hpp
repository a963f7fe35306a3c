#pragma once

#include <stdexcept>
#include <string>

namespace hgraph {

/// Malformed graph data or invalid constructor parameters.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural mismatch between a morphism and its source/target graphs.
class MorphismError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on a graph that does not satisfy its hypotheses
/// (bridge present, genus too small, not hyperelliptic, ...).
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive enumeration would exceed its configured size bound.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hgraph
