#pragma once

// Finite graphs of finite groups, recorded by group orders only. An embedding
// of finite groups is an isomorphism iff the orders agree, and every quantity
// computed by this library is determined by the orders.
//
// Text format (line based, '#' starts a comment, blank lines ignored):
//
//   vertex <id> <order>
//   edge <id> <origin-vertex-id> <terminus-vertex-id> <order>
//
// An edge line creates the half-edge "<id>" in the listed direction and its
// reverse "<id>~". User ids must not contain '~'.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gog/arith.hpp"
#include "gog/error.hpp"
#include "gog/graph.hpp"

namespace gog {

struct GraphOfGroups {
  Graph graph;
  std::map<VertexId, Order> vertex_order;
  std::map<EdgeId, Order> edge_order;

  Order order_of_vertex(const VertexId& v) const;
  Order order_of_edge(const EdgeId& e) const;

  friend bool operator==(const GraphOfGroups&, const GraphOfGroups&) = default;
};

struct EdgeSpec {
  EdgeId id;
  VertexId origin;
  VertexId terminus;
  Order order;
};

/// Builds "<id>"/"<id>~" pairs the same way the parser does, then validates.
GraphOfGroups make_gog(const std::vector<std::pair<VertexId, Order>>& vertices,
                       const std::vector<EdgeSpec>& edges);

struct ValidationReport {
  bool ok = true;
  ErrorCode code = ErrorCode::Empty;
  std::string offending_id;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

ValidationReport validate(const GraphOfGroups& gog);

/// Throws Error with the first violated invariant.
void require_valid(const GraphOfGroups& gog);

/// Throws Error(SyntaxError) with a line number, or any validation error.
GraphOfGroups parse_gog(std::string_view text);

/// Canonical text: vertices sorted by id, then one line per geometric edge
/// using the smaller half-edge id.
std::string serialize_gog(const GraphOfGroups& gog);

/// A graph of groups together with a spanning tree along which no embedding
/// is onto: edge_order(e) < vertex_order(terminus(e)) for every tree
/// half-edge e.
struct NormalizedGog {
  GraphOfGroups gog;
  SpanningTree tree;
};

bool satisfies_normalization(const GraphOfGroups& gog, const SpanningTree& tree);

/// Checks validity, the tree, and the normalisation condition.
NormalizedGog make_normalized(GraphOfGroups gog, SpanningTree tree);

}  // namespace gog
