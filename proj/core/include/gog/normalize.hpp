#pragma once

// Normalisation by contraction of trivial spanning-tree edges. A tree
// half-edge e is trivial when its group maps onto the terminus group,
// i.e. edge_order(e) == vertex_order(terminus(e)); an isomorphism on the
// origin side shows up on bar(e). Contracting e deletes {e, bar(e)} and the
// vertex terminus(e), re-homing every incident half-edge at origin(e). Orders
// of the surviving groups are unchanged, since re-embedding composes
// monomorphisms.

#include <functional>
#include <optional>
#include <vector>

#include "gog/graph_of_groups.hpp"

namespace gog {

struct ContractionStep {
  EdgeId contracted_edge;
  VertexId removed_vertex;    // terminus of contracted_edge
  VertexId surviving_vertex;  // origin of contracted_edge

  friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};

/// All trivial tree half-edges, ascending.
std::vector<EdgeId> trivial_edges(const GraphOfGroups& gog, const SpanningTree& tree);

/// Smallest-id trivial tree half-edge, if any.
std::optional<EdgeId> find_trivial_edge(const GraphOfGroups& gog,
                                        const SpanningTree& tree);

struct Contraction {
  GraphOfGroups gog;
  SpanningTree tree;
  ContractionStep step;
};

Contraction contract_edge(const GraphOfGroups& gog, const SpanningTree& tree,
                          const EdgeId& e1);

struct NormalizationResult {
  NormalizedGog normalized;
  std::vector<ContractionStep> steps;
};

/// Chooses which trivial half-edge to contract next; receives a non-empty
/// ascending list.
using EdgePicker = std::function<EdgeId(const std::vector<EdgeId>&)>;

/// Contracts the smallest-id trivial edge until none is left. The returned
/// tree is the breadth-first tree of the result rooted at its smallest
/// vertex, so normalising the output again performs no steps.
NormalizationResult normalize(const GraphOfGroups& gog);
NormalizationResult normalize(const GraphOfGroups& gog, const EdgePicker& pick);

/// Every result reachable by some contraction order. Exponential; meant for
/// inputs with a handful of trivial edges.
std::vector<NormalizationResult> normalize_all_orders(const GraphOfGroups& gog);

}  // namespace gog
