#include "gog/normalize.hpp"

namespace gog {

std::vector<EdgeId> trivial_edges(const GraphOfGroups& gog, const SpanningTree& tree) {
  std::vector<EdgeId> out;
  for (const auto& e : tree.edges) {
    if (gog.order_of_edge(e) == gog.order_of_vertex(gog.graph.terminus(e))) {
      out.push_back(e);
    }
  }
  return out;
}

std::optional<EdgeId> find_trivial_edge(const GraphOfGroups& gog,
                                        const SpanningTree& tree) {
  auto all = trivial_edges(gog, tree);
  if (all.empty()) return std::nullopt;
  return all.front();
}

Contraction contract_edge(const GraphOfGroups& gog, const SpanningTree& tree,
                          const EdgeId& e1) {
  const Graph& g = gog.graph;
  if (!tree.edges.contains(e1)) {
    throw Error(ErrorCode::NotTreeEdge, "'" + e1 + "' is not a tree edge");
  }
  const VertexId removed = g.terminus(e1);
  const VertexId survivor = g.origin(e1);
  if (gog.order_of_edge(e1) != gog.order_of_vertex(removed)) {
    throw Error(ErrorCode::NotTrivial,
                "'" + e1 + "' does not embed onto its terminus group");
  }
  const EdgeId e1_bar = g.bar(e1);

  std::vector<VertexId> vertices;
  for (const auto& v : g.vertices()) {
    if (v != removed) vertices.push_back(v);
  }
  std::vector<EdgeRecord> records;
  for (auto r : g.records()) {
    if (r.id == e1 || r.id == e1_bar) continue;
    if (r.origin == removed) r.origin = survivor;
    if (r.terminus == removed) r.terminus = survivor;
    records.push_back(std::move(r));
  }

  Contraction out;
  out.gog.graph = Graph(vertices, records);
  out.gog.vertex_order = gog.vertex_order;
  out.gog.vertex_order.erase(removed);
  out.gog.edge_order = gog.edge_order;
  out.gog.edge_order.erase(e1);
  out.gog.edge_order.erase(e1_bar);
  out.tree = tree;
  out.tree.edges.erase(e1);
  out.tree.edges.erase(e1_bar);
  if (out.tree.root == removed) out.tree.root = survivor;
  out.step = {e1, removed, survivor};
  return out;
}

namespace {

SpanningTree canonical_tree(const GraphOfGroups& gog) {
  return spanning_tree(gog.graph, *gog.graph.vertices().begin());
}

}  // namespace

NormalizationResult normalize(const GraphOfGroups& gog, const EdgePicker& pick) {
  require_valid(gog);
  GraphOfGroups current = gog;
  SpanningTree tree = canonical_tree(current);
  std::vector<ContractionStep> steps;
  for (;;) {
    auto trivial = trivial_edges(current, tree);
    if (trivial.empty()) {
      // The shrunken tree is normalized, but a fresh breadth-first tree of
      // the contracted graph may still pass through a trivial edge.
      SpanningTree fresh = canonical_tree(current);
      if (trivial_edges(current, fresh).empty()) {
        return {make_normalized(std::move(current), std::move(fresh)),
                std::move(steps)};
      }
      tree = std::move(fresh);
      continue;
    }
    auto next = contract_edge(current, tree, pick(trivial));
    current = std::move(next.gog);
    tree = std::move(next.tree);
    steps.push_back(std::move(next.step));
  }
}

NormalizationResult normalize(const GraphOfGroups& gog) {
  return normalize(gog, [](const std::vector<EdgeId>& t) { return t.front(); });
}

namespace {

void explore(const GraphOfGroups& gog, const SpanningTree& tree,
             std::vector<ContractionStep>& steps,
             std::vector<NormalizationResult>& out) {
  auto trivial = trivial_edges(gog, tree);
  if (trivial.empty()) {
    SpanningTree fresh = canonical_tree(gog);
    if (trivial_edges(gog, fresh).empty()) {
      out.push_back({make_normalized(gog, std::move(fresh)), steps});
    } else {
      explore(gog, fresh, steps, out);
    }
    return;
  }
  for (const auto& e : trivial) {
    auto next = contract_edge(gog, tree, e);
    steps.push_back(next.step);
    explore(next.gog, next.tree, steps, out);
    steps.pop_back();
  }
}

}  // namespace

std::vector<NormalizationResult> normalize_all_orders(const GraphOfGroups& gog) {
  require_valid(gog);
  std::vector<NormalizationResult> out;
  std::vector<ContractionStep> steps;
  explore(gog, canonical_tree(gog), steps, out);
  return out;
}

}  // namespace gog
