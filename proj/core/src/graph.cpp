#include "gog/graph.hpp"

#include <deque>

#include "gog/error.hpp"

namespace gog {

Graph::Graph(const std::vector<VertexId>& vertices,
             const std::vector<EdgeRecord>& edges) {
  for (const auto& v : vertices) {
    if (!vertices_.insert(v).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate vertex id '" + v + "'");
    }
  }
  for (const auto& r : edges) {
    if (edges_.contains(r.id)) {
      throw Error(ErrorCode::DuplicateId, "duplicate edge id '" + r.id + "'");
    }
    for (const auto* v : {&r.origin, &r.terminus}) {
      if (!vertices_.contains(*v)) {
        throw Error(ErrorCode::DanglingVertexRef,
                    "edge '" + r.id + "' references unknown vertex '" + *v + "'");
      }
    }
    edges_.emplace(r.id, HalfEdge{r.bar, r.origin, r.terminus});
  }
  for (const auto& [id, he] : edges_) {
    if (he.bar == id) {
      throw Error(ErrorCode::FixedPointInvolution,
                  "edge '" + id + "' is its own reverse");
    }
    auto it = edges_.find(he.bar);
    if (it == edges_.end() || it->second.bar != id) {
      throw Error(ErrorCode::BrokenInvolution,
                  "reverse of edge '" + id + "' is not an involution");
    }
    if (it->second.terminus != he.origin) {
      throw Error(ErrorCode::IncidenceMismatch,
                  "terminus of '" + he.bar + "' differs from origin of '" + id + "'");
    }
  }
  for (const auto& v : vertices_) out_[v];
  for (const auto& [id, he] : edges_) out_[he.origin].push_back(id);
}

const Graph::HalfEdge& Graph::at(const EdgeId& e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) {
    throw Error(ErrorCode::UnknownEdge, "unknown edge '" + e + "'");
  }
  return it->second;
}

std::vector<EdgeId> Graph::half_edges() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (const auto& kv : edges_) out.push_back(kv.first);
  return out;
}

std::vector<EdgeRecord> Graph::records() const {
  std::vector<EdgeRecord> out;
  out.reserve(edges_.size());
  for (const auto& [id, he] : edges_) {
    out.push_back({id, he.bar, he.origin, he.terminus});
  }
  return out;
}

const std::vector<EdgeId>& Graph::out_edges(const VertexId& v) const {
  auto it = out_.find(v);
  if (it == out_.end()) {
    throw Error(ErrorCode::UnknownRoot, "unknown vertex '" + v + "'");
  }
  return it->second;
}

std::vector<EdgeId> Graph::geometric_representatives() const {
  std::vector<EdgeId> out;
  for (const auto& [id, he] : edges_) {
    if (id < he.bar) out.push_back(id);
  }
  return out;
}

Graph build_graph(const std::vector<VertexId>& vertex_ids,
                  const std::vector<EdgeRecord>& edge_records) {
  return Graph(vertex_ids, edge_records);
}

namespace {

std::set<VertexId> reachable(const Graph& g, const VertexId& start) {
  std::set<VertexId> seen{start};
  std::deque<VertexId> queue{start};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& e : g.out_edges(v)) {
      if (seen.insert(g.terminus(e)).second) queue.push_back(g.terminus(e));
    }
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertices().empty()) return false;
  return reachable(g, *g.vertices().begin()).size() == g.vertex_count();
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.half_edge_count() + 2 == 2 * g.vertex_count();
}

SpanningTree spanning_tree(const Graph& g, const VertexId& root) {
  if (!g.has_vertex(root)) {
    throw Error(ErrorCode::UnknownRoot, "unknown root '" + root + "'");
  }
  SpanningTree tree{{}, root};
  std::set<VertexId> seen{root};
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& e : g.out_edges(v)) {
      const auto& w = g.terminus(e);
      if (seen.insert(w).second) {
        tree.edges.insert(e);
        tree.edges.insert(g.bar(e));
        queue.push_back(w);
      }
    }
  }
  if (seen.size() != g.vertex_count()) {
    throw Error(ErrorCode::NotConnected, "graph is not connected");
  }
  return tree;
}

bool is_spanning_tree(const Graph& g, const SpanningTree& t) {
  if (!g.has_vertex(t.root)) return false;
  if (t.edges.size() + 2 != 2 * g.vertex_count()) return false;
  for (const auto& e : t.edges) {
    if (!g.has_edge(e) || !t.edges.contains(g.bar(e)) || g.is_loop(e)) {
      return false;
    }
  }
  // |E(T)| = 2(|V| - 1) plus connectivity gives acyclicity.
  std::set<VertexId> seen{t.root};
  std::deque<VertexId> queue{t.root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& e : g.out_edges(v)) {
      if (t.edges.contains(e) && seen.insert(g.terminus(e)).second) {
        queue.push_back(g.terminus(e));
      }
    }
  }
  return seen.size() == g.vertex_count();
}

std::map<VertexId, std::size_t> tree_distances(const Graph& g,
                                               const SpanningTree& t,
                                               const VertexId& v0) {
  if (!g.has_vertex(v0)) {
    throw Error(ErrorCode::UnknownRoot, "unknown root '" + v0 + "'");
  }
  std::map<VertexId, std::size_t> dist{{v0, 0}};
  std::deque<VertexId> queue{v0};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& e : g.out_edges(v)) {
      if (!t.edges.contains(e)) continue;
      if (dist.emplace(g.terminus(e), dist[v] + 1).second) {
        queue.push_back(g.terminus(e));
      }
    }
  }
  return dist;
}

Orientation orient_from_root(const Graph& g, const SpanningTree& t,
                             const VertexId& v0) {
  auto dist = tree_distances(g, t, v0);
  Orientation o;
  for (const auto& e : t.edges) {
    auto from = dist.find(g.origin(e));
    auto to = dist.find(g.terminus(e));
    if (from != dist.end() && to != dist.end() && to->second == from->second + 1) {
      o.chosen.insert(e);
    }
  }
  return o;
}

Orientation extend_orientation(const Graph& g, const Orientation& partial) {
  Orientation out = partial;
  for (const auto& e : partial.chosen) {
    if (!g.has_edge(e)) {
      throw Error(ErrorCode::UnknownEdge, "unknown edge '" + e + "'");
    }
    if (partial.chosen.contains(g.bar(e))) {
      throw Error(ErrorCode::PartialConflict,
                  "both '" + e + "' and '" + g.bar(e) + "' are chosen");
    }
  }
  for (const auto& e : g.geometric_representatives()) {
    if (!out.chosen.contains(e) && !out.chosen.contains(g.bar(e))) {
      out.chosen.insert(e);
    }
  }
  return out;
}

}  // namespace gog
