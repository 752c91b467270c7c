#pragma once

// Graphs in Serre's sense: a vertex set and a set of half-edges carrying a
// fixed-point-free involution e -> bar(e) together with origin and terminus
// maps satisfying terminus(bar(e)) = origin(e). Loops and multiple edges are
// allowed. Ids are opaque strings, ordered lexicographically; every traversal
// walks them in ascending order so results are reproducible.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gog {

using VertexId = std::string;
using EdgeId = std::string;

struct EdgeRecord {
  EdgeId id;
  EdgeId bar;
  VertexId origin;
  VertexId terminus;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

class Graph {
 public:
  Graph() = default;

  /// Validates the Serre axioms; throws Error on violation.
  Graph(const std::vector<VertexId>& vertices,
        const std::vector<EdgeRecord>& edges);

  const std::set<VertexId>& vertices() const noexcept { return vertices_; }
  std::vector<EdgeId> half_edges() const;
  /// Records in ascending id order.
  std::vector<EdgeRecord> records() const;

  bool has_vertex(const VertexId& v) const { return vertices_.contains(v); }
  bool has_edge(const EdgeId& e) const { return edges_.contains(e); }

  const EdgeId& bar(const EdgeId& e) const { return at(e).bar; }
  const VertexId& origin(const EdgeId& e) const { return at(e).origin; }
  const VertexId& terminus(const EdgeId& e) const { return at(e).terminus; }
  bool is_loop(const EdgeId& e) const { return origin(e) == terminus(e); }

  /// Half-edges with origin v, ascending by id.
  const std::vector<EdgeId>& out_edges(const VertexId& v) const;

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t half_edge_count() const noexcept { return edges_.size(); }
  std::size_t geometric_edge_count() const noexcept { return edges_.size() / 2; }

  /// The smaller id of each pair {e, bar(e)}, ascending.
  std::vector<EdgeId> geometric_representatives() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  struct HalfEdge {
    EdgeId bar;
    VertexId origin;
    VertexId terminus;
    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
  };

  const HalfEdge& at(const EdgeId& e) const;

  std::set<VertexId> vertices_;
  std::map<EdgeId, HalfEdge> edges_;
  std::map<VertexId, std::vector<EdgeId>> out_;
};

struct Orientation {
  std::set<EdgeId> chosen;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// A spanning tree given by its half-edges (closed under bar) and a root.
struct SpanningTree {
  std::set<EdgeId> edges;
  VertexId root;
  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

Graph build_graph(const std::vector<VertexId>& vertex_ids,
                  const std::vector<EdgeRecord>& edge_records);

/// Every vertex reachable from the first one. The empty graph is not connected.
bool is_connected(const Graph& g);

/// Connected with |E| = 2(|V| - 1).
bool is_tree(const Graph& g);

/// Breadth-first from root, scanning out-edges in ascending id order.
SpanningTree spanning_tree(const Graph& g, const VertexId& root);

/// Checks the spanning-tree invariants of t against g.
bool is_spanning_tree(const Graph& g, const SpanningTree& t);

/// Orientation of the tree's geometric edges pointing away from v0. The map
/// e -> terminus(e) on the result is a bijection onto V \ {v0}, and it is the
/// only orientation with that property.
Orientation orient_from_root(const Graph& g, const SpanningTree& t,
                             const VertexId& v0);

/// Path-metric distance from v0 inside the tree, for every vertex.
std::map<VertexId, std::size_t> tree_distances(const Graph& g,
                                               const SpanningTree& t,
                                               const VertexId& v0);

/// Completes a partial orientation; uncovered pairs take the smaller id.
Orientation extend_orientation(const Graph& g, const Orientation& partial);

}  // namespace gog
