#pragma once

// Brute-force validators and test-data generators. Nothing here uses the
// counting module's big-number routines; the subgroup counts are obtained by
// enumerating permutation tuples in plain 64-bit arithmetic.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gog/graph.hpp"
#include "gog/graph_of_groups.hpp"

namespace gog::oracle {

/// A tuple of permutations of {0, ..., n-1}.
struct PermTuple {
  std::size_t n = 0;
  std::vector<std::vector<std::uint8_t>> perms;
};

bool acts_transitively(const PermTuple& t);

/// s_1 .. s_N: number of subgroups of index n in the free group of rank r,
/// as t_n / (n-1)! where t_n counts transitive r-tuples on n points.
/// Throws DegreeTooLarge for N > 6.
std::vector<std::uint64_t> free_group_subgroup_counts(std::size_t rank,
                                                      std::size_t max_index);

/// Enumerates all 2^k orientations of the tree's k geometric edges and checks
/// that exactly one maps e -> terminus(e) bijectively onto V \ {v0}, and that
/// it is the one orient_from_root returns. Throws TooLarge for k > 20.
bool orientation_uniqueness(const Graph& g, const SpanningTree& tree,
                            const VertexId& v0);

/// All data with <= 3 vertices, <= 2 geometric edges and orders <= bound
/// whose breadth-first tree from the smallest vertex has no trivial edge,
/// one representative per relabeling class. Vertices are v1, v2, v3 and
/// edges e1, e2.
std::vector<GraphOfGroups> exhaustive_rank2_shapes(Order bound);

struct RandomGogLimits {
  std::size_t max_vertices = 6;
  std::size_t max_edges = 6;
  /// Vertex orders are drawn from the divisors of this number.
  Order order_pool = 24;
};

GraphOfGroups random_gog(std::mt19937_64& rng, const RandomGogLimits& limits = {});

/// A random tree graph with between 0 and max_edges geometric edges.
Graph random_tree(std::mt19937_64& rng, std::size_t max_edges);

}  // namespace gog::oracle
