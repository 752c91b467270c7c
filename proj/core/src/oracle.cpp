#include "gog/oracle.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <numeric>
#include <thread>

#include "gog/error.hpp"

namespace gog::oracle {

bool acts_transitively(const PermTuple& t) {
  if (t.n == 0) return false;
  std::vector<bool> seen(t.n, false);
  std::vector<std::uint8_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::uint8_t x = stack.back();
    stack.pop_back();
    // The group generated is finite, so forward images already give the orbit.
    for (const auto& p : t.perms) {
      const std::uint8_t y = p[x];
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == t.n;
}

namespace {

std::vector<std::vector<std::uint8_t>> all_permutations(std::size_t n) {
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<std::vector<std::uint8_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Counts transitive tuples whose first permutation is perms[lead].
std::uint64_t count_with_lead(const std::vector<std::vector<std::uint8_t>>& perms,
                              std::size_t rank, std::size_t n, std::size_t lead) {
  PermTuple t{n, std::vector<std::vector<std::uint8_t>>(rank)};
  t.perms[0] = perms[lead];
  std::vector<std::size_t> idx(rank, 0);
  std::uint64_t count = 0;
  for (;;) {
    for (std::size_t i = 1; i < rank; ++i) t.perms[i] = perms[idx[i]];
    if (acts_transitively(t)) ++count;
    std::size_t i = 1;
    while (i < rank && ++idx[i] == perms.size()) idx[i++] = 0;
    if (i >= rank) break;
  }
  return count;
}

}  // namespace

std::vector<std::uint64_t> free_group_subgroup_counts(std::size_t rank,
                                                      std::size_t max_index) {
  if (max_index > 6) {
    throw Error(ErrorCode::DegreeTooLarge,
                "degree " + std::to_string(max_index) + " exceeds 6");
  }
  if (rank == 0) throw Error(ErrorCode::DegreeTooLarge, "rank must be positive");
  std::vector<std::uint64_t> out;
  std::uint64_t fact = 1;  // (n-1)!
  for (std::size_t n = 1; n <= max_index; ++n) {
    if (n > 1) fact *= n - 1;
    const auto perms = all_permutations(n);
    std::vector<std::future<std::uint64_t>> jobs;
    const bool parallel = perms.size() >= 120 && rank >= 2;
    std::uint64_t transitive = 0;
    for (std::size_t lead = 0; lead < perms.size(); ++lead) {
      if (parallel) {
        jobs.push_back(std::async(std::launch::async | std::launch::deferred,
                                  count_with_lead, std::cref(perms), rank, n, lead));
        if (jobs.size() >= std::max(1u, std::thread::hardware_concurrency())) {
          for (auto& j : jobs) transitive += j.get();
          jobs.clear();
        }
      } else {
        transitive += count_with_lead(perms, rank, n, lead);
      }
    }
    for (auto& j : jobs) transitive += j.get();
    if (transitive % fact != 0) {
      throw Error(ErrorCode::NonExactDivision,
                  "t_" + std::to_string(n) + " not divisible by (n-1)!");
    }
    out.push_back(transitive / fact);
  }
  return out;
}

bool orientation_uniqueness(const Graph& g, const SpanningTree& tree,
                            const VertexId& v0) {
  std::vector<EdgeId> reps;
  for (const auto& e : tree.edges) {
    if (e < g.bar(e)) reps.push_back(e);
  }
  if (reps.size() > 20) {
    throw Error(ErrorCode::TooLarge, "tree has more than 20 geometric edges");
  }
  std::set<VertexId> targets(g.vertices());
  targets.erase(v0);

  std::size_t qualifying = 0;
  Orientation found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << reps.size()); ++mask) {
    Orientation o;
    std::set<VertexId> termini;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const EdgeId e = (mask >> i) & 1 ? g.bar(reps[i]) : reps[i];
      o.chosen.insert(e);
      termini.insert(g.terminus(e));
    }
    // |chosen| = |V| - 1, so equal sets mean a bijection.
    if (termini == targets && o.chosen.size() == targets.size()) {
      ++qualifying;
      found = o;
    }
  }
  return qualifying == 1 && found == orient_from_root(g, tree, v0);
}

namespace {

std::vector<Order> divisors_upto(Order n) {
  std::vector<Order> out;
  for (Order d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace

std::vector<GraphOfGroups> exhaustive_rank2_shapes(Order bound) {
  std::vector<GraphOfGroups> out;
  for (Order a = 1; a <= bound; ++a) {
    out.push_back(make_gog({{"v1", a}}, {}));
    for (Order d : divisors_upto(a)) {
      out.push_back(make_gog({{"v1", a}}, {{"e1", "v1", "v1", d}}));
    }
    for (Order d1 : divisors_upto(a)) {
      for (Order d2 : divisors_upto(a)) {
        if (d2 < d1) continue;
        out.push_back(make_gog({{"v1", a}},
                               {{"e1", "v1", "v1", d1}, {"e2", "v1", "v1", d2}}));
      }
    }
  }
  for (Order a = 1; a <= bound; ++a) {
    for (Order b = 1; b <= bound; ++b) {
      for (Order d1 : divisors_upto(std::gcd(a, b))) {
        if (d1 >= a || d1 >= b) continue;
        const std::vector<std::pair<VertexId, Order>> vs{{"v1", a}, {"v2", b}};
        if (a <= b) {
          out.push_back(make_gog(vs, {{"e1", "v1", "v2", d1}}));
          for (Order d2 : divisors_upto(std::gcd(a, b))) {
            out.push_back(make_gog(vs, {{"e1", "v1", "v2", d1},
                                        {"e2", "v1", "v2", d2}}));
          }
        }
        for (Order d2 : divisors_upto(b)) {
          out.push_back(make_gog(vs, {{"e1", "v1", "v2", d1},
                                      {"e2", "v2", "v2", d2}}));
        }
        for (Order c = 1; c <= bound; ++c) {
          for (Order d2 : divisors_upto(std::gcd(b, c))) {
            if (d2 >= b || d2 >= c) continue;
            if (std::pair(c, d2) < std::pair(a, d1)) continue;
            out.push_back(make_gog({{"v1", a}, {"v2", b}, {"v3", c}},
                                   {{"e1", "v1", "v2", d1}, {"e2", "v2", "v3", d2}}));
          }
        }
      }
    }
  }
  return out;
}

GraphOfGroups random_gog(std::mt19937_64& rng, const RandomGogLimits& limits) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const auto pool = divisors_upto(limits.order_pool);
  auto pick = [&](const std::vector<Order>& v) { return v[uniform(0, v.size() - 1)]; };

  const std::size_t nv = uniform(1, std::min(limits.max_vertices, limits.max_edges + 1));
  const std::size_t ne = uniform(nv - 1, limits.max_edges);

  std::vector<std::pair<VertexId, Order>> vertices;
  for (std::size_t i = 0; i < nv; ++i) {
    vertices.emplace_back("v" + std::to_string(i + 1), pick(pool));
  }
  std::vector<EdgeSpec> edges;
  auto add_edge = [&](std::size_t x, std::size_t y) {
    if (uniform(0, 1) == 1) std::swap(x, y);
    const Order common = std::gcd(vertices[x].second, vertices[y].second);
    const Order order = uniform(0, 1) == 0 ? common : pick(divisors_upto(common));
    edges.push_back({"e" + std::to_string(edges.size() + 1), vertices[x].first,
                     vertices[y].first, order});
  };
  for (std::size_t i = 1; i < nv; ++i) add_edge(uniform(0, i - 1), i);
  while (edges.size() < ne) add_edge(uniform(0, nv - 1), uniform(0, nv - 1));
  std::shuffle(edges.begin(), edges.end(), rng);
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].id = "e" + std::to_string(i + 1);
  return make_gog(vertices, edges);
}

Graph random_tree(std::mt19937_64& rng, std::size_t max_edges) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i <= k; ++i) vertices.push_back("t" + std::to_string(i));
  std::vector<EdgeRecord> records;
  for (std::size_t i = 1; i <= k; ++i) {
    VertexId a = vertices[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
    VertexId b = vertices[i];
    if (rng() & 1) std::swap(a, b);
    const EdgeId id = "x" + std::to_string(i);
    records.push_back({id, id + "~", a, b});
    records.push_back({id + "~", id, b, a});
  }
  return Graph(vertices, records);
}

}  // namespace gog::oracle
