#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gog/counting.hpp"
#include "gog/invariants.hpp"
#include "gog/normalize.hpp"
#include "gog/oracle.hpp"

using namespace gog;
using gog::fixtures::code_of;

TEST_CASE("segment onto its terminus contracts to a point") {
  auto g = make_gog({{"a", 4}, {"b", 2}}, {{"s", "a", "b", 2}});
  auto tree = spanning_tree(g.graph, "a");
  CHECK(trivial_edges(g, tree) == std::vector<EdgeId>{"s"});
  auto c = contract_edge(g, tree, "s");
  CHECK(c.step == ContractionStep{"s", "b", "a"});
  CHECK(c.gog.graph.vertices() == std::set<VertexId>{"a"});
  CHECK(c.gog.graph.half_edge_count() == 0);
  CHECK(c.gog.order_of_vertex("a") == 4);
  CHECK(c.tree.edges.empty());
}

TEST_CASE("contraction errors") {
  auto g = make_gog({{"a", 4}, {"b", 2}}, {{"s", "a", "b", 2}});
  auto tree = spanning_tree(g.graph, "a");
  CHECK(code_of([&] { contract_edge(g, tree, "s~"); }) == ErrorCode::NotTrivial);
  CHECK(code_of([&] { contract_edge(g, SpanningTree{{}, "a"}, "s"); }) ==
        ErrorCode::NotTreeEdge);
}

TEST_CASE("middle vertex of a path is absorbed") {
  auto g = make_gog({{"a", 4}, {"b", 2}, {"c", 4}},
                    {{"e", "a", "b", 2}, {"f", "b", "c", 2}});
  auto r = normalize(g);
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0] == ContractionStep{"e", "b", "a"});
  const auto& out = r.normalized.gog;
  CHECK(out.graph.vertices() == std::set<VertexId>{"a", "c"});
  CHECK(out.graph.origin("f") == "a");
  CHECK(out.graph.terminus("f") == "c");
  CHECK(out.order_of_edge("f") == 2);
  CHECK(satisfies_normalization(out, r.normalized.tree));
}

TEST_CASE("loops ride along with the surviving vertex") {
  auto g = make_gog({{"a", 4}, {"b", 2}}, {{"s", "a", "b", 2}, {"l", "b", "b", 2}});
  auto r = normalize(g);
  REQUIRE(r.steps.size() == 1);
  const auto& out = r.normalized.gog;
  CHECK(out.graph.vertices() == std::set<VertexId>{"a"});
  CHECK(out.graph.origin("l") == "a");
  CHECK(out.graph.terminus("l~") == "a");
  CHECK(out.order_of_edge("l") == 2);
}

TEST_CASE("a path of equal groups collapses fully") {
  auto g = make_gog({{"a", 2}, {"b", 2}, {"c", 2}},
                    {{"e", "a", "b", 2}, {"f", "b", "c", 2}});
  auto r = normalize(g);
  CHECK(r.steps.size() == 2);
  CHECK(r.normalized.gog.graph.vertex_count() == 1);
  CHECK(r.normalized.gog.order_of_vertex("a") == 2);
}

TEST_CASE("already normalized input is a fixed point") {
  auto r = normalize(fixtures::c2c3());
  CHECK(r.steps.empty());
  CHECK(r.normalized.gog == fixtures::c2c3());
}

TEST_CASE("custom picker chooses the contraction order") {
  auto g = make_gog({{"a", 2}, {"b", 2}, {"c", 2}},
                    {{"e", "a", "b", 2}, {"f", "b", "c", 2}});
  auto r = normalize(g, [](const std::vector<EdgeId>& t) { return t.back(); });
  CHECK(r.steps.front().contracted_edge == "f~");
  CHECK(r.normalized.gog.graph.vertex_count() == 1);
  CHECK(normalize_all_orders(g).size() >= 2);
}

TEST_CASE("normalization preserves every invariant on random data") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    auto g = oracle::random_gog(rng);
    auto r = normalize(g);
    const auto& out = r.normalized.gog;
    CHECK(validate(out).ok);
    CHECK(satisfies_normalization(out, r.normalized.tree));
    CHECK(m_gamma(out) == m_gamma(g));
    CHECK(euler_char(out) == euler_char(g));
    CHECK(type_vector(out) == type_vector(g));
    CHECK(free_rank(out) == free_rank(g));
    CHECK(check_edge_bound(r.normalized));
    CHECK(normalize(out).steps.empty());
    CHECK(r.steps.size() == g.graph.vertex_count() - out.graph.vertex_count());
    if (m_gamma(g) <= 12) CHECK(f_series(out, 5) == f_series(g, 5));
  }
}
