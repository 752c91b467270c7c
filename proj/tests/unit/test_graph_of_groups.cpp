#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gog/graph_of_groups.hpp"
#include "gog/oracle.hpp"

using namespace gog;
using gog::fixtures::code_of;

namespace {

GraphOfGroups raw(std::map<VertexId, Order> vo, std::map<EdgeId, Order> eo,
                  const std::vector<EdgeRecord>& records) {
  std::vector<VertexId> vs;
  for (const auto& [v, n] : vo) vs.push_back(v);
  return {build_graph(vs, records), std::move(vo), std::move(eo)};
}

std::vector<EdgeRecord> pair(const EdgeId& e, const VertexId& o, const VertexId& t) {
  return {{e, e + "~", o, t}, {e + "~", e, t, o}};
}

}  // namespace

TEST_CASE("validation accepts well-formed data") {
  CHECK(validate(fixtures::dihedral()).ok);
  CHECK(validate(fixtures::f2()).ok);
  CHECK(validate(fixtures::single_vertex(1)).ok);
}

TEST_CASE("validation reports the first violation") {
  GraphOfGroups empty;
  auto r = validate(empty);
  CHECK_FALSE(r.ok);
  CHECK(r.code == ErrorCode::Empty);

  r = validate(raw({{"a", 2}, {"b", 3}}, {{"s", 2}, {"s~", 2}}, pair("s", "a", "b")));
  CHECK(r.code == ErrorCode::DivisibilityViolation);
  CHECK(r.offending_id == "b");

  r = validate(raw({{"a", 4}, {"b", 4}}, {{"s", 2}, {"s~", 4}}, pair("s", "a", "b")));
  CHECK(r.code == ErrorCode::EdgeOrderNotSymmetric);

  r = validate(raw({{"a", 0}, {"b", 4}}, {{"s", 1}, {"s~", 1}}, pair("s", "a", "b")));
  CHECK(r.code == ErrorCode::NonPositiveOrder);
  CHECK(r.offending_id == "a");

  r = validate(raw({{"a", 2}, {"b", 4}}, {{"s", 1}}, pair("s", "a", "b")));
  CHECK(r.code == ErrorCode::MissingOrder);
  CHECK(r.offending_id == "s~");

  r = validate(raw({{"a", 2}, {"b", 4}}, {}, {}));
  CHECK(r.code == ErrorCode::NotConnected);
}

TEST_CASE("orders lookups") {
  auto d = fixtures::dihedral();
  CHECK(d.order_of_vertex("a") == 2);
  CHECK(d.order_of_edge("s~") == 1);
  CHECK(code_of([&] { (void)d.order_of_vertex("q"); }) == ErrorCode::MissingOrder);
  CHECK(code_of([&] { (void)d.order_of_edge("q"); }) == ErrorCode::MissingOrder);
}

TEST_CASE("parser builds half-edge pairs") {
  auto g = parse_gog("# dihedral\nvertex a 2\nvertex b 2   # second\n\nedge s a b 1\n");
  CHECK(g == fixtures::dihedral());
  CHECK(g.graph.bar("s") == "s~");
  CHECK(g.graph.origin("s~") == "b");
}

TEST_CASE("parser errors") {
  CHECK(code_of([] { parse_gog("vertex a\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_gog("vertex a two\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_gog("vertex a -2\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_gog("node a 2\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_gog("vertex a 2\nvertex a 3\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_gog("vertex a~ 2\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_gog("vertex a 2\nedge e a a 1\nedge e a a 1\n"); }) ==
        ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_gog("vertex a 2\nedge e a b 1\n"); }) ==
        ErrorCode::DanglingVertexRef);
  CHECK(code_of([] { parse_gog("vertex a 2\nvertex b 3\nedge e a b 2\n"); }) ==
        ErrorCode::DivisibilityViolation);
  CHECK(code_of([] { parse_gog("vertex a 0\n"); }) == ErrorCode::NonPositiveOrder);
  CHECK(code_of([] { parse_gog(""); }) == ErrorCode::Empty);
  CHECK(code_of([] { parse_gog("vertex a 2\nvertex b 2\n"); }) == ErrorCode::NotConnected);

  try {
    parse_gog("vertex a 2\n\nbogus\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("serialization is canonical") {
  auto g = parse_gog("edge s a b 1\nvertex b 2\nvertex a 2\n");
  CHECK(serialize_gog(g) == "vertex a 2\nvertex b 2\nedge s a b 1\n");
}

TEST_CASE("serialization round-trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_gog(rng);
    auto text = serialize_gog(g);
    auto back = parse_gog(text);
    CHECK(back == g);
    CHECK(serialize_gog(back) == text);
  }
}

TEST_CASE("normalization condition") {
  auto d = fixtures::dihedral();
  auto t = spanning_tree(d.graph, "a");
  CHECK(satisfies_normalization(d, t));
  CHECK_NOTHROW(make_normalized(d, t));

  auto seg = make_gog({{"a", 4}, {"b", 2}}, {{"s", "a", "b", 2}});
  auto ts = spanning_tree(seg.graph, "a");
  CHECK_FALSE(satisfies_normalization(seg, ts));
  CHECK(code_of([&] { make_normalized(seg, ts); }) == ErrorCode::NotNormalized);
  CHECK(code_of([&] { make_normalized(d, SpanningTree{{}, "a"}); }) ==
        ErrorCode::NotNormalized);
}
