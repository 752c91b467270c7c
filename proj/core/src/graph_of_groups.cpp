#include "gog/graph_of_groups.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace gog {

Order GraphOfGroups::order_of_vertex(const VertexId& v) const {
  auto it = vertex_order.find(v);
  if (it == vertex_order.end()) {
    throw Error(ErrorCode::MissingOrder, "no order for vertex '" + v + "'");
  }
  return it->second;
}

Order GraphOfGroups::order_of_edge(const EdgeId& e) const {
  auto it = edge_order.find(e);
  if (it == edge_order.end()) {
    throw Error(ErrorCode::MissingOrder, "no order for edge '" + e + "'");
  }
  return it->second;
}

GraphOfGroups make_gog(const std::vector<std::pair<VertexId, Order>>& vertices,
                       const std::vector<EdgeSpec>& edges) {
  std::vector<VertexId> ids;
  GraphOfGroups out;
  for (const auto& [v, n] : vertices) {
    ids.push_back(v);
    out.vertex_order[v] = n;
  }
  std::vector<EdgeRecord> records;
  for (const auto& e : edges) {
    const EdgeId rev = e.id + "~";
    records.push_back({e.id, rev, e.origin, e.terminus});
    records.push_back({rev, e.id, e.terminus, e.origin});
    out.edge_order[e.id] = e.order;
    out.edge_order[rev] = e.order;
  }
  out.graph = build_graph(ids, records);
  require_valid(out);
  return out;
}

namespace {

ValidationReport failure(ErrorCode code, std::string id, std::string message) {
  return {false, code, std::move(id), std::move(message)};
}

}  // namespace

ValidationReport validate(const GraphOfGroups& gog) {
  const Graph& g = gog.graph;
  if (g.vertices().empty()) {
    return failure(ErrorCode::Empty, "", "graph has no vertices");
  }
  for (const auto& v : g.vertices()) {
    auto it = gog.vertex_order.find(v);
    if (it == gog.vertex_order.end()) {
      return failure(ErrorCode::MissingOrder, v, "vertex '" + v + "' has no order");
    }
    if (it->second == 0) {
      return failure(ErrorCode::NonPositiveOrder, v,
                     "vertex '" + v + "' has order 0");
    }
  }
  for (const auto& e : g.half_edges()) {
    auto it = gog.edge_order.find(e);
    if (it == gog.edge_order.end()) {
      return failure(ErrorCode::MissingOrder, e, "edge '" + e + "' has no order");
    }
    if (it->second == 0) {
      return failure(ErrorCode::NonPositiveOrder, e, "edge '" + e + "' has order 0");
    }
  }
  for (const auto& [v, n] : gog.vertex_order) {
    if (!g.has_vertex(v)) {
      return failure(ErrorCode::DanglingVertexRef, v,
                     "order given for unknown vertex '" + v + "'");
    }
  }
  for (const auto& [e, n] : gog.edge_order) {
    if (!g.has_edge(e)) {
      return failure(ErrorCode::UnknownEdge, e,
                     "order given for unknown edge '" + e + "'");
    }
  }
  if (!is_connected(g)) {
    return failure(ErrorCode::NotConnected, "", "graph is not connected");
  }
  for (const auto& e : g.half_edges()) {
    if (gog.edge_order.at(e) != gog.edge_order.at(g.bar(e))) {
      return failure(ErrorCode::EdgeOrderNotSymmetric, e,
                     "edge '" + e + "' and its reverse have different orders");
    }
  }
  for (const auto& e : g.half_edges()) {
    const auto& t = g.terminus(e);
    const Order n = gog.edge_order.at(e);
    const Order vt = gog.vertex_order.at(t);
    if (vt % n != 0) {
      return failure(ErrorCode::DivisibilityViolation, t,
                     "edge '" + e + "' of order " + std::to_string(n) +
                         " does not embed in vertex '" + t + "' of order " +
                         std::to_string(vt));
    }
  }
  return {};
}

void require_valid(const GraphOfGroups& gog) {
  auto report = validate(gog);
  if (!report) throw Error(report.code, report.message);
}

namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

Order parse_order(std::string_view tok, std::size_t line) {
  Order value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    syntax_error(line, "invalid order '" + std::string(tok) + "'");
  }
  return value;
}

void check_id(const std::string& id, std::size_t line) {
  if (id.find('~') != std::string::npos) {
    syntax_error(line, "id '" + id + "' contains reserved character '~'");
  }
}

}  // namespace

GraphOfGroups parse_gog(std::string_view text) {
  std::vector<std::pair<VertexId, Order>> vertices;
  std::map<VertexId, std::size_t> vertex_line;
  std::vector<std::pair<EdgeSpec, std::size_t>> edges;
  std::set<EdgeId> edge_ids;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "vertex") {
      if (tok.size() != 3) syntax_error(line_no, "expected 'vertex <id> <order>'");
      check_id(tok[1], line_no);
      if (!vertex_line.emplace(tok[1], line_no).second) {
        syntax_error(line_no, "duplicate vertex id '" + tok[1] + "'");
      }
      vertices.emplace_back(tok[1], parse_order(tok[2], line_no));
    } else if (tok[0] == "edge") {
      if (tok.size() != 5) {
        syntax_error(line_no,
                     "expected 'edge <id> <origin> <terminus> <order>'");
      }
      for (std::size_t i = 1; i <= 3; ++i) check_id(tok[i], line_no);
      if (!edge_ids.insert(tok[1]).second) {
        syntax_error(line_no, "duplicate edge id '" + tok[1] + "'");
      }
      edges.push_back({{tok[1], tok[2], tok[3], parse_order(tok[4], line_no)}, line_no});
    } else {
      syntax_error(line_no, "unknown directive '" + tok[0] + "'");
    }
  }

  for (const auto& [e, line] : edges) {
    for (const auto* v : {&e.origin, &e.terminus}) {
      if (!vertex_line.contains(*v)) {
        throw Error(ErrorCode::DanglingVertexRef,
                    "line " + std::to_string(line) + ": edge '" + e.id +
                        "' references undeclared vertex '" + *v + "'");
      }
    }
  }
  std::vector<EdgeSpec> specs;
  for (const auto& [e, line] : edges) specs.push_back(e);
  return make_gog(vertices, specs);
}

std::string serialize_gog(const GraphOfGroups& gog) {
  std::ostringstream out;
  for (const auto& v : gog.graph.vertices()) {
    out << "vertex " << v << ' ' << gog.order_of_vertex(v) << '\n';
  }
  for (const auto& e : gog.graph.geometric_representatives()) {
    out << "edge " << e << ' ' << gog.graph.origin(e) << ' '
        << gog.graph.terminus(e) << ' ' << gog.order_of_edge(e) << '\n';
  }
  return out.str();
}

bool satisfies_normalization(const GraphOfGroups& gog, const SpanningTree& tree) {
  for (const auto& e : tree.edges) {
    if (gog.order_of_edge(e) >= gog.order_of_vertex(gog.graph.terminus(e))) {
      return false;
    }
  }
  return true;
}

NormalizedGog make_normalized(GraphOfGroups gog, SpanningTree tree) {
  require_valid(gog);
  if (!is_spanning_tree(gog.graph, tree)) {
    throw Error(ErrorCode::NotNormalized, "tree is not a spanning tree");
  }
  if (!satisfies_normalization(gog, tree)) {
    throw Error(ErrorCode::NotNormalized,
                "a tree edge embeds onto its terminus group");
  }
  return {std::move(gog), std::move(tree)};
}

}  // namespace gog
