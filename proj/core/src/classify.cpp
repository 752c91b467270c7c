#include "gog/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gog {

std::string_view to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::FINITE: return "FINITE";
    case ClassLabel::R1_I: return "R1_I";
    case ClassLabel::R1_II: return "R1_II";
    case ClassLabel::R2_I: return "R2_I";
    case ClassLabel::R2_II: return "R2_II";
    case ClassLabel::R2_III_1: return "R2_III_1";
    case ClassLabel::R2_III_2: return "R2_III_2";
    case ClassLabel::R2_III_3: return "R2_III_3";
    case ClassLabel::R2_IV: return "R2_IV";
    case ClassLabel::R2_V: return "R2_V";
    case ClassLabel::HIGHER: return "HIGHER";
  }
  return "?";
}

std::optional<Rank2Class> rank2_class(ClassLabel label) {
  switch (label) {
    case ClassLabel::R2_I: return Rank2Class::I;
    case ClassLabel::R2_II: return Rank2Class::II;
    case ClassLabel::R2_III_1: return Rank2Class::III_1;
    case ClassLabel::R2_III_2: return Rank2Class::III_2;
    case ClassLabel::R2_III_3: return Rank2Class::III_3;
    case ClassLabel::R2_IV: return Rank2Class::IV;
    case ClassLabel::R2_V: return Rank2Class::V;
    default: return std::nullopt;
  }
}

bool segment_rank_two(std::uint64_t a1, std::uint64_t a2) {
  return a1 * a2 == a1 + a2 + std::gcd(a1, a2);
}

namespace {

[[noreturn]] void unclassifiable(const ClassificationReport& r) {
  throw Error(ErrorCode::UnclassifiableShape,
              "normalized datum of rank " + std::to_string(r.rank) +
                  " matches no class");
}

struct Shape {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> loops;      // representatives
  std::vector<EdgeId> segments;   // non-loop representatives
};

Shape shape_of(const Graph& g) {
  Shape s;
  s.vertices.assign(g.vertices().begin(), g.vertices().end());
  for (const auto& e : g.geometric_representatives()) {
    (g.is_loop(e) ? s.loops : s.segments).push_back(e);
  }
  return s;
}

Integer big(Order n) { return to_integer(n); }

void classify_rank_one(const NormalizedGog& ngog, const Shape& s,
                       ClassificationReport& r) {
  const auto& gog = ngog.gog;
  if (s.vertices.size() == 1 && s.loops.size() == 1 && s.segments.empty()) {
    const Order gv = gog.order_of_vertex(s.vertices[0]);
    if (gog.order_of_edge(s.loops[0]) == gv) {
      r.label = ClassLabel::R1_I;
      r.params["G"] = big(gv);
      r.witness = {s.vertices[0], s.loops[0]};
      return;
    }
  }
  if (s.vertices.size() == 2 && s.loops.empty() && s.segments.size() == 1) {
    const EdgeId& e = s.segments[0];
    const Order a = gog.order_of_edge(e);
    const Order g1 = gog.order_of_vertex(gog.graph.origin(e));
    const Order g2 = gog.order_of_vertex(gog.graph.terminus(e));
    if (g1 == 2 * a && g2 == 2 * a) {
      r.label = ClassLabel::R1_II;
      r.params["A"] = big(a);
      r.witness = {gog.graph.origin(e), e, gog.graph.terminus(e)};
      return;
    }
  }
  unclassifiable(r);
}

void classify_rank_two(const NormalizedGog& ngog, const Shape& s,
                       ClassificationReport& r) {
  const auto& gog = ngog.gog;
  const auto& g = gog.graph;
  const std::size_t nv = s.vertices.size();
  const std::size_t ne = s.loops.size() + s.segments.size();

  if (nv == 1 && ne == 1) {
    // (i) HNN extension with (G:A) = 2.
    const Order gv = gog.order_of_vertex(s.vertices[0]);
    const Order a = gog.order_of_edge(s.loops[0]);
    if (gv == 2 * a) {
      r.label = ClassLabel::R2_I;
      r.params["A"] = big(a);
      r.params["index"] = 2;
      r.witness = {s.vertices[0], s.loops[0]};
      return;
    }
  } else if (nv == 1 && ne == 2) {
    // (ii) both loops iso onto the vertex group: G normal with quotient F2.
    const Order gv = gog.order_of_vertex(s.vertices[0]);
    if (gog.order_of_edge(s.loops[0]) == gv && gog.order_of_edge(s.loops[1]) == gv) {
      r.label = ClassLabel::R2_II;
      r.params["G"] = big(gv);
      r.witness = {s.vertices[0], s.loops[0], s.loops[1]};
      return;
    }
  } else if (nv == 2 && ne == 1) {
    // (iii) G1 *_S G2.
    const EdgeId& e = s.segments[0];
    const Order so = gog.order_of_edge(e);
    Order a1 = gog.order_of_vertex(g.origin(e)) / so;
    Order a2 = gog.order_of_vertex(g.terminus(e)) / so;
    if (a1 > a2) std::swap(a1, a2);
    if (segment_rank_two(a1, a2)) {
      if (a1 == 2 && a2 == 3) r.label = ClassLabel::R2_III_1;
      else if (a1 == 3 && a2 == 3) r.label = ClassLabel::R2_III_2;
      else if (a1 == 2 && a2 == 4) r.label = ClassLabel::R2_III_3;
      else unclassifiable(r);
      r.params["S"] = big(so);
      r.params["a1"] = big(a1);
      r.params["a2"] = big(a2);
      r.witness = {g.origin(e), e, g.terminus(e)};
      return;
    }
  } else if (nv == 2 && s.loops.size() == 1 && s.segments.size() == 1) {
    // (iv) G1 *_S1 Gamma2 with Gamma2 the loop at v2 of rank-1 class I.
    const EdgeId& seg = s.segments[0];
    const EdgeId& loop = s.loops[0];
    const VertexId& v2 = g.origin(loop);
    const VertexId& v1 = g.origin(seg) == v2 ? g.terminus(seg) : g.origin(seg);
    const Order s1 = gog.order_of_edge(seg);
    const Order s2 = gog.order_of_edge(loop);
    const Order g1 = gog.order_of_vertex(v1);
    const Order g2 = gog.order_of_vertex(v2);
    if (g1 == 2 * s1 && g2 == 2 * s1 && g2 == s2) {
      r.label = ClassLabel::R2_IV;
      r.params["S1"] = big(s1);
      r.params["S2"] = big(s2);
      r.witness = {v1, seg, v2, loop};
      return;
    }
  } else if (nv == 2 && s.segments.size() == 2) {
    // Two parallel edges. Normalisation only constrains the tree edge, so
    // the other edge may embed onto both ends; contracting it instead leaves
    // a loop of index 2, i.e. class (i).
    const EdgeId& tree_edge =
        ngog.tree.edges.contains(s.segments[0]) ? s.segments[0] : s.segments[1];
    const EdgeId& other = tree_edge == s.segments[0] ? s.segments[1] : s.segments[0];
    const Order a = gog.order_of_edge(tree_edge);
    const Order g1 = gog.order_of_vertex(g.origin(tree_edge));
    const Order g2 = gog.order_of_vertex(g.terminus(tree_edge));
    if (g1 == 2 * a && g2 == 2 * a && gog.order_of_edge(other) == g1) {
      r.label = ClassLabel::R2_I;
      r.params["A"] = big(a);
      r.params["index"] = 2;
      r.witness = {g.origin(tree_edge), other, g.terminus(tree_edge), tree_edge};
      return;
    }
  } else if (nv == 3 && s.segments.size() == 2) {
    // (v) path G1 - S1 - G2 - S2 - G3, all |G_i| = 2|S_j|.
    std::map<VertexId, int> degree;
    for (const auto& e : s.segments) {
      ++degree[g.origin(e)];
      ++degree[g.terminus(e)];
    }
    auto mid = std::find_if(degree.begin(), degree.end(),
                            [](const auto& kv) { return kv.second == 2; });
    if (mid != degree.end()) {
      const Order s1 = gog.order_of_edge(s.segments[0]);
      const Order s2 = gog.order_of_edge(s.segments[1]);
      bool ok = s1 == s2;
      for (const auto& v : s.vertices) ok = ok && gog.order_of_vertex(v) == 2 * s1;
      if (ok) {
        auto other_end = [&](const EdgeId& e) {
          return g.origin(e) == mid->first ? g.terminus(e) : g.origin(e);
        };
        r.label = ClassLabel::R2_V;
        r.params["S1"] = big(s1);
        r.params["S2"] = big(s2);
        r.witness = {other_end(s.segments[0]), s.segments[0], mid->first,
                     s.segments[1], other_end(s.segments[1])};
        return;
      }
    }
  }
  unclassifiable(r);
}

}  // namespace

ClassificationReport classify(const NormalizedGog& ngog) {
  require_valid(ngog.gog);
  if (!satisfies_normalization(ngog.gog, ngog.tree)) {
    throw Error(ErrorCode::NotNormalized, "classify needs a normalized datum");
  }
  ClassificationReport r;
  r.rank = free_rank(ngog.gog);
  r.type = type_vector(ngog.gog);
  r.params["m"] = to_integer(r.type.m);
  const Shape s = shape_of(ngog.gog.graph);
  switch (r.rank) {
    case 0:
      r.label = ClassLabel::FINITE;
      r.witness = s.vertices;
      break;
    case 1: classify_rank_one(ngog, s, r); break;
    case 2: classify_rank_two(ngog, s, r); break;
    default:
      r.label = ClassLabel::HIGHER;
      break;
  }
  return r;
}

std::string render(const ClassificationReport& r) {
  std::ostringstream out;
  auto p = [&](const char* key) { return r.params.at(key).get_str(); };
  out << "rank=" << r.rank << " class=";
  switch (r.label) {
    case ClassLabel::FINITE: out << "FINITE m=" << p("m"); break;
    case ClassLabel::R1_I: out << "I m=" << p("m"); break;
    case ClassLabel::R1_II: out << "II m=" << p("m") << " |A|=" << p("A"); break;
    case ClassLabel::R2_I:
      out << "I m=" << p("m") << " (G:A)=2 |A|=" << p("A");
      break;
    case ClassLabel::R2_II: out << "II m=" << p("m") << " |G|=" << p("G"); break;
    case ClassLabel::R2_III_1:
    case ClassLabel::R2_III_2:
    case ClassLabel::R2_III_3:
      out << to_string(*rank2_class(r.label)) << " a=(" << p("a1") << ","
          << p("a2") << ") |S|=" << p("S");
      break;
    case ClassLabel::R2_IV:
    case ClassLabel::R2_V:
      out << to_string(*rank2_class(r.label)) << " m=" << p("m")
          << " |S1|=" << p("S1") << " |S2|=" << p("S2");
      break;
    case ClassLabel::HIGHER: out << "HIGHER m=" << p("m"); break;
  }
  return out.str();
}

bool structural_criterion(const NormalizedGog& ngog) {
  const auto& gog = ngog.gog;
  const auto& g = gog.graph;
  const auto reps = g.geometric_representatives();
  if (g.vertex_count() == 1) {
    if (reps.size() > 1) return true;
    if (reps.size() == 1) {
      const EdgeId& e = reps[0];
      return gog.order_of_vertex(g.terminus(e)) / gog.order_of_edge(e) >= 2;
    }
    return false;
  }
  if (!is_tree(g)) return true;
  if (reps.size() >= 2) return true;
  // A single segment: materialize the amalgam datum and test its chi.
  const EdgeId& e = reps[0];
  const VertexId& o = g.origin(e);
  const VertexId& t = g.terminus(e);
  const GraphOfGroups amalgam = make_gog(
      {{o, gog.order_of_vertex(o)}, {t, gog.order_of_vertex(t)}},
      {{e, o, t, gog.order_of_edge(e)}});
  return euler_char(amalgam) < 0;
}

LargenessReport largeness_report(const NormalizedGog& ngog, std::size_t n) {
  LargenessReport r;
  r.chi_negative = euler_char(ngog.gog) < 0;
  r.rank_ge_2 = free_rank(ngog.gog) >= 2;
  r.structural_vii = structural_criterion(ngog);
  r.prefix = n;
  r.f_strictly_increasing_prefix = strictly_increasing(f_series(ngog.gog, n));
  return r;
}

bool distinguish_rank1(const ClassificationReport& a, const ClassificationReport& b) {
  for (const auto* r : {&a, &b}) {
    if (r->rank != 1) {
      throw Error(ErrorCode::WrongRank,
                  "expected rank 1, got " + std::to_string(r->rank));
    }
    const auto& zeta = r->type.zeta;
    bool witness = false;
    if (r->label == ClassLabel::R1_I) {
      witness = std::all_of(zeta.begin(), zeta.end(),
                            [](const auto& kv) { return kv.second == 0; });
    } else if (r->label == ClassLabel::R1_II) {
      witness = zeta.at(r->type.m) == -1;
    }
    if (!witness) {
      throw Error(ErrorCode::InvariantViolation,
                  "type vector does not match label " +
                      std::string(to_string(r->label)));
    }
  }
  return a.label != b.label;
}

}  // namespace gog
