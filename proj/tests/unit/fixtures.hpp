#pragma once

#include <functional>
#include <optional>

#include "gog/error.hpp"
#include "gog/graph_of_groups.hpp"

namespace gog::fixtures {

/// The code of the Error thrown by f, or nullopt when nothing is thrown.
inline std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// C2 * C2
inline GraphOfGroups dihedral() {
  return make_gog({{"a", 2}, {"b", 2}}, {{"s", "a", "b", 1}});
}

// free group of rank r: one trivial vertex, r trivial loops
inline GraphOfGroups free_group(std::size_t rank) {
  std::vector<EdgeSpec> loops;
  for (std::size_t i = 0; i < rank; ++i) {
    loops.push_back({"l" + std::to_string(i), "v", "v", 1});
  }
  return make_gog({{"v", 1}}, loops);
}

inline GraphOfGroups f2() {
  return make_gog({{"v", 1}}, {{"p", "v", "v", 1}, {"q", "v", "v", 1}});
}

inline GraphOfGroups c2c3() {
  return make_gog({{"a", 2}, {"b", 3}}, {{"s", "a", "b", 1}});
}

inline GraphOfGroups c2c2c2() {
  return make_gog({{"a", 2}, {"b", 2}, {"c", 2}},
                  {{"s", "a", "b", 1}, {"t", "b", "c", 1}});
}

// vertex of order n with a loop embedding isomorphically: finite-by-Z
inline GraphOfGroups finite_by_z(Order n) {
  return make_gog({{"v", n}}, {{"t", "v", "v", n}});
}

// HNN extension with (G:A) = 2
inline GraphOfGroups hnn_index2(Order a) {
  return make_gog({{"v", 2 * a}}, {{"t", "v", "v", a}});
}

// G1 *_S G2 with |G1| = 2|S|, |G2| = 4|S|
inline GraphOfGroups c2c4_amalgam(Order s) {
  return make_gog({{"a", 2 * s}, {"b", 4 * s}}, {{"e", "a", "b", s}});
}

inline GraphOfGroups single_vertex(Order n) { return make_gog({{"v", n}}, {}); }

}  // namespace gog::fixtures
