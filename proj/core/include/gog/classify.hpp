#pragma once

// Classification of normalized decompositions of free rank at most 2, and
// the exactly computable largeness criteria.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gog/counting.hpp"
#include "gog/graph_of_groups.hpp"
#include "gog/invariants.hpp"

namespace gog {

enum class ClassLabel {
  FINITE,
  R1_I,    // finite normal subgroup, infinite cyclic quotient
  R1_II,   // G1 *_A G2 with A of index 2 in both
  R2_I,    // HNN extension of G with (G:A) = 2
  R2_II,   // finite normal subgroup, quotient F2
  R2_III_1,
  R2_III_2,
  R2_III_3,
  R2_IV,
  R2_V,
  HIGHER,
};

std::string_view to_string(ClassLabel label);

/// The rank-2 recurrence class for R2_* labels.
std::optional<Rank2Class> rank2_class(ClassLabel label);

struct ClassificationReport {
  std::uint64_t rank = 0;
  ClassLabel label = ClassLabel::FINITE;
  ClassParams params;
  /// Vertex and edge ids realizing the shape, in the order the class names them.
  std::vector<std::string> witness;
  TypeVector type;
};

/// Throws UnclassifiableShape if a rank <= 2 input matches no class; that
/// cannot happen for genuine normalized data.
ClassificationReport classify(const NormalizedGog& ngog);

/// One line, e.g. "rank=2 class=III_1 a=(2,3) |S|=1".
std::string render(const ClassificationReport& report);

/// a1 a2 - a1 - a2 == gcd(a1, a2): free rank 2 for a segment with indices
/// a1, a2.
bool segment_rank_two(std::uint64_t a1, std::uint64_t a2);

struct LargenessReport {
  bool chi_negative = false;
  bool rank_ge_2 = false;
  bool structural_vii = false;
  bool f_strictly_increasing_prefix = false;
  std::size_t prefix = 0;
};

/// Structural criterion on the normalized graph: one vertex with more than
/// one geometric edge or a single loop of index >= 2; or several vertices and
/// not a tree, a tree with >= 2 geometric edges, or a single segment whose
/// amalgam has negative Euler characteristic.
bool structural_criterion(const NormalizedGog& ngog);

LargenessReport largeness_report(const NormalizedGog& ngog, std::size_t n);

/// Rank-1 classes are told apart by the type: class I has every zeta equal to
/// 0, class II has zeta_m = -1. Throws WrongRank, or InvariantViolation if a
/// report's type disagrees with its label.
bool distinguish_rank1(const ClassificationReport& a, const ClassificationReport& b);

}  // namespace gog
