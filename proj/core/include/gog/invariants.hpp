#pragma once

#include <cstdint>
#include <map>

#include "gog/arith.hpp"
#include "gog/graph_of_groups.hpp"

namespace gog {

/// m together with zeta_kappa for every divisor kappa of m. Only divisor
/// positions are stored.
struct TypeVector {
  Order m = 1;
  std::map<Order, std::int64_t> zeta;

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
};

/// lcm of the vertex orders.
Order m_gamma(const GraphOfGroups& gog);

/// sum_v 1/|G(v)| - sum over geometric edges 1/|G(e)|.
Rational euler_char(const GraphOfGroups& gog);

TypeVector type_vector(const GraphOfGroups& gog);

/// -(1/m) sum_{kappa | m} phi(m/kappa) zeta_kappa.
Rational euler_from_type(const TypeVector& tv);

std::uint64_t totient(std::uint64_t n);

/// Ascending divisors of n.
std::vector<Order> divisors(Order n);

/// 1 - m chi; throws NonIntegralRank unless it is a nonnegative integer.
std::uint64_t free_rank(const GraphOfGroups& gog);

/// |half-edges| <= 2 mu, which holds for every normalized decomposition.
bool check_edge_bound(const NormalizedGog& ngog);

/// zeta_kappa >= 0 for kappa < m, zeta_m >= -1, and zeta_m == -1 iff the
/// graph is a tree.
bool type_vector_invariants_hold(const TypeVector& tv, const GraphOfGroups& gog);

}  // namespace gog
