#include "gog/invariants.hpp"

namespace gog {

Order m_gamma(const GraphOfGroups& gog) {
  Order m = 1;
  for (const auto& v : gog.graph.vertices()) {
    m = checked_lcm(m, gog.order_of_vertex(v));
  }
  return m;
}

Rational euler_char(const GraphOfGroups& gog) {
  Rational chi = 0;
  for (const auto& v : gog.graph.vertices()) {
    chi += make_rational(1, to_integer(gog.order_of_vertex(v)));
  }
  for (const auto& e : gog.graph.geometric_representatives()) {
    chi -= make_rational(1, to_integer(gog.order_of_edge(e)));
  }
  return chi;
}

std::vector<Order> divisors(Order n) {
  std::vector<Order> small;
  std::vector<Order> large;
  for (Order d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

TypeVector type_vector(const GraphOfGroups& gog) {
  TypeVector tv;
  tv.m = m_gamma(gog);
  for (Order kappa : divisors(tv.m)) {
    std::int64_t z = 0;
    for (const auto& e : gog.graph.geometric_representatives()) {
      if (kappa % gog.order_of_edge(e) == 0) ++z;
    }
    for (const auto& v : gog.graph.vertices()) {
      if (kappa % gog.order_of_vertex(v) == 0) --z;
    }
    tv.zeta[kappa] = z;
  }
  return tv;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Rational euler_from_type(const TypeVector& tv) {
  Integer sum = 0;
  for (const auto& [kappa, z] : tv.zeta) {
    sum += to_integer(totient(tv.m / kappa)) * Integer(static_cast<long>(z));
  }
  return make_rational(-sum, to_integer(tv.m));
}

std::uint64_t free_rank(const GraphOfGroups& gog) {
  const Rational mu = 1 - Rational(to_integer(m_gamma(gog))) * euler_char(gog);
  if (!is_integral(mu) || mu < 0 || !mu.get_num().fits_ulong_p()) {
    throw Error(ErrorCode::NonIntegralRank,
                "1 - m*chi = " + format_rational(mu) +
                    " is not a nonnegative integer");
  }
  return mu.get_num().get_ui();
}

bool check_edge_bound(const NormalizedGog& ngog) {
  return ngog.gog.graph.half_edge_count() <= 2 * free_rank(ngog.gog);
}

bool type_vector_invariants_hold(const TypeVector& tv, const GraphOfGroups& gog) {
  for (const auto& [kappa, z] : tv.zeta) {
    if (kappa < tv.m && z < 0) return false;
  }
  auto top = tv.zeta.find(tv.m);
  if (top == tv.zeta.end() || top->second < -1) return false;
  return (top->second == -1) == is_tree(gog.graph);
}

}  // namespace gog
