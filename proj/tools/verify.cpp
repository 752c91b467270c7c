#include <random>
#include <sstream>

#include "cli.hpp"
#include "gog/classify.hpp"
#include "gog/counting.hpp"
#include "gog/normalize.hpp"
#include "gog/oracle.hpp"

namespace gog::cli {

namespace {

std::string count_detail(std::size_t n, const std::string& what) {
  return std::to_string(n) + " " + what;
}

std::vector<PropertyResult> convolution_suite(unsigned long long seed,
                                              unsigned long long bound) {
  const std::size_t terms = bound ? bound : 15;
  std::mt19937_64 rng(seed);
  bool identity = true;
  bool invariant = true;
  constexpr std::size_t kData = 100;
  for (std::size_t i = 0; i < kData; ++i) {
    const auto gog = oracle::random_gog(rng);
    const auto series = count_series(gog, terms);
    identity = identity && convolution_holds(series.g, series.f, series.m);
    const auto normalized = normalize(gog).normalized.gog;
    invariant = invariant && f_series(normalized, terms) == series.f;
  }
  const auto detail = count_detail(kData, "random data, lambda<=" + std::to_string(terms));
  return {{"convolution identity", identity, detail},
          {"f invariant under normalize", invariant, detail}};
}

std::vector<PropertyResult> ode_suite(unsigned long long bound) {
  constexpr std::size_t kLambda = 30;
  auto data = oracle::exhaustive_rank2_shapes(bound ? bound : 6);
  data.push_back(make_gog({{"a", 2}, {"b", 2}}, {{"s", "a", "b", 1}}));
  data.push_back(make_gog({{"v", 1}}, {{"p", "v", "v", 1}, {"q", "v", "v", 1}}));
  bool ok = true;
  for (const auto& gog : data) {
    ok = ok && ode_check(g_series(gog, kLambda + 1), theta_coeffs(gog, kLambda),
                         m_gamma(gog));
  }
  const auto dihedral = theta_coeffs(data[data.size() - 2]);
  const bool theta_ok =
      dihedral.theta == std::vector<Integer>{Integer(1), Integer(2)};
  return {{"ode recurrence", ok, count_detail(data.size(), "data, lambda<=30")},
          {"dihedral theta = (1, 2)", theta_ok, ""}};
}

std::vector<PropertyResult> parity_suite(unsigned long long bound) {
  constexpr std::size_t kLambda = 64;
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& gog : oracle::exhaustive_rank2_shapes(bound ? bound : 8)) {
    if (free_rank(gog) != 2) continue;
    const auto report = classify(normalize(gog).normalized);
    const auto cls = *rank2_class(report.label);
    ok = ok && parity_profile(f_series(gog, kLambda)) ==
                   predicted_parity(cls, report.params, kLambda);
    ++checked;
  }
  return {{"parity prediction", ok, count_detail(checked, "rank-2 data, lambda<=64")}};
}

std::vector<PropertyResult> growth_suite(unsigned long long bound) {
  constexpr std::size_t kLambda = 25;
  std::size_t checked = 0;
  bool ok = true;
  bool exception_seen = false;
  for (const auto& gog : oracle::exhaustive_rank2_shapes(bound ? bound : 8)) {
    if (free_rank(gog) != 2) continue;
    const auto r = growth_check(gog, kLambda);
    ok = ok && r.holds && r.holds_at_one == !r.exceptional;
    exception_seen = exception_seen || r.exceptional;
    ++checked;
  }
  return {{"growth estimate", ok, count_detail(checked, "rank-2 data, lambda<=25")},
          {"C2*C2*C2 fails at lambda=1 only", exception_seen, ""}};
}

std::vector<PropertyResult> oracle_suite(unsigned long long seed,
                                         unsigned long long bound) {
  std::vector<PropertyResult> out;
  const std::size_t n2 = bound ? std::min<unsigned long long>(bound, 6) : 5;
  const std::size_t n3 = bound ? std::min<unsigned long long>(bound, 5) : 4;
  for (auto [rank, n] : {std::pair<std::size_t, std::size_t>{2, n2}, {3, n3}}) {
    std::vector<std::pair<VertexId, Order>> vs{{"v", 1}};
    std::vector<EdgeSpec> loops;
    for (std::size_t i = 0; i < rank; ++i) {
      loops.push_back({"l" + std::to_string(i), "v", "v", 1});
    }
    const auto f = f_series(make_gog(vs, loops), n);
    const auto s = oracle::free_group_subgroup_counts(rank, n);
    bool same = f.size() == s.size();
    for (std::size_t i = 0; same && i < s.size(); ++i) same = f[i] == to_integer(s[i]);
    out.push_back({"free group rank " + std::to_string(rank) + " counts", same,
                   "index<=" + std::to_string(n)});
  }
  std::mt19937_64 rng(seed);
  bool unique = true;
  for (int i = 0; i < 200; ++i) {
    const auto tree = oracle::random_tree(rng, 10);
    const auto& vs = tree.vertices();
    auto it = vs.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng));
    unique = unique &&
             oracle::orientation_uniqueness(tree, spanning_tree(tree, *vs.begin()), *it);
  }
  out.push_back({"tree orientation uniqueness", unique, "200 random trees"});
  return out;
}

}  // namespace

std::vector<PropertyResult> run_suite(const std::string& suite, unsigned long long seed,
                                      unsigned long long bound) {
  if (suite == "convolution") return convolution_suite(seed, bound);
  if (suite == "ode") return ode_suite(bound);
  if (suite == "parity") return parity_suite(bound);
  if (suite == "growth") return growth_suite(bound);
  if (suite == "oracle") return oracle_suite(seed, bound);
  return {};
}

}  // namespace gog::cli
