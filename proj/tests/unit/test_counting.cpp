#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gog/counting.hpp"
#include "gog/normalize.hpp"
#include "gog/oracle.hpp"

using namespace gog;
using gog::fixtures::code_of;

namespace {

Integer fact(std::uint64_t n) {
  Integer r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= to_integer(i);
  return r;
}

Integer power(std::uint64_t b, std::uint64_t e) {
  Integer r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= to_integer(b);
  return r;
}

// Straight from the product formula, one factor per group.
Rational direct_g(const GraphOfGroups& gog, std::uint64_t lambda) {
  const Order m = m_gamma(gog);
  Integer num = 1, den = 1;
  for (const auto& e : gog.graph.geometric_representatives()) {
    const Order n = gog.order_of_edge(e);
    num *= fact(lambda * m / n) * power(n, lambda * m / n);
  }
  for (const auto& v : gog.graph.vertices()) {
    const Order n = gog.order_of_vertex(v);
    den *= fact(lambda * m / n) * power(n, lambda * m / n);
  }
  return make_rational(num, den);
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("g matches the product formula") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    auto g = oracle::random_gog(rng, {4, 4, 12});
    auto series = g_series(g, 6);
    CHECK(series[0] == 1);
    for (std::uint64_t l = 1; l <= 6; ++l) CHECK(series[l] == direct_g(g, l));
  }
}

TEST_CASE("free group of rank 2") {
  auto f = f_series(fixtures::f2(), 5);
  CHECK(f == ints({1, 3, 13, 71, 461}));
  auto brute = oracle::free_group_subgroup_counts(2, 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(f[i] == to_integer(brute[i]));
}

TEST_CASE("infinite dihedral group has one free subgroup per index") {
  auto f = f_series(fixtures::dihedral(), 30);
  for (const auto& x : f) CHECK(x == 1);
}

TEST_CASE("modular group") {
  CHECK(f_series(fixtures::c2c3(), 3) == ints({5, 60, 1105}));
}

TEST_CASE("finite groups have a single free subgroup") {
  auto f = f_series(fixtures::single_vertex(6), 4);
  CHECK(f == ints({1, 0, 0, 0}));
}

TEST_CASE("convolution holds for computed series") {
  auto s = count_series(fixtures::c2c3(), 12);
  CHECK(s.m == 6);
  CHECK(s.f_at(1) == 5);
  CHECK(convolution_holds(s.g, s.f, s.m));
  auto broken = s.f;
  broken[3] += 1;
  CHECK_FALSE(convolution_holds(s.g, broken, s.m));
}

TEST_CASE("non-integral input is rejected") {
  std::vector<Rational> g{Rational(1), Rational(1, 3)};
  CHECK(code_of([&] { f_from_g(g, 1, false); }) == ErrorCode::NonIntegralCount);
  std::vector<Rational> z{Rational(1), Rational(0)};
  CHECK(code_of([&] { f_from_g(z, 1, false); }) == ErrorCode::NonPositiveCount);
}

TEST_CASE("ODE coefficients from closed forms") {
  // G = (1 - z)^(-1/2) for the dihedral group
  auto d = theta_coeffs(fixtures::dihedral());
  CHECK(d.order == 1);
  CHECK(d.theta == ints({1, 2}));
  // g_lambda = lambda! for F2: theta_0 + theta_1 l + theta_2 l(l-1) = (l+1)^2
  auto f2 = theta_coeffs(fixtures::f2());
  CHECK(f2.order == 2);
  CHECK(f2.theta == ints({1, 3, 1}));
  CHECK_FALSE(f2.truncated());
}

TEST_CASE("ODE holds on computed series") {
  for (const auto& g : {fixtures::dihedral(), fixtures::f2(), fixtures::c2c3(),
                        fixtures::c2c2c2(), fixtures::hnn_index2(3),
                        fixtures::free_group(3), fixtures::c2c4_amalgam(2)}) {
    auto th = theta_coeffs(g, 20);
    CHECK(ode_check(g_series(g, 20), th, m_gamma(g)));
  }
  auto th = theta_coeffs(fixtures::f2());
  auto g = g_series(fixtures::f2(), 10);
  g[5] += 1;
  CHECK_FALSE(ode_check(g, th, 1));
}

TEST_CASE("truncated coefficients refuse long checks") {
  auto g = fixtures::free_group(6);
  auto th = theta_coeffs(g, 3);
  CHECK(th.truncated());
  CHECK(code_of([&] { ode_check(g_series(g, 8), th, 1); }) == ErrorCode::TooLarge);
}

TEST_CASE("rank-2 recurrences") {
  ClassParams two{{"m", 2}};
  CHECK(f_series_rank2(Rank2Class::I, two, 2) == ints({2, 10}));
  CHECK(f_series_rank2(Rank2Class::II, ClassParams{{"m", 1}}, 5) ==
        f_series(fixtures::f2(), 5));
  ClassParams mod{{"m", 6}, {"S", 1}};
  CHECK(f_series_rank2(Rank2Class::III_1, mod, 10) == f_series(fixtures::c2c3(), 10));
  CHECK(f_series_rank2(Rank2Class::V, two, 12) == f_series(fixtures::c2c2c2(), 12));
  CHECK(f_series_rank2(Rank2Class::I, ClassParams{{"m", 6}}, 12) ==
        f_series(fixtures::hnn_index2(3), 12));
  CHECK(f_series_rank2(Rank2Class::III_3, ClassParams{{"m", 12}, {"S", 3}}, 8) ==
        f_series(fixtures::c2c4_amalgam(3), 8));

  CHECK(code_of([] { f_series_rank2(Rank2Class::III_2, ClassParams{{"m", 3}}, 3); }) ==
        ErrorCode::MissingParam);
  CHECK(code_of([] { f_series_rank2(Rank2Class::I, ClassParams{}, 3); }) ==
        ErrorCode::MissingParam);
  CHECK(code_of([] { f_series_rank2(Rank2Class::I, ClassParams{{"m", 3}}, 3); }) ==
        ErrorCode::NonIntegralCount);
}

TEST_CASE("class labels parse") {
  CHECK(parse_rank2_class("III_2") == Rank2Class::III_2);
  CHECK(parse_rank2_class("R2_V") == Rank2Class::V);
  CHECK(to_string(Rank2Class::IV) == "IV");
  CHECK(code_of([] { parse_rank2_class("VI"); }) == ErrorCode::UnknownClass);
}

TEST_CASE("parity of the modular group") {
  auto f = f_series(fixtures::c2c3(), 40);
  auto p = parity_profile(f);
  for (std::size_t l = 1; l <= 40; ++l) {
    const bool mersenne = ((l + 1) & l) == 0;
    CHECK_MESSAGE(p[l - 1] == mersenne, "lambda=" << l);
  }
  CHECK(predicted_parity(Rank2Class::III_1, ClassParams{{"m", 6}, {"S", 1}}, 40) == p);
}

TEST_CASE("constant parity") {
  auto f = f_series(fixtures::f2(), 30);
  auto p = parity_profile(f);
  CHECK(std::all_of(p.begin(), p.end(), [](bool b) { return b; }));
  CHECK(predicted_parity(Rank2Class::II, ClassParams{{"m", 1}}, 30) == p);

  auto h = parity_profile(f_series(fixtures::hnn_index2(1), 30));
  CHECK(std::none_of(h.begin(), h.end(), [](bool b) { return b; }));
  CHECK(predicted_parity(Rank2Class::I, ClassParams{{"m", 2}}, 30) == h);
}

TEST_CASE("growth estimate") {
  auto r = growth_check(fixtures::c2c3(), 20);
  CHECK(r.holds);
  CHECK_FALSE(r.exceptional);
  CHECK(r.first_lambda == 1);

  auto x = growth_check(fixtures::c2c2c2(), 20);
  CHECK(x.holds);
  CHECK(x.exceptional);
  CHECK(x.first_lambda == 2);
  CHECK_FALSE(x.holds_at_one);

  CHECK(code_of([] { growth_check(fixtures::dihedral(), 5); }) == ErrorCode::WrongRank);
}

TEST_CASE("monotonicity") {
  CHECK(strictly_increasing(f_series(fixtures::f2(), 10)));
  CHECK_FALSE(strictly_increasing(f_series(fixtures::dihedral(), 10)));
  CHECK(strictly_increasing({}));
}

TEST_CASE("size guard") {
  CHECK(code_of([] { g_series(fixtures::single_vertex(1000000), 100); }) ==
        ErrorCode::TooLarge);
}
