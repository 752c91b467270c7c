#include "gog/counting.hpp"

#include <numeric>

namespace gog {

namespace {

// Beyond this lambda*m the factorials stop being desk-scale.
constexpr std::uint64_t kMaxFactorialArgument = 20'000'000;

// Net exponent of each order in g_lambda: +1 per geometric edge, -1 per vertex.
std::map<Order, std::int64_t> net_exponents(const GraphOfGroups& gog) {
  std::map<Order, std::int64_t> c;
  for (const auto& e : gog.graph.geometric_representatives()) {
    ++c[gog.order_of_edge(e)];
  }
  for (const auto& v : gog.graph.vertices()) --c[gog.order_of_vertex(v)];
  return c;
}

Integer integer_pow(const Integer& base, std::uint64_t exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Integer factorial(std::uint64_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

std::vector<Rational> g_series(const GraphOfGroups& gog, std::size_t n) {
  require_valid(gog);
  const Order m = m_gamma(gog);
  if (n > 0 && m > kMaxFactorialArgument / n) {
    throw Error(ErrorCode::TooLarge, "lambda*m = " + std::to_string(n) + "*" +
                                         std::to_string(m) + " is too large");
  }

  // F_d(lambda) = (lambda m/d)! d^(lambda m/d), advanced one lambda at a time.
  struct Factor {
    Order d;
    std::int64_t exponent;
    Integer value = 1;
  };
  std::vector<Factor> factors;
  for (const auto& [d, c] : net_exponents(gog)) {
    if (c != 0) factors.push_back({d, c});
  }

  std::vector<Rational> g;
  g.reserve(n + 1);
  g.emplace_back(1);
  for (std::size_t lambda = 1; lambda <= n; ++lambda) {
    Integer num = 1;
    Integer den = 1;
    for (auto& fac : factors) {
      const std::uint64_t step = m / fac.d;
      const Integer d = to_integer(fac.d);
      for (std::uint64_t i = (lambda - 1) * step + 1; i <= lambda * step; ++i) {
        fac.value *= to_integer(i) * d;
      }
      if (fac.exponent > 0) {
        num *= integer_pow(fac.value, static_cast<std::uint64_t>(fac.exponent));
      } else {
        den *= integer_pow(fac.value, static_cast<std::uint64_t>(-fac.exponent));
      }
    }
    g.push_back(make_rational(num, den));
  }
  return g;
}

std::vector<Integer> f_from_g(const std::vector<Rational>& g, Order m,
                              bool allow_zero) {
  std::vector<Integer> f;
  const Rational mq(to_integer(m));
  for (std::size_t lambda = 1; lambda < g.size(); ++lambda) {
    Rational value = mq * Rational(to_integer(lambda)) * g[lambda];
    for (std::size_t mu = 1; mu < lambda; ++mu) {
      value -= g[mu] * Rational(f[lambda - mu - 1]);
    }
    if (!is_integral(value)) {
      throw Error(ErrorCode::NonIntegralCount,
                  "f_" + std::to_string(lambda) + " = " + format_rational(value));
    }
    if (value < 0 || (value == 0 && !allow_zero)) {
      throw Error(ErrorCode::NonPositiveCount,
                  "f_" + std::to_string(lambda) + " = " + format_rational(value));
    }
    f.push_back(value.get_num());
  }
  return f;
}

std::vector<Integer> f_series(const GraphOfGroups& gog, std::size_t n) {
  return count_series(gog, n).f;
}

CountSeries count_series(const GraphOfGroups& gog, std::size_t n) {
  CountSeries out;
  out.m = m_gamma(gog);
  out.g = g_series(gog, n);
  out.f = f_from_g(out.g, out.m, free_rank(gog) == 0);
  return out;
}

bool convolution_holds(const std::vector<Rational>& g,
                       const std::vector<Integer>& f, Order m) {
  if (g.empty() || g[0] != 1) return false;
  const std::size_t top = std::min(g.size() - 1, f.size());
  for (std::size_t lambda = 1; lambda <= top; ++lambda) {
    Rational lhs = 0;
    for (std::size_t mu = 0; mu < lambda; ++mu) {
      lhs += g[mu] * Rational(f[lambda - mu - 1]);
    }
    if (lhs != Rational(to_integer(m)) * Rational(to_integer(lambda)) * g[lambda]) {
      return false;
    }
  }
  return true;
}

ThetaCoeffs theta_coeffs(const TypeVector& tv, std::size_t rank,
                         std::size_t max_index) {
  const Order m = tv.m;
  const std::size_t top = std::min(rank, max_index);

  // P(j) = prod_{kappa | m} prod_{1<=k<=m, gcd(m,k)=kappa} (jm + k)^zeta_kappa.
  std::vector<Rational> p(top + 1);
  for (std::size_t j = 0; j <= top; ++j) {
    Integer num = 1;
    Integer den = 1;
    for (Order k = 1; k <= m; ++k) {
      const std::int64_t z = tv.zeta.at(std::gcd(m, k));
      if (z == 0) continue;
      const Integer base = to_integer(j) * to_integer(m) + to_integer(k);
      if (z > 0) {
        num *= integer_pow(base, static_cast<std::uint64_t>(z));
      } else {
        den *= integer_pow(base, static_cast<std::uint64_t>(-z));
      }
    }
    p[j] = make_rational(num, den);
  }

  ThetaCoeffs out;
  out.order = rank;
  for (std::size_t mu = 0; mu <= top; ++mu) {
    Rational sum = 0;
    for (std::size_t j = 0; j <= mu; ++j) {
      Rational term = Rational(binomial(mu, j) * to_integer(m) * to_integer(j + 1)) * p[j];
      if ((mu - j) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    sum /= Rational(factorial(mu));
    if (!is_integral(sum)) {
      throw Error(ErrorCode::NonIntegralTheta,
                  "theta_" + std::to_string(mu) + " = " + format_rational(sum));
    }
    out.theta.push_back(sum.get_num());
  }
  return out;
}

ThetaCoeffs theta_coeffs(const GraphOfGroups& gog, std::size_t max_index) {
  return theta_coeffs(type_vector(gog), free_rank(gog), max_index);
}

ThetaCoeffs theta_coeffs(const GraphOfGroups& gog) {
  const std::size_t rank = free_rank(gog);
  return theta_coeffs(type_vector(gog), rank, rank);
}

// Reading off the coefficient of z^lambda in the ODE: z^mu G^(mu)(z)
// contributes lambda(lambda-1)...(lambda-mu+1) g_lambda, and -m G'(z)
// contributes -m (lambda+1) g_{lambda+1}. So for every lambda >= 0
//
//   sum_{mu=0}^{order} theta_mu fall(lambda, mu) g_lambda
//       = m (lambda+1) g_{lambda+1},
//
// with fall(lambda, 0) = 1. Terms with mu > lambda vanish, so a truncated
// theta suffices while lambda stays within its length.
bool ode_check(const std::vector<Rational>& g, const ThetaCoeffs& theta, Order m) {
  if (g.size() < 2 || theta.theta.empty()) return false;
  for (std::size_t lambda = 0; lambda + 1 < g.size(); ++lambda) {
    if (theta.truncated() && lambda >= theta.theta.size()) {
      throw Error(ErrorCode::TooLarge,
                  "theta truncated at index " +
                      std::to_string(theta.theta.size() - 1) +
                      ", cannot check lambda = " + std::to_string(lambda));
    }
    Integer weight = 0;
    Integer falling = 1;
    for (std::size_t mu = 0; mu < theta.theta.size() && mu <= lambda; ++mu) {
      if (mu > 0) falling *= to_integer(lambda - mu + 1);
      weight += theta.theta[mu] * falling;
    }
    const Rational lhs = Rational(weight) * g[lambda];
    const Rational rhs =
        Rational(to_integer(m) * to_integer(lambda + 1)) * g[lambda + 1];
    if (lhs != rhs) return false;
  }
  return true;
}

std::string_view to_string(Rank2Class c) {
  switch (c) {
    case Rank2Class::I: return "I";
    case Rank2Class::II: return "II";
    case Rank2Class::III_1: return "III_1";
    case Rank2Class::III_2: return "III_2";
    case Rank2Class::III_3: return "III_3";
    case Rank2Class::IV: return "IV";
    case Rank2Class::V: return "V";
  }
  return "?";
}

Rank2Class parse_rank2_class(std::string_view label) {
  if (label.starts_with("R2_")) label.remove_prefix(3);
  for (auto c : {Rank2Class::I, Rank2Class::II, Rank2Class::III_1, Rank2Class::III_2,
                 Rank2Class::III_3, Rank2Class::IV, Rank2Class::V}) {
    if (label == to_string(c)) return c;
  }
  throw Error(ErrorCode::UnknownClass, "unknown rank-2 class '" + std::string(label) + "'");
}

namespace {

const Integer& param(const ClassParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw Error(ErrorCode::MissingParam, "missing parameter '" + key + "'");
  }
  return it->second;
}

Integer initial_count(Rank2Class label, const ClassParams& params) {
  const Integer& m = param(params, "m");
  switch (label) {
    case Rank2Class::I:
    case Rank2Class::IV:
      if (m * m % 2 != 0) {
        throw Error(ErrorCode::NonIntegralCount, "m^2/2 with odd m");
      }
      return m * m / 2;
    case Rank2Class::II: return m * m;
    case Rank2Class::V:
      if (m % 2 != 0) throw Error(ErrorCode::NonIntegralCount, "m/2 with odd m");
      return (m / 2) * (m / 2);
    default: {
      const Integer& s = param(params, "S");
      return (m - s) * s;
    }
  }
}

}  // namespace

std::vector<Integer> f_series_rank2(Rank2Class label, const ClassParams& params,
                                    std::size_t n) {
  const Integer& m = param(params, "m");
  std::vector<Integer> f;
  if (n == 0) return f;
  f.push_back(initial_count(label, params));
  for (std::size_t lambda = 1; lambda < n; ++lambda) {
    const Integer l = to_integer(lambda);
    Integer lead;
    switch (label) {
      case Rank2Class::I:
      case Rank2Class::IV: {
        const Integer twice = (2 * l + 3) * m * f[lambda - 1];
        if (twice % 2 != 0) {
          throw Error(ErrorCode::NonIntegralCount,
                      "f_" + std::to_string(lambda + 1) + " is not integral");
        }
        lead = twice / 2;
        break;
      }
      case Rank2Class::II: lead = (l + 2) * m * f[lambda - 1]; break;
      default: lead = (l + 1) * m * f[lambda - 1]; break;
    }
    for (std::size_t mu = 1; mu < lambda; ++mu) {
      lead += f[mu - 1] * f[lambda - mu - 1];
    }
    f.push_back(std::move(lead));
  }
  return f;
}

std::vector<bool> parity_profile(const std::vector<Integer>& f) {
  std::vector<bool> out;
  out.reserve(f.size());
  for (const auto& x : f) out.push_back(mpz_odd_p(x.get_mpz_t()) != 0);
  return out;
}

std::vector<bool> predicted_parity(Rank2Class label, const ClassParams& params,
                                   std::size_t n) {
  bool mersenne = false;
  if (label == Rank2Class::III_1 || label == Rank2Class::III_3) {
    mersenne = mpz_odd_p(param(params, "S").get_mpz_t()) != 0;
  } else if (label == Rank2Class::V) {
    // |S1| = m/2 in class V.
    mersenne = mpz_odd_p(Integer(param(params, "m") / 2).get_mpz_t()) != 0;
  }
  std::vector<bool> out;
  out.reserve(n);
  const bool first_odd = mpz_odd_p(initial_count(label, params).get_mpz_t()) != 0;
  for (std::size_t lambda = 1; lambda <= n; ++lambda) {
    if (mersenne) {
      out.push_back(((lambda + 1) & lambda) == 0);
    } else {
      out.push_back(first_odd);
    }
  }
  return out;
}

bool strictly_increasing(const std::vector<Integer>& f) {
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (!(f[i - 1] < f[i])) return false;
  }
  return true;
}

GrowthReport growth_check(const GraphOfGroups& gog, std::size_t n) {
  const auto rank = free_rank(gog);
  if (rank != 2) {
    throw Error(ErrorCode::WrongRank,
                "growth estimate needs free rank 2, got " + std::to_string(rank));
  }
  const TypeVector c2c2c2{2, {{1, 2}, {2, -1}}};
  GrowthReport report;
  report.exceptional = type_vector(gog) == c2c2c2;
  report.first_lambda = report.exceptional ? 2 : 1;

  const auto f = f_series(gog, n + 1);
  const Integer m = to_integer(m_gamma(gog));
  auto holds_at = [&](std::size_t lambda) {
    return f[lambda] - f[lambda - 1] >= m * factorial(lambda + 1);
  };
  report.holds_at_one = n >= 1 ? holds_at(1) : true;
  for (std::size_t lambda = report.first_lambda; lambda <= n; ++lambda) {
    if (!holds_at(lambda)) {
      report.holds = false;
      report.first_failure = lambda;
      break;
    }
  }
  return report;
}

}  // namespace gog
