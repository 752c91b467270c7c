#pragma once

// Counting sequences attached to a finite graph of finite groups.
//
//   g_lambda = prod_{e in O(X)} (lambda m/|G(e)|)! |G(e)|^(lambda m/|G(e)|)
//            / prod_{v in V(X)} (lambda m/|G(v)|)! |G(v)|^(lambda m/|G(v)|)
//
// is the normalised number of torsion-free actions on lambda*m points, and the
// free-subgroup counts f_lambda are recovered from the convolution
//
//   sum_{mu=0}^{lambda-1} g_mu f_{lambda-mu} = m lambda g_lambda.
//
// Everything is exact; f_lambda grows super-exponentially.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gog/arith.hpp"
#include "gog/graph_of_groups.hpp"
#include "gog/invariants.hpp"

namespace gog {

struct CountSeries {
  Order m = 1;
  std::vector<Rational> g;  // g_0 .. g_N
  std::vector<Integer> f;   // f_1 .. f_N, stored at index lambda - 1

  const Integer& f_at(std::size_t lambda) const { return f.at(lambda - 1); }
};

/// g_0 .. g_N.
std::vector<Rational> g_series(const GraphOfGroups& gog, std::size_t n);

/// f_1 .. f_N (index lambda - 1). Throws NonIntegralCount or NonPositiveCount;
/// for finite groups (rank 0) f_lambda = 0 is accepted for lambda >= 2.
std::vector<Integer> f_series(const GraphOfGroups& gog, std::size_t n);

CountSeries count_series(const GraphOfGroups& gog, std::size_t n);

/// Solves the convolution for f given g (g.size() >= 1, g[0] == 1).
std::vector<Integer> f_from_g(const std::vector<Rational>& g, Order m,
                              bool allow_zero);

/// Whether sum_{mu<lambda} g_mu f_{lambda-mu} == m lambda g_lambda for all
/// lambda covered by both sequences.
bool convolution_holds(const std::vector<Rational>& g,
                       const std::vector<Integer>& f, Order m);

struct ThetaCoeffs {
  std::size_t order = 0;       // mu(Gamma), the order of the ODE
  std::vector<Integer> theta;  // theta_0 .. theta_k with k <= order

  bool truncated() const { return theta.size() < order + 1; }
};

/// theta_0 .. theta_mu of the linear ODE satisfied by G(z) = sum g_lambda z^lambda.
ThetaCoeffs theta_coeffs(const GraphOfGroups& gog);

/// Same, stopping at theta_{max_index}. Enough for ode_check on lambda <=
/// max_index, since higher terms are multiplied by a vanishing falling
/// factorial there.
ThetaCoeffs theta_coeffs(const GraphOfGroups& gog, std::size_t max_index);

ThetaCoeffs theta_coeffs(const TypeVector& tv, std::size_t rank,
                         std::size_t max_index);

/// Coefficient-wise check of
///   theta_0 G + (theta_1 z - m) G' + sum_{mu>=2} theta_mu z^mu G^(mu) = 0.
bool ode_check(const std::vector<Rational>& g, const ThetaCoeffs& theta, Order m);

enum class Rank2Class { I, II, III_1, III_2, III_3, IV, V };

std::string_view to_string(Rank2Class c);

/// Accepts "I", "II", "III_1", ..., "V", optionally prefixed by "R2_".
/// Throws UnknownClass.
Rank2Class parse_rank2_class(std::string_view label);

using ClassParams = std::map<std::string, Integer>;

/// f_1 .. f_N from the rank-2 recurrences
///   f_{l+1} = c_l m f_l + sum_{mu=1}^{l-1} f_mu f_{l-mu}
/// with c_l = (2l+3)/2 for I, IV; l+2 for II; l+1 for III, V. Initial value
/// m^2/2, m^2, (m-|S|)|S| for III, (m/2)^2 for V. Needs params "m" and, for
/// class III, "S". Throws MissingParam.
std::vector<Integer> f_series_rank2(Rank2Class label, const ClassParams& params,
                                    std::size_t n);

/// f_lambda mod 2 for each entry (true = odd).
std::vector<bool> parity_profile(const std::vector<Integer>& f);

/// Classes III_1, III_3 with |S| odd and V with |S1| odd: odd exactly at
/// lambda = 2^k - 1. Otherwise constant, equal to f_1 mod 2.
std::vector<bool> predicted_parity(Rank2Class label, const ClassParams& params,
                                   std::size_t n);

struct GrowthReport {
  bool holds = true;
  /// Type of C2 * C2 * C2, where the estimate starts at lambda = 2.
  bool exceptional = false;
  std::size_t first_lambda = 1;
  std::optional<std::size_t> first_failure;
  /// Whether the estimate holds at lambda = 1; false exactly for the
  /// exceptional type.
  bool holds_at_one = true;
};

/// f_{l+1} - f_l >= m (l+1)! for first_lambda <= l <= n. Throws WrongRank
/// unless mu == 2.
GrowthReport growth_check(const GraphOfGroups& gog, std::size_t n);

bool strictly_increasing(const std::vector<Integer>& f);

}  // namespace gog
