#pragma once

// Independent reference computations used only by tests. None of these call
// into the library's formulas for the quantity being checked.

#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cabling/knot.hpp"

namespace cabling::testkit {

using Rational = boost::multiprecision::cpp_rational;

// A_r, B_r straight from the sum-of-products definition with explicit loops.
inline std::pair<Integer, Integer> brute_ab(const std::vector<CablingPair>& cprime) {
  const std::size_t r = cprime.size();
  Integer A = 0;
  Integer B = 0;
  for (std::size_t alpha = 0; alpha < r; ++alpha) {
    Integer after = 1;  // prod_{beta = alpha+1..r} q_beta
    for (std::size_t beta = alpha + 1; beta < r; ++beta) after *= cprime[beta].longitude;
    Integer from = 1;  // prod_{beta = alpha..r} q_beta
    for (std::size_t beta = alpha; beta < r; ++beta) from *= cprime[beta].longitude;
    A += cprime[alpha].meridian * after * from;
    B += cprime[alpha].meridian * after;
  }
  Integer all = 1;
  for (const auto& pair : cprime) all *= pair.longitude;
  return {A, B + all};
}

// The n with -1/n < q/p < -1/(n+1): the largest n with -1/n < q/p, found by
// doubling then bisection.
inline Integer brute_shell_integer(const Integer& p, const Integer& q) {
  const Rational slope = Rational(q) / Rational(p);  // cpp_rational rejects a negative denominator
  const auto below_slope = [&](const Integer& n) { return Rational(-1, n) < slope; };
  if (!below_slope(1)) throw std::logic_error("slope not in (-1, 0)");
  Integer hi = 2;
  while (below_slope(hi)) hi *= 2;
  Integer lo = hi / 2;
  while (hi - lo > 1) {
    const Integer mid = (lo + hi) / 2;
    (below_slope(mid) ? lo : hi) = mid;
  }
  if (!(slope < Rational(-1, lo + 1))) throw std::logic_error("slope not in a shell");
  return lo;
}

// Rotation numbers at max tb of the (p, q) inner cable, read off
//   r = +-(p + n q + q rho),  rho in {-(n - B), ..., n - B} step 2,
// with n found by brute_shell_integer and B by brute_ab.
inline std::set<Integer> brute_cable_rotations(const std::vector<CablingPair>& base,
                                               const Integer& p, const Integer& q) {
  const Integer B = brute_ab(base).second;
  const Integer n = brute_shell_integer(p, q);
  std::set<Integer> out;
  for (Integer rho = -(n - B); rho <= n - B; rho += 2) {
    out.insert(p + n * q + q * rho);
    out.insert(-(p + n * q + q * rho));
  }
  return out;
}

// Edge-rounded slope summed as exact rationals (reduced).
inline Rational rational_edge_round_base(const Integer& p, const Integer& q, const Integer& k,
                                         const Integer& p_prime, const Integer& q_prime) {
  const Integer denom = p * q * k + p + q;
  return -Rational(q_prime * (p * k + 1) + p_prime, denom) +
         Rational(p_prime * (q * k + 1) + q_prime, denom) - Rational(1, denom);
}

}  // namespace cabling::testkit
