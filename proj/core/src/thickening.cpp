#include "cabling/thickening.hpp"

#include <optional>

#include "cabling/classification.hpp"
#include "cabling/error.hpp"
#include "cabling/invariants.hpp"

namespace cabling {

namespace {

ABPair breve_ab(const KnotSpec& spec) {
  const BreveWitness breve = is_breve(spec);
  if (!breve.breve) throw DomainError("not in class K-breve: " + breve.reason);
  return ab_recursive(spec);
}

CandidateTorus make_torus(const ABPair& ab, const Integer& k) {
  const Integer denom = ab.A * k + ab.B;
  UnreducedSlope slope(-(k + 1), denom);
  Integer n = gcd(k + 1, denom);
  if (n != gcd(k + 1, ab.B - ab.A)) {
    throw ConsistencyError("dividing-curve gcd disagrees at k = " + k.str());
  }
  return {k, std::move(slope), n, 2 * n};
}

}  // namespace

std::vector<CandidateTorus> candidate_tori(const KnotSpec& spec, std::uint64_t k_max) {
  const ABPair ab = breve_ab(spec);
  std::vector<CandidateTorus> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  for (std::uint64_t k = 0; k <= k_max; ++k) out.push_back(make_torus(ab, Integer(k)));
  return out;
}

bool chain_check(const KnotSpec& spec, std::uint64_t k_max) {
  const ABPair ab = breve_ab(spec);
  const Slope lo(-1, ab.B);
  const Slope hi(-1, ab.A);
  std::optional<Slope> prev;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const Slope s = make_torus(ab, Integer(k)).reduced();
    if (s < lo || !(s < hi)) return false;
    if (prev && !(*prev < s)) return false;
    prev = s;
  }
  if (spec.levels() > 1) {
    const Integer& q = spec.pairs().back().longitude;
    if (!(Slope(-q, ab.A) < Slope(-2, ab.A + ab.B))) return false;
    // A_r / q_r = P_r
    if (!(Slope(ab.B, 1) < Slope(ab.A, q))) return false;
  }
  return true;
}

UnreducedSlope edge_round_base(const Integer& p, const Integer& q, const Integer& k,
                               const Integer& completion_shift) {
  if (q <= 1 || p <= 1 || gcd(p, q) != 1) {
    throw ValidationError("edge rounding needs a positive torus knot, got (" + p.str() + "," +
                          q.str() + ")");
  }
  if (k < 0) throw ValidationError("k must be nonnegative");
  const auto [p_prime, q_prime] = complete_basis(p, q, completion_shift);
  const Integer m1 = p * k + 1;
  const Integer m2 = q * k + 1;
  const Integer denom = p * q * k + p + q;

  const UnreducedSlope first(-(q_prime * m1 + p_prime), denom);
  const UnreducedSlope second(p_prime * m2 + q_prime, denom);
  const UnreducedSlope third(-1, denom);
  const UnreducedSlope sum = first + second + third;

  const UnreducedSlope expected(-(k + 1), p * q * k + p + q);
  if (sum != expected) {
    throw ConsistencyError("edge rounding gave " + sum.to_string() + ", expected " +
                           expected.to_string());
  }
  return sum;
}

EdgeRoundStep edge_round_step(const KnotSpec& prefix, const Integer& p, const Integer& q,
                              const Integer& k, const Integer& completion_shift) {
  const ABPair prev = breve_ab(prefix);
  if (k < 0) throw ValidationError("k must be nonnegative");
  const KnotSpec prefix_cprime = to_cprime_framing(prefix);
  const KnotSpec full = extend(prefix_cprime, {p, q});
  const BreveWitness full_breve = is_breve(full);
  if (!full_breve.breve) throw DomainError("cabled knot not in class K-breve: " + full_breve.reason);
  const ABPair cur = ab_recursive(full);

  const Integer k_prev = q * k;
  // Equal intersection counts of the (p, q) ruling on both tori.
  const Integer m = p * k + prev.A * k_prev + prev.B;
  if (p + m * q != p * k_prev + p + q * (prev.A * k_prev + prev.B)) {
    throw ConsistencyError("intersection counts disagree for m = " + m.str());
  }

  const auto [p_prime, q_prime] = complete_basis(p, q, completion_shift);
  const Integer denom = cur.A * k + cur.B;
  const UnreducedSlope outer(q_prime * (prev.A * k_prev + prev.B) + p_prime * (q * k + 1), denom);
  const UnreducedSlope inner(q_prime * m + p_prime, denom);
  const UnreducedSlope sum = outer + (-inner) + UnreducedSlope(-1, denom);

  const UnreducedSlope expected(-(k + 1), denom);
  if (sum != expected) {
    throw ConsistencyError("edge rounding step gave " + sum.to_string() + ", expected " +
                           expected.to_string());
  }
  return {m, sum};
}

CableTwisting cable_tb_above_width(const Integer& w, const Integer& P, const Integer& q) {
  if (q <= 1 || gcd(P, q) != 1) {
    throw ValidationError("cable (" + P.str() + "," + q.str() + ") needs q > 1 and gcd 1");
  }
  if (!(Slope(P, q) > Slope(w, 1))) {
    throw DomainError("cabling fraction " + Slope(P, q).to_string() + " does not exceed width " +
                      w.str());
  }
  const Integer twisting = q * w - P;
  return {twisting, tb_from_twisting(P, q, twisting)};
}

}  // namespace cabling
