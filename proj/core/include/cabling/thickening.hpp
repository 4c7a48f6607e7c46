#pragma once

#include <cstdint>
#include <vector>

#include "cabling/knot.hpp"
#include "cabling/rational.hpp"

namespace cabling {

/// A solid torus N_r^k representing a K-breve knot: intersection boundary
/// slope -(k+1)/(A_r k + B_r) in C', with 2 gcd(k+1, A_r k + B_r) dividing
/// curves. Only a candidate for failing to thicken.
struct CandidateTorus {
  Integer k;
  UnreducedSlope intersection_slope;
  Integer n_k;
  Integer dividing_curves;

  Slope reduced() const { return intersection_slope.reduce(); }
};

// k = 0..k_max. Throws DomainError if spec is not K-breve. Cross-checks
// n_k against gcd(k+1, B_r - A_r).
std::vector<CandidateTorus> candidate_tori(const KnotSpec& spec, std::uint64_t k_max);

// Slopes strictly increase in k and stay in [-1/B_r, -1/A_r); for r > 1 also
// -q_r/A_r < -2/(A_r + B_r) and B_r < A_r/q_r.
bool chain_check(const KnotSpec& spec, std::uint64_t k_max);

// Edge-rounded boundary slope around a positive (p, q) torus knot, built from
// the two unknot neighborhoods with m1 = p k + 1 and m2 = q k + 1 in the basis
// completed by (p', q') + shift (p, q). Throws ConsistencyError unless the sum
// collapses to -(k+1)/(p q k + p + q).
UnreducedSlope edge_round_base(const Integer& p, const Integer& q, const Integer& k,
                               const Integer& completion_shift = 0);

struct EdgeRoundStep {
  Integer m;  // neighborhood of L_{r-1} has slope -1/m
  UnreducedSlope slope;
};

// One inductive step: K-breve prefix K_{r-1}, the (p_r, q_r) cabling and
// k_r >= 0, with k_{r-1} = q_r k_r. Throws ConsistencyError unless the
// three-term sum collapses to -(k_r+1)/(A_r k_r + B_r).
EdgeRoundStep edge_round_step(const KnotSpec& prefix, const Integer& p, const Integer& q,
                              const Integer& k, const Integer& completion_shift = 0);

struct CableTwisting {
  Integer max_twisting;  // q w - P
  Integer max_tb;        // P q + max_twisting
};

// Cable with fraction P/q above the contact width w. Throws DomainError if
// P/q <= w.
CableTwisting cable_tb_above_width(const Integer& w, const Integer& P, const Integer& q);

}  // namespace cabling
