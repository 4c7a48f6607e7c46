#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cabling/knot.hpp"
#include "cabling/rational.hpp"

namespace cabling {

struct ABPair {
  Integer A;
  Integer B;

  friend bool operator==(const ABPair&, const ABPair&) = default;
};

// A_r and B_r from the sum-of-products closed form over the C' coefficients.
ABPair ab_closed(const KnotSpec& spec);

// A_r and B_r from A_i = q_i^2 A_{i-1} + p_i q_i, B_i = q_i B_{i-1} + p_i.
ABPair ab_recursive(const KnotSpec& spec);

// (A_i, B_i) for every prefix i = 1..r, via the recursion.
std::vector<ABPair> ab_levels(const KnotSpec& spec);

// Euler characteristic of the minimal Seifert surface from the C-framing
// meridians of a positive iterated cabling:
//   P_1 prod_{i>=2} q_i - q_1 (P_1 - 1) prod_{i>=2} q_i - sum_{i>=2} P_i (q_i - 1) prod_{j>i} q_j.
// Throws DomainError if some P_i <= 0.
Integer euler_char_bw(const KnotSpec& spec);

// tb = P q + t for a (P, q) cable with twisting t measured against the cabling torus.
Integer tb_from_twisting(const Integer& P, const Integer& q, const Integer& twisting);

/// A value that is only known under a hypothesis; otherwise carries the reason.
struct Conditional {
  std::optional<Integer> value;
  std::string reason;  // why undefined, empty when defined
  std::string rule;    // which rule produced the value

  bool defined() const { return value.has_value(); }
};

struct InvariantRecord {
  std::vector<Integer> A;
  std::vector<Integer> B;
  std::vector<Integer> P;  // C-framing meridians
  Conditional euler_char;
  Conditional max_tb;
  Conditional max_sl;
  Conditional width;
};

// Defines chi, max tb, max sl and contact width only for K-breve knots.
// Cross-checks the closed form against the recursion and the Euler
// characteristic against euler_char_bw; throws ConsistencyError on mismatch.
InvariantRecord classical_invariants(const KnotSpec& spec);

}  // namespace cabling
