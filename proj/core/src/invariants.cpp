#include "cabling/invariants.hpp"

#include "cabling/classification.hpp"
#include "cabling/error.hpp"

namespace cabling {

ABPair ab_closed(const KnotSpec& spec) {
  const KnotSpec k = to_cprime_framing(spec);
  const auto& pairs = k.pairs();
  const std::size_t r = pairs.size();

  // suffix[a] = prod_{beta >= a} q_beta (0-based), suffix[r] = 1.
  std::vector<Integer> suffix(r + 1, Integer(1));
  for (std::size_t i = r; i-- > 0;) suffix[i] = suffix[i + 1] * pairs[i].longitude;

  ABPair out{0, suffix[0]};
  for (std::size_t alpha = 0; alpha < r; ++alpha) {
    const Integer& p = pairs[alpha].meridian;
    out.A += p * suffix[alpha + 1] * suffix[alpha];
    out.B += p * suffix[alpha + 1];
  }
  return out;
}

std::vector<ABPair> ab_levels(const KnotSpec& spec) {
  const KnotSpec k = to_cprime_framing(spec);
  std::vector<ABPair> levels;
  levels.reserve(k.levels());
  ABPair cur{0, 1};  // A_0 = 0, B_0 = 1 reproduces A_1 = p q, B_1 = p + q
  for (const auto& [p, q] : k.pairs()) {
    cur = {q * q * cur.A + p * q, q * cur.B + p};
    levels.push_back(cur);
  }
  return levels;
}

ABPair ab_recursive(const KnotSpec& spec) { return ab_levels(spec).back(); }

Integer euler_char_bw(const KnotSpec& spec) {
  const KnotSpec c = to_c_framing(spec);
  const auto& pairs = c.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].meridian <= 0) {
      throw DomainError("Euler characteristic formula needs positive cablings; P_" +
                        std::to_string(i + 1) + " = " + pairs[i].meridian.str());
    }
  }
  const std::size_t r = pairs.size();
  std::vector<Integer> suffix(r + 1, Integer(1));
  for (std::size_t i = r; i-- > 0;) suffix[i] = suffix[i + 1] * pairs[i].longitude;

  const Integer& P1 = pairs[0].meridian;
  const Integer& q1 = pairs[0].longitude;
  Integer chi = P1 * suffix[1] - q1 * (P1 - 1) * suffix[1];
  for (std::size_t i = 1; i < r; ++i) {
    chi -= pairs[i].meridian * (pairs[i].longitude - 1) * suffix[i + 1];
  }
  return chi;
}

Integer tb_from_twisting(const Integer& P, const Integer& q, const Integer& twisting) {
  return P * q + twisting;
}

InvariantRecord classical_invariants(const KnotSpec& spec) {
  InvariantRecord rec;
  for (const ABPair& ab : ab_levels(spec)) {
    rec.A.push_back(ab.A);
    rec.B.push_back(ab.B);
  }
  const KnotSpec c = to_c_framing(spec);
  for (const CablingPair& pair : c.pairs()) rec.P.push_back(pair.meridian);

  const ABPair closed = ab_closed(spec);
  if (closed.A != rec.A.back() || closed.B != rec.B.back()) {
    throw ConsistencyError("closed-form and recursive A/B disagree for " + format_knot(spec));
  }

  const BreveWitness breve = is_breve(spec);
  if (!breve.breve) {
    const std::string reason = "not in class K-breve: " + breve.reason;
    for (Conditional* field : {&rec.euler_char, &rec.max_tb, &rec.max_sl, &rec.width}) {
      field->reason = reason;
    }
    return rec;
  }

  const Integer& A = rec.A.back();
  const Integer& B = rec.B.back();
  const Integer chi = B - A;
  if (euler_char_bw(spec) != chi) {
    throw ConsistencyError("Euler characteristic formulas disagree for " + format_knot(spec));
  }
  rec.euler_char = {chi, "", "chi = B_r - A_r (checked against cabling Euler formula)"};
  rec.max_tb = {A - B, "", "max tb = A_r - B_r for K-breve"};
  rec.max_sl = {A - B, "", "max sl = max tb for K-breve"};
  rec.width = {A - B, "", "contact width = max tb for K-breve"};
  return rec;
}

}  // namespace cabling
