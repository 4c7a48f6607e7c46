#include "cabling/selftest.hpp"

#include <exception>

#include "cabling/classification.hpp"
#include "cabling/invariants.hpp"
#include "cabling/knot.hpp"
#include "cabling/thickening.hpp"

namespace cabling {

namespace {

template <class Fn>
void run_case(SelftestCheck& check, Fn&& fn) {
  ++check.cases;
  try {
    if (!fn()) ++check.failures;
  } catch (const std::exception&) {
    ++check.failures;
  }
}

// Two-level C' knots with small coefficients.
std::vector<KnotSpec> corpus() {
  std::vector<KnotSpec> out;
  for (int p1 = 2; p1 <= 9; ++p1) {
    for (int q1 = 2; q1 <= 5; ++q1) {
      if (gcd(p1, q1) != 1) continue;
      for (int q2 = 2; q2 <= 4; ++q2) {
        for (int p2 = -40; p2 <= 40; ++p2) {
          if (p2 == 0 || gcd(p2, q2) != 1) continue;
          out.push_back(validate({Framing::Cprime, {{p1, q1}, {p2, q2}}}));
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  SelftestCheck ab{"closed form vs recursion for A_r, B_r"};
  SelftestCheck chi{"Euler characteristic formula vs B_r - A_r"};
  SelftestCheck framing{"framing round trip and A_i = P_i q_i"};
  SelftestCheck breve{"K-breve interval test vs width test"};
  SelftestCheck base{"edge rounding collapse, torus knot"};
  SelftestCheck step{"edge rounding collapse, inductive step"};

  for (const KnotSpec& spec : corpus()) {
    run_case(ab, [&] { return ab_closed(spec) == ab_recursive(spec); });
    run_case(framing, [&] {
      const KnotSpec c = to_c_framing(spec);
      if (to_cprime_framing(c) != spec) return false;
      if (c_meridians_by_product(spec) != c_meridians_by_product(c)) return false;
      const std::vector<ABPair> levels = ab_levels(spec);
      for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i].A != c.pairs()[i].meridian * c.pairs()[i].longitude) return false;
      }
      return true;
    });
    run_case(breve, [&] { return is_breve(spec).breve == is_breve_by_width(spec).breve; });
    if (!is_breve(spec).breve) continue;
    run_case(chi, [&] {
      const ABPair r = ab_recursive(spec);
      return euler_char_bw(spec) == r.B - r.A;
    });
    for (int k = 0; k <= 3; ++k) {
      run_case(step, [&] {
        const auto& [p, q] = spec.pairs().back();
        return edge_round_step(spec.prefix(1), p, q, k).slope ==
               candidate_tori(spec, k).back().intersection_slope;
      });
    }
  }

  for (int p = 2; p <= 12; ++p) {
    for (int q = 2; q <= 12; ++q) {
      if (gcd(p, q) != 1) continue;
      for (int k = 0; k <= 20; ++k) {
        for (int shift = -5; shift <= 5; ++shift) {
          run_case(base, [&] {
            return edge_round_base(p, q, k, shift) == UnreducedSlope(-(k + 1), p * q * k + p + q);
          });
        }
      }
    }
  }
  return {ab, chi, framing, breve, base, step};
}

}  // namespace cabling
