#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cabling/rational.hpp"

namespace cabling {

enum class Framing {
  C,       // Seifert framing; meridian coefficients are P_i
  Cprime,  // cabling-torus framing; meridian coefficients are p_i
};

std::string_view to_string(Framing f);

/// One cabling step: `meridian` is P_i in framing C and p_i in framing C'.
struct CablingPair {
  Integer meridian;
  Integer longitude;  // q_i

  friend bool operator==(const CablingPair&, const CablingPair&) = default;
};

/// An unchecked cabling sequence as read from input.
struct RawKnot {
  Framing framing = Framing::Cprime;
  std::vector<CablingPair> pairs;
};

/// A validated iterated torus knot ((c_1, q_1), ..., (c_r, q_r)).
///
/// Only `validate` constructs one, so holding a KnotSpec means: r >= 1,
/// every q_i > 1, every c_i != 0, gcd(|c_i|, q_i) = 1, and |c_1| > 1.
class KnotSpec {
 public:
  Framing framing() const { return framing_; }
  const std::vector<CablingPair>& pairs() const { return pairs_; }
  std::size_t levels() const { return pairs_.size(); }
  const CablingPair& level(std::size_t i) const { return pairs_.at(i - 1); }  // 1-based

  // The first `r` levels, same framing.
  KnotSpec prefix(std::size_t r) const;

  friend bool operator==(const KnotSpec&, const KnotSpec&) = default;

 private:
  friend KnotSpec validate(RawKnot raw);
  KnotSpec(Framing framing, std::vector<CablingPair> pairs)
      : framing_(framing), pairs_(std::move(pairs)) {}

  Framing framing_;
  std::vector<CablingPair> pairs_;
};

// Throws ValidationError naming the first violated invariant and its level.
KnotSpec validate(RawKnot raw);

// Appends one cabling (in the knot's own framing) and revalidates.
KnotSpec extend(const KnotSpec& spec, const CablingPair& pair);

KnotSpec to_c_framing(const KnotSpec& spec);
KnotSpec to_cprime_framing(const KnotSpec& spec);

// C-framing meridians via the product recurrence P_{i+1} = q_{i+1} P_i q_i + p_{i+1},
// independent of the A_{i-1} route used by to_c_framing.
std::vector<Integer> c_meridians_by_product(const KnotSpec& spec);

// Text grammar: `C:(2,3),(2,3)` or `Cp:(2,3),(-13,2)`; whitespace allowed
// between tokens. "Cprime" and "C'" are accepted as aliases of "Cp".
KnotSpec parse_knot(std::string_view text);
std::string format_knot(const KnotSpec& spec);

}  // namespace cabling
