#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cabling/knot.hpp"
#include "cabling/rational.hpp"

namespace cabling {

struct BreveWitness {
  bool breve = false;
  std::size_t failing_level = 0;  // 1-based; 0 when breve
  std::string reason;
};

// K-breve membership via the C' interval test: p_1 > 1 and for every i >= 1
// the slope q_{i+1}/p_{i+1} lies outside (-1/B_i, 0).
BreveWitness is_breve(const KnotSpec& spec);

// The same class via the C-framing width test: P_1 > 1 and
// P_{i+1}/q_{i+1} > w(K_i) = A_i - B_i at every level.
BreveWitness is_breve_by_width(const KnotSpec& spec);

enum class LevelState {
  NegStartSimpleUtp,   // cabling of a negative torus knot
  BreveSimpleUtpOpen,  // still K-breve: simple, UTP not decided
  SimpleUtpClosed,     // simple + UTP, closed under further cabling
  Candidate,           // in the necessary-condition gap
};

enum class Rule {
  NegativeTorusStart,
  PositiveTorusStart,
  CablingClosure,        // simple + UTP is inherited by every cabling
  BreveContinuation,     // slope avoids (-1/B_i, 0)
  InnerCableUtp,         // slope in (-1/A_i, 0)
  NecessaryConditionGap, // slope in (-1/B_i, -1/A_i), i.e. P/q in (0, w)
  CandidateAbsorbing,
};

enum class Answer { Yes, Unknown };

std::string_view to_string(LevelState s);
std::string_view to_string(Rule r);
std::string_view describe(Rule r);
std::string_view to_string(Answer a);

struct LevelVerdict {
  LevelState state;
  Rule rule;
};

/// Where a knot first fell into the gap: q/p in (-1/B, -1/A) in C',
/// equivalently P/q in (0, w) in C.
struct CandidateWitness {
  std::size_t level;  // 1-based level of the offending cabling
  Slope cabling_slope;  // q/p
  Slope lower;          // -1/B_{level-1}
  Slope upper;          // -1/A_{level-1}
  Slope cabling_fraction;  // P/q
  Integer width;           // A_{level-1} - B_{level-1}
};

struct Verdict {
  std::vector<LevelVerdict> levels;
  Answer simple = Answer::Unknown;
  Answer utp = Answer::Unknown;
  std::optional<CandidateWitness> witness;

  LevelState final_state() const { return levels.back().state; }
};

Verdict classify(const KnotSpec& spec);

// Re-derives each level's rule precondition from the knot; throws
// ConsistencyError if a tag does not hold.
void audit(const Verdict& verdict, const KnotSpec& spec);

}  // namespace cabling
