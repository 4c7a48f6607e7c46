#include "cabling/classification.hpp"

#include "cabling/error.hpp"
#include "cabling/invariants.hpp"

namespace cabling {

namespace {

std::string level_text(std::size_t i) { return "level " + std::to_string(i); }

// Where the slope of cabling i+1 sits relative to the K-breve prefix K_i.
enum class SlopeRegion { OutsideBreveGap, InnerCable, Gap };

SlopeRegion region(const CablingPair& next, const ABPair& prefix) {
  const Slope slope(next.longitude, next.meridian);
  const Slope zero(0, 1);
  if (!in_open_interval(slope, Slope(-1, prefix.B), zero)) return SlopeRegion::OutsideBreveGap;
  if (slope == Slope(-1, prefix.A)) {
    throw ConsistencyError("cabling slope equals -1/A, impossible for q > 1");
  }
  if (in_open_interval(slope, Slope(-1, prefix.A), zero)) return SlopeRegion::InnerCable;
  return SlopeRegion::Gap;
}

}  // namespace

BreveWitness is_breve(const KnotSpec& spec) {
  const KnotSpec k = to_cprime_framing(spec);
  if (k.level(1).meridian <= 1) {
    return {false, 1, "p_1 = " + k.level(1).meridian.str() + " is not > 1"};
  }
  const std::vector<ABPair> ab = ab_levels(k);
  for (std::size_t i = 1; i < k.levels(); ++i) {
    const CablingPair& next = k.pairs()[i];
    const Slope slope(next.longitude, next.meridian);
    const Slope lower(-1, ab[i - 1].B);
    if (in_open_interval(slope, lower, Slope(0, 1))) {
      return {false, i + 1,
              "slope " + slope.to_string() + " at " + level_text(i + 1) + " lies in (" +
                  lower.to_string() + ", 0)"};
    }
  }
  return {true, 0, ""};
}

BreveWitness is_breve_by_width(const KnotSpec& spec) {
  const KnotSpec c = to_c_framing(spec);
  if (c.level(1).meridian <= 1) {
    return {false, 1, "P_1 = " + c.level(1).meridian.str() + " is not > 1"};
  }
  const std::vector<ABPair> ab = ab_levels(c);
  for (std::size_t i = 1; i < c.levels(); ++i) {
    const CablingPair& next = c.pairs()[i];
    const Slope fraction(next.meridian, next.longitude);
    const Integer width = ab[i - 1].A - ab[i - 1].B;
    if (!(fraction > Slope(width, 1))) {
      return {false, i + 1,
              "cabling fraction " + fraction.to_string() + " at " + level_text(i + 1) +
                  " does not exceed width " + width.str()};
    }
  }
  return {true, 0, ""};
}

std::string_view to_string(LevelState s) {
  switch (s) {
    case LevelState::NegStartSimpleUtp: return "NEG_START_SIMPLE_UTP";
    case LevelState::BreveSimpleUtpOpen: return "BREVE_SIMPLE_UTP_OPEN";
    case LevelState::SimpleUtpClosed: return "SIMPLE_UTP_CLOSED";
    case LevelState::Candidate: return "CANDIDATE";
  }
  return "?";
}

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::NegativeTorusStart: return "negative-torus-start";
    case Rule::PositiveTorusStart: return "positive-torus-start";
    case Rule::CablingClosure: return "cabling-closure";
    case Rule::BreveContinuation: return "breve-continuation";
    case Rule::InnerCableUtp: return "inner-cable-utp";
    case Rule::NecessaryConditionGap: return "necessary-condition-gap";
    case Rule::CandidateAbsorbing: return "candidate-absorbing";
  }
  return "?";
}

std::string_view describe(Rule r) {
  switch (r) {
    case Rule::NegativeTorusStart:
      return "negative torus knots are Legendrian simple and satisfy the UTP";
    case Rule::PositiveTorusStart:
      return "positive torus knot: K-breve, Legendrian simple";
    case Rule::CablingClosure:
      return "cablings of a Legendrian simple knot with the UTP are simple with the UTP";
    case Rule::BreveContinuation:
      return "slope outside (-1/B, 0): still K-breve, Legendrian simple";
    case Rule::InnerCableUtp:
      return "slope in (-1/A, 0) over a K-breve knot: Legendrian simple with the UTP";
    case Rule::NecessaryConditionGap:
      return "necessary-condition gap: P/q in (0, w) over a K-breve knot";
    case Rule::CandidateAbsorbing:
      return "prefix already a candidate; no rule restores a verdict";
  }
  return "?";
}

std::string_view to_string(Answer a) { return a == Answer::Yes ? "yes" : "unknown"; }

Verdict classify(const KnotSpec& spec) {
  const KnotSpec k = to_cprime_framing(spec);
  const KnotSpec c = to_c_framing(spec);
  const std::vector<ABPair> ab = ab_levels(k);

  Verdict v;
  if (k.level(1).meridian < 0) {
    v.levels.push_back({LevelState::NegStartSimpleUtp, Rule::NegativeTorusStart});
  } else {
    v.levels.push_back({LevelState::BreveSimpleUtpOpen, Rule::PositiveTorusStart});
  }

  for (std::size_t i = 1; i < k.levels(); ++i) {
    const LevelState prev = v.levels.back().state;
    switch (prev) {
      case LevelState::NegStartSimpleUtp:
      case LevelState::SimpleUtpClosed:
        v.levels.push_back({prev, Rule::CablingClosure});
        break;
      case LevelState::Candidate:
        v.levels.push_back({prev, Rule::CandidateAbsorbing});
        break;
      case LevelState::BreveSimpleUtpOpen:
        switch (region(k.pairs()[i], ab[i - 1])) {
          case SlopeRegion::OutsideBreveGap:
            v.levels.push_back({LevelState::BreveSimpleUtpOpen, Rule::BreveContinuation});
            break;
          case SlopeRegion::InnerCable:
            v.levels.push_back({LevelState::SimpleUtpClosed, Rule::InnerCableUtp});
            break;
          case SlopeRegion::Gap: {
            v.levels.push_back({LevelState::Candidate, Rule::NecessaryConditionGap});
            const CablingPair& next = k.pairs()[i];
            v.witness = CandidateWitness{
                i + 1,
                Slope(next.longitude, next.meridian),
                Slope(-1, ab[i - 1].B),
                Slope(-1, ab[i - 1].A),
                Slope(c.pairs()[i].meridian, c.pairs()[i].longitude),
                ab[i - 1].A - ab[i - 1].B,
            };
            break;
          }
        }
        break;
    }
  }

  switch (v.final_state()) {
    case LevelState::NegStartSimpleUtp:
    case LevelState::SimpleUtpClosed:
      v.simple = Answer::Yes;
      v.utp = Answer::Yes;
      break;
    case LevelState::BreveSimpleUtpOpen:
      v.simple = Answer::Yes;
      v.utp = Answer::Unknown;
      break;
    case LevelState::Candidate:
      v.simple = Answer::Unknown;
      v.utp = Answer::Unknown;
      break;
  }
  return v;
}

void audit(const Verdict& verdict, const KnotSpec& spec) {
  const KnotSpec k = to_cprime_framing(spec);
  const KnotSpec c = to_c_framing(spec);
  if (verdict.levels.size() != k.levels()) {
    throw ConsistencyError("verdict has " + std::to_string(verdict.levels.size()) +
                           " levels for a " + std::to_string(k.levels()) + "-level knot");
  }
  const std::vector<ABPair> ab = ab_levels(k);
  auto fail = [&](std::size_t level, const std::string& what) {
    throw ConsistencyError("verdict audit failed at " + level_text(level) + ": " + what);
  };

  for (std::size_t i = 0; i < verdict.levels.size(); ++i) {
    const auto [state, rule] = verdict.levels[i];
    const std::size_t level = i + 1;
    switch (rule) {
      case Rule::NegativeTorusStart:
        if (i != 0 || k.level(1).meridian >= 0) fail(level, "not a negative torus knot start");
        if (state != LevelState::NegStartSimpleUtp) fail(level, "wrong state");
        break;
      case Rule::PositiveTorusStart:
        if (i != 0 || k.level(1).meridian <= 1) fail(level, "not a positive torus knot start");
        if (state != LevelState::BreveSimpleUtpOpen) fail(level, "wrong state");
        break;
      case Rule::CablingClosure: {
        if (i == 0) fail(level, "closure needs a prior level");
        const LevelState prev = verdict.levels[i - 1].state;
        if (prev != LevelState::NegStartSimpleUtp && prev != LevelState::SimpleUtpClosed) {
          fail(level, "closure from a state without simple + UTP");
        }
        if (state != prev) fail(level, "closure changed state");
        break;
      }
      case Rule::CandidateAbsorbing:
        if (i == 0 || verdict.levels[i - 1].state != LevelState::Candidate ||
            state != LevelState::Candidate) {
          fail(level, "candidate absorption without a candidate prefix");
        }
        break;
      case Rule::BreveContinuation:
      case Rule::InnerCableUtp:
      case Rule::NecessaryConditionGap: {
        if (i == 0 || verdict.levels[i - 1].state != LevelState::BreveSimpleUtpOpen) {
          fail(level, "rule needs a K-breve prefix");
        }
        if (!is_breve(k.prefix(i)).breve) fail(level, "prefix is not K-breve");
        const SlopeRegion where = region(k.pairs()[i], ab[i - 1]);
        // Same region read off the C framing: P/q against (0, w).
        const Slope fraction(c.pairs()[i].meridian, c.pairs()[i].longitude);
        const Slope width(ab[i - 1].A - ab[i - 1].B, 1);
        SlopeRegion by_fraction = SlopeRegion::OutsideBreveGap;
        if (fraction < Slope(0, 1)) by_fraction = SlopeRegion::InnerCable;
        else if (fraction < width) by_fraction = SlopeRegion::Gap;
        if (where != by_fraction) fail(level, "C and C' slope regions disagree");

        if (rule == Rule::BreveContinuation &&
            (where != SlopeRegion::OutsideBreveGap || state != LevelState::BreveSimpleUtpOpen)) {
          fail(level, "breve continuation precondition");
        }
        if (rule == Rule::InnerCableUtp &&
            (where != SlopeRegion::InnerCable || state != LevelState::SimpleUtpClosed)) {
          fail(level, "inner cable precondition");
        }
        if (rule == Rule::NecessaryConditionGap &&
            (where != SlopeRegion::Gap || state != LevelState::Candidate)) {
          fail(level, "gap precondition");
        }
        break;
      }
    }
  }

  const bool simple_yes = verdict.simple == Answer::Yes;
  const bool utp_yes = verdict.utp == Answer::Yes;
  switch (verdict.final_state()) {
    case LevelState::NegStartSimpleUtp:
    case LevelState::SimpleUtpClosed:
      if (!simple_yes || !utp_yes) fail(k.levels(), "summary should be (yes, yes)");
      break;
    case LevelState::BreveSimpleUtpOpen:
      if (!simple_yes || utp_yes) fail(k.levels(), "summary should be (yes, unknown)");
      break;
    case LevelState::Candidate:
      if (simple_yes || utp_yes || !verdict.witness) {
        fail(k.levels(), "candidate must report (unknown, unknown) with a witness");
      }
      break;
  }
}

}  // namespace cabling
