#include "report.hpp"

#include <sstream>

#include "cabling/classification.hpp"
#include "cabling/invariants.hpp"
#include "cabling/mountain_range.hpp"
#include "cabling/thickening.hpp"
#include "render.hpp"

#ifndef CABLING_ATLAS_VERSION
#define CABLING_ATLAS_VERSION "0.0.0"
#endif

namespace cabling::cli {

std::string_view tool_version() { return CABLING_ATLAS_VERSION; }

namespace {

Json envelope(std::string_view command, std::string_view input, const KnotSpec& spec) {
  return Json{
      {"tool", {{"name", "cabling-atlas"}, {"version", std::string(tool_version())}}},
      {"command", std::string(command)},
      {"input", std::string(input)},
      {"knot", {{"C", to_json(to_c_framing(spec))}, {"Cprime", to_json(to_cprime_framing(spec))}}},
  };
}

std::string knot_header(const KnotSpec& spec) {
  return "knot (C):  " + format_knot(to_c_framing(spec)) + "\n" +
         "knot (C'): " + format_knot(to_cprime_framing(spec)) + "\n";
}

std::string conditional_text(const Conditional& c) {
  return c.defined() ? c.value->str() : "undefined (" + c.reason + ")";
}

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += values[i].str();
  }
  return out;
}

}  // namespace

Report invariants_report(std::string_view input, const KnotSpec& spec) {
  const InvariantRecord rec = classical_invariants(spec);
  Json json = envelope("invariants", input, spec);
  json["invariants"] = to_json(rec);

  std::ostringstream text;
  text << knot_header(spec);
  text << "level           P           A           B\n";
  for (std::size_t i = 0; i < rec.A.size(); ++i) {
    text << std::string(5 - std::min<std::size_t>(5, std::to_string(i + 1).size()), ' ') << i + 1;
    for (const Integer* v : {&rec.P[i], &rec.A[i], &rec.B[i]}) {
      const std::string s = v->str();
      text << ' ' << std::string(s.size() < 11 ? 11 - s.size() : 0, ' ') << s;
    }
    text << '\n';
  }
  text << "euler characteristic: " << conditional_text(rec.euler_char) << '\n';
  text << "max tb: " << conditional_text(rec.max_tb) << '\n';
  text << "max sl: " << conditional_text(rec.max_sl) << '\n';
  text << "contact width: " << conditional_text(rec.width) << '\n';
  return {std::move(json), text.str()};
}

Report classify_report(std::string_view input, const KnotSpec& spec) {
  const Verdict verdict = classify(spec);
  audit(verdict, spec);
  Json json = envelope("classify", input, spec);
  json["verdict"] = to_json(verdict);

  std::ostringstream text;
  text << knot_header(spec);
  for (std::size_t i = 0; i < verdict.levels.size(); ++i) {
    const LevelVerdict& lv = verdict.levels[i];
    text << "level " << i + 1 << ": " << to_string(lv.state) << " [" << to_string(lv.rule)
         << "] " << describe(lv.rule) << '\n';
  }
  if (verdict.witness) {
    const CandidateWitness& w = *verdict.witness;
    text << "CANDIDATE at level " << w.level << " (necessary-condition gap): slope "
         << w.cabling_slope.to_string() << " in (" << w.lower.to_string() << ", "
         << w.upper.to_string() << "), P/q = " << w.cabling_fraction.to_string() << " in (0, "
         << w.width.str() << ")\n";
    if (to_c_framing(spec) == validate({Framing::C, {{2, 3}, {2, 3}}})) {
      text << "note: this knot type is known to be Legendrian non-simple (Etnyre-Honda)\n";
    }
  }
  text << "simple: " << to_string(verdict.simple) << ", utp: " << to_string(verdict.utp) << '\n';
  return {std::move(json), text.str()};
}

Report range_report(std::string_view input, const KnotSpec& spec, const RangeOptions& options) {
  MountainRange range;
  std::string rule;
  if (options.cable) {
    range = cable_peaks(spec, options.cable->meridian, options.cable->longitude, options.tb_floor);
    rule = "inner cable of a K-breve knot: tb_max = A_{r+1}, interleaved peaks";
  } else {
    const Integer tb_max = classical_invariants(spec).max_tb.value.value_or(0);
    range = breve_range(spec, options.tb_floor.value_or(tb_max - 10));
    rule = "K-breve: single peak at (0, A_r - B_r)";
  }

  Json json = envelope("range", input, spec);
  if (options.cable) {
    json["cable"] = Json::array(
        {integer_to_json(options.cable->meridian), integer_to_json(options.cable->longitude)});
  }
  json["range"] = to_json(range);
  json["range"]["rule"] = rule;

  std::ostringstream text;
  text << knot_header(spec);
  if (options.cable) {
    text << "cable (C'): (" << options.cable->meridian.str() << ","
         << options.cable->longitude.str() << ")\n";
    text << "n = " << range.shell_n->str() << ", s = " << range.shell_s->str() << '\n';
  }
  text << "kind: " << (range.kind == RangeKind::SinglePeak ? "single peak" : "interleaved") << '\n';
  text << "tb_max: " << range.tb_max.str() << '\n';
  text << "peak rotations: " << join(range.peak_rotations) << '\n';
  for (const ValleyRecord& v : range.valleys) {
    text << "valley at (" << v.rotation.str() << ", " << v.tb.str() << ") depth " << v.depth.str()
         << " -> peaks (" << v.targets[0].rotation.str() << ", " << v.targets[0].tb.str()
         << ") and (" << v.targets[1].rotation.str() << ", " << v.targets[1].tb.str() << ")\n";
  }
  text << "below the peaks: union of stabilization cones\n";
  text << render_ascii(range);
  return {std::move(json), text.str()};
}

Report tori_report(std::string_view input, const KnotSpec& spec, std::uint64_t k_max) {
  const std::vector<CandidateTorus> tori = candidate_tori(spec, k_max);
  Json json = envelope("tori", input, spec);
  json["tori"] = to_json(tori);
  json["chain_check"] = chain_check(spec, k_max);
  json["rule"] = "candidate non-thickenable solid tori N_r^k (necessary condition only)";

  std::ostringstream text;
  text << knot_header(spec);
  text << "candidate non-thickenable solid tori, k = 0.." << k_max << '\n';
  text << "k  slope  reduced  dividing_curves\n";
  for (const CandidateTorus& t : tori) {
    text << t.k.str() << "  " << t.intersection_slope.to_string() << "  "
         << t.reduced().to_string() << "  " << t.dividing_curves.str() << '\n';
  }
  return {std::move(json), text.str()};
}

Report convert_report(std::string_view input, const KnotSpec& spec, Framing target) {
  const KnotSpec out = target == Framing::C ? to_c_framing(spec) : to_cprime_framing(spec);
  Json json = envelope("convert", input, spec);
  json["converted"] = to_json(out);
  return {std::move(json), format_knot(out) + "\n"};
}

}  // namespace cabling::cli
