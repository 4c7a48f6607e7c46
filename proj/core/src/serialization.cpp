#include "cabling/serialization.hpp"

#include <cstdint>
#include <limits>
#include <string>

#include "cabling/error.hpp"

namespace cabling {

Json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw ValidationError("not an integer: \"" + s + "\"");
    }
    return Integer(s);
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

Json to_json(const KnotSpec& spec) {
  Json pairs = Json::array();
  for (const auto& [c, q] : spec.pairs()) {
    pairs.push_back(Json::array({integer_to_json(c), integer_to_json(q)}));
  }
  return Json{{"framing", std::string(to_string(spec.framing()))}, {"pairs", std::move(pairs)}};
}

KnotSpec knot_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("framing") || !j.contains("pairs")) {
    throw ValidationError("knot JSON needs \"framing\" and \"pairs\"");
  }
  RawKnot raw;
  const Json& framing = j.at("framing");
  if (framing == "C") {
    raw.framing = Framing::C;
  } else if (framing == "Cprime") {
    raw.framing = Framing::Cprime;
  } else {
    throw ValidationError("unknown framing " + framing.dump());
  }
  const Json& pairs = j.at("pairs");
  if (!pairs.is_array()) throw ValidationError("\"pairs\" must be an array");
  for (const Json& pair : pairs) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ValidationError("each pair must be a two-element array, got " + pair.dump());
    }
    raw.pairs.push_back({integer_from_json(pair[0]), integer_from_json(pair[1])});
  }
  return validate(std::move(raw));
}

namespace {

Json integers(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const Integer& v : values) out.push_back(integer_to_json(v));
  return out;
}

Json conditional(const Conditional& c) {
  if (c.defined()) {
    return Json{{"defined", true}, {"value", integer_to_json(*c.value)}, {"rule", c.rule}};
  }
  return Json{{"defined", false}, {"reason", c.reason}};
}

Json point(const LatticePoint& pt) {
  return Json::array({integer_to_json(pt.rotation), integer_to_json(pt.tb)});
}

}  // namespace

Json to_json(const InvariantRecord& record) {
  return Json{
      {"A", integers(record.A)},
      {"B", integers(record.B)},
      {"P", integers(record.P)},
      {"rules",
       {{"A", "closed form, checked against recursion"},
        {"B", "closed form, checked against recursion"},
        {"P", "P_i = q_i A_{i-1} + p_i"}}},
      {"euler_char", conditional(record.euler_char)},
      {"max_tb", conditional(record.max_tb)},
      {"max_sl", conditional(record.max_sl)},
      {"width", conditional(record.width)},
  };
}

Json to_json(const Verdict& verdict) {
  Json levels = Json::array();
  for (std::size_t i = 0; i < verdict.levels.size(); ++i) {
    levels.push_back({{"level", i + 1},
                      {"state", std::string(to_string(verdict.levels[i].state))},
                      {"rule", std::string(to_string(verdict.levels[i].rule))}});
  }
  Json out{{"levels", std::move(levels)},
           {"simple", std::string(to_string(verdict.simple))},
           {"utp", std::string(to_string(verdict.utp))},
           {"witness", nullptr}};
  if (verdict.witness) {
    const CandidateWitness& w = *verdict.witness;
    out["witness"] = {
        {"level", w.level},
        {"cabling_slope", w.cabling_slope.to_string()},
        {"interval", Json::array({w.lower.to_string(), w.upper.to_string()})},
        {"cabling_fraction", w.cabling_fraction.to_string()},
        {"width", integer_to_json(w.width)},
        {"fraction_interval", Json::array({"0/1", Slope(w.width, 1).to_string()})},
    };
  }
  return out;
}

Json to_json(const MountainRange& range) {
  Json peaks = Json::array();
  for (const LatticePoint& pt : range.peaks()) peaks.push_back(point(pt));

  Json valleys = Json::array();
  for (const ValleyRecord& v : range.valleys) {
    valleys.push_back({
        {"r", integer_to_json(v.rotation)},
        {"tb", integer_to_json(v.tb)},
        {"depth", integer_to_json(v.depth)},
        {"kind", v.kind == ValleyKind::SharedRotation ? "shared_rotation" : "adjacent_rotation"},
        {"targets", Json::array({point(v.targets[0]), point(v.targets[1])})},
    });
  }

  Json rows = Json::array();
  for (const Row& row : range.rows()) {
    rows.push_back({{"tb", integer_to_json(row.tb)}, {"rotations", integers(row.rotations)}});
  }

  Json out{
      {"kind", range.kind == RangeKind::SinglePeak ? "single_peak" : "interleaved"},
      {"tb_max", integer_to_json(range.tb_max)},
      {"tb_floor", integer_to_json(range.tb_floor)},
      {"peaks", std::move(peaks)},
      {"valleys", std::move(valleys)},
      {"rows", std::move(rows)},
      {"below_peaks", "cone_union"},
  };
  if (range.shell_n) out["n"] = integer_to_json(*range.shell_n);
  if (range.shell_s) out["s"] = integer_to_json(*range.shell_s);
  return out;
}

Json to_json(const std::vector<CandidateTorus>& tori) {
  Json out = Json::array();
  for (const CandidateTorus& t : tori) {
    out.push_back({
        {"k", integer_to_json(t.k)},
        {"slope", t.intersection_slope.to_string()},
        {"reduced", t.reduced().to_string()},
        {"n", integer_to_json(t.n_k)},
        {"dividing_curves", integer_to_json(t.dividing_curves)},
    });
  }
  return out;
}

}  // namespace cabling
