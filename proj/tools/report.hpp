#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cabling/knot.hpp"
#include "cabling/serialization.hpp"

namespace cabling::cli {

std::string_view tool_version();

// A rendered command result: the JSON document and its plain-text form.
struct Report {
  Json json;
  std::string text;
};

struct RangeOptions {
  std::optional<CablingPair> cable;  // C' framing (p, q)
  std::optional<Integer> tb_floor;
};

Report invariants_report(std::string_view input, const KnotSpec& spec);
Report classify_report(std::string_view input, const KnotSpec& spec);
Report range_report(std::string_view input, const KnotSpec& spec, const RangeOptions& options);
Report tori_report(std::string_view input, const KnotSpec& spec, std::uint64_t k_max);
Report convert_report(std::string_view input, const KnotSpec& spec, Framing target);

}  // namespace cabling::cli
