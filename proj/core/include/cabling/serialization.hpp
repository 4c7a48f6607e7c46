#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "cabling/classification.hpp"
#include "cabling/invariants.hpp"
#include "cabling/knot.hpp"
#include "cabling/mountain_range.hpp"
#include "cabling/thickening.hpp"

namespace cabling {

// Insertion-ordered so that dump -> parse -> dump is byte-identical.
using Json = nlohmann::ordered_json;

// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& j);

Json to_json(const KnotSpec& spec);
// {"framing":"C"|"Cprime","pairs":[[c,q],...]}; throws ValidationError.
KnotSpec knot_from_json(const Json& j);

Json to_json(const InvariantRecord& record);
Json to_json(const Verdict& verdict);
Json to_json(const MountainRange& range);
Json to_json(const std::vector<CandidateTorus>& tori);

}  // namespace cabling
