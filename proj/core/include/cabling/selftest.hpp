#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cabling {

struct SelftestCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
};

// Runs the embedded oracle identities over a fixed deterministic corpus.
std::vector<SelftestCheck> run_selftest();

}  // namespace cabling
