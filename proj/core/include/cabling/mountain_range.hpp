#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cabling/knot.hpp"
#include "cabling/rational.hpp"

namespace cabling {

struct LatticePoint {
  Integer rotation;
  Integer tb;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

enum class RangeKind { SinglePeak, Interleaved };

enum class ValleyKind {
  SharedRotation,    // between the two peaks q rho -+ s over one rho; depth s
  AdjacentRotation,  // between peaks over rho and rho + 2; depth q - s
};

struct ValleyRecord {
  Integer rotation;
  Integer tb;
  Integer depth;
  ValleyKind kind;
  // Peaks reached by `depth` negative and `depth` positive destabilizations.
  std::array<LatticePoint, 2> targets;
};

struct Row {
  Integer tb;
  std::vector<Integer> rotations;  // ascending
};

/// A Legendrian mountain range: peaks at tb_max and the union of their
/// stabilization cones below. Below-peak points are the cone union only.
struct MountainRange {
  RangeKind kind = RangeKind::SinglePeak;
  Integer tb_max;
  std::vector<Integer> peak_rotations;  // ascending
  std::vector<ValleyRecord> valleys;    // ascending by rotation
  Integer tb_floor;

  // Inner-cable data; empty for single-peak ranges.
  std::optional<Integer> shell_n;
  std::optional<Integer> shell_s;

  std::vector<LatticePoint> peaks() const;
  bool occupied(const LatticePoint& pt) const;
  // Rows from tb_max down to tb_floor.
  std::vector<Row> rows() const;
};

// Single peak at (0, A_r - B_r). Throws DomainError if spec is not K-breve.
MountainRange breve_range(const KnotSpec& spec, const Integer& tb_floor);

// Range of the (p, q) cable (C' framing) of a K-breve knot with q/p in
// (-1/A_r, 0). Peaks are {+-(p + n q + q rho)} over the rotations rho of the
// K-breve knot at tb = A_r - n. tb_floor defaults to tb_max - 10.
MountainRange cable_peaks(const KnotSpec& spec, const Integer& p, const Integer& q,
                          const std::optional<Integer>& tb_floor = std::nullopt);

}  // namespace cabling
