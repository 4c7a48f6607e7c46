#include "cabling/mountain_range.hpp"

#include <algorithm>

#include "cabling/classification.hpp"
#include "cabling/error.hpp"
#include "cabling/invariants.hpp"

namespace cabling {

std::vector<LatticePoint> MountainRange::peaks() const {
  std::vector<LatticePoint> out;
  out.reserve(peak_rotations.size());
  for (const Integer& r : peak_rotations) out.push_back({r, tb_max});
  return out;
}

bool MountainRange::occupied(const LatticePoint& pt) const {
  if (pt.tb > tb_max) return false;
  const Integer drop = tb_max - pt.tb;
  for (const Integer& r : peak_rotations) {
    const Integer offset = abs(pt.rotation - r);
    if (offset <= drop && (drop - offset) % 2 == 0) return true;
  }
  return false;
}

std::vector<Row> MountainRange::rows() const {
  std::vector<Row> out;
  for (Integer tb = tb_max; tb >= tb_floor; --tb) {
    const Integer drop = tb_max - tb;
    Row row{tb, {}};
    // Cones of same-parity peaks, merged left to right. All peaks share one
    // parity, so each cone is an arithmetic run with step 2.
    Integer next;  // smallest rotation not yet emitted
    bool started = false;
    for (const Integer& peak : peak_rotations) {
      Integer r = peak - drop;
      if (started && r < next) r = next;
      for (; r <= peak + drop; r += 2) row.rotations.push_back(r);
      next = r;
      started = true;
    }
    out.push_back(std::move(row));
  }
  return out;
}

MountainRange breve_range(const KnotSpec& spec, const Integer& tb_floor) {
  const BreveWitness breve = is_breve(spec);
  if (!breve.breve) throw DomainError("not in class K-breve: " + breve.reason);
  const ABPair ab = ab_recursive(spec);
  MountainRange range;
  range.kind = RangeKind::SinglePeak;
  range.tb_max = ab.A - ab.B;
  range.peak_rotations = {0};
  range.tb_floor = tb_floor;
  return range;
}

MountainRange cable_peaks(const KnotSpec& spec, const Integer& p, const Integer& q,
                          const std::optional<Integer>& tb_floor) {
  const BreveWitness breve = is_breve(spec);
  if (!breve.breve) throw DomainError("not in class K-breve: " + breve.reason);
  if (q <= 1 || p == 0 || gcd(p, q) != 1) {
    throw ValidationError("cable (" + p.str() + "," + q.str() + ") needs q > 1 and gcd 1");
  }
  const ABPair ab = ab_recursive(spec);
  const Slope slope(q, p);
  if (!in_open_interval(slope, Slope(-1, ab.A), Slope(0, 1))) {
    throw DomainError("cable slope " + slope.to_string() + " is not in (" +
                      Slope(-1, ab.A).to_string() + ", 0)");
  }

  const Integer n = shell_integer(ab.A, slope);
  const Integer s = -p - n * q;
  if (!(0 < s && s < q)) {
    throw ConsistencyError("shell offset s = " + s.str() + " outside (0, " + q.str() + ")");
  }

  MountainRange range;
  range.kind = RangeKind::Interleaved;
  range.tb_max = q * q * ab.A + p * q;  // A_{r+1} = P_{r+1} q_{r+1}
  range.shell_n = n;
  range.shell_s = s;
  range.tb_floor = tb_floor.value_or(range.tb_max - 10);

  // Rotations of the K-breve knot at tb = A_r - n: -(n - B_r), ..., n - B_r.
  const Integer reach = n - ab.B;
  for (Integer rho = -reach; rho <= reach; rho += 2) {
    const Integer r = p + n * q + q * rho;
    range.peak_rotations.push_back(r);
    range.peak_rotations.push_back(-r);
  }
  std::sort(range.peak_rotations.begin(), range.peak_rotations.end());

  // Peaks alternate q rho - s, q rho + s; the pair over one rho bounds a
  // depth-s valley, consecutive pairs bound a depth q - s valley.
  for (std::size_t i = 0; i + 1 < range.peak_rotations.size(); ++i) {
    const Integer& left = range.peak_rotations[i];
    const Integer& right = range.peak_rotations[i + 1];
    const Integer gap = right - left;
    if (gap % 2 != 0) throw ConsistencyError("peak rotations of mixed parity");
    const Integer depth = gap / 2;
    const Integer mid = left + depth;
    const ValleyKind kind = i % 2 == 0 ? ValleyKind::SharedRotation : ValleyKind::AdjacentRotation;
    const Integer expected = kind == ValleyKind::SharedRotation ? s : q - s;
    if (depth != expected) {
      throw ConsistencyError("valley depth " + depth.str() + " where " + expected.str() +
                             " was expected");
    }
    range.valleys.push_back(
        {mid, range.tb_max - depth, depth, kind, {{{left, range.tb_max}, {right, range.tb_max}}}});
  }
  return range;
}

}  // namespace cabling
