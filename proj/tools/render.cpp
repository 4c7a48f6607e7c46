#include "render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cabling/error.hpp"

namespace cabling::cli {

namespace {

constexpr long kMaxColumns = 4000;

struct Extent {
  Integer min_rotation;
  Integer max_rotation;
};

Extent extent(const std::vector<Row>& rows) {
  Extent e{0, 0};
  bool first = true;
  for (const Row& row : rows) {
    if (row.rotations.empty()) continue;
    if (first || row.rotations.front() < e.min_rotation) e.min_rotation = row.rotations.front();
    if (first || row.rotations.back() > e.max_rotation) e.max_rotation = row.rotations.back();
    first = false;
  }
  return e;
}

long to_long(const Integer& v) {
  if (abs(v) > kMaxColumns * 4) {
    throw DomainError("mountain range too wide to draw; use --format json");
  }
  return v.convert_to<long>();
}

}  // namespace

std::string render_ascii(const MountainRange& range) {
  const std::vector<Row> rows = range.rows();
  const Extent e = extent(rows);
  const long width = to_long(e.max_rotation - e.min_rotation) + 1;
  if (width > kMaxColumns) throw DomainError("mountain range too wide to draw; use --format json");

  std::set<Integer> peaks(range.peak_rotations.begin(), range.peak_rotations.end());
  std::size_t label = 0;
  for (const Row& row : rows) label = std::max(label, row.tb.str().size());

  std::ostringstream out;
  for (const Row& row : rows) {
    std::string cells(static_cast<std::size_t>(width), ' ');
    for (const Integer& r : row.rotations) {
      char mark = '*';
      if (row.tb == range.tb_max && peaks.contains(r)) mark = '^';
      for (const ValleyRecord& v : range.valleys) {
        if (v.rotation == r && v.tb == row.tb) mark = 'v';
      }
      cells[static_cast<std::size_t>(to_long(r - e.min_rotation))] = mark;
    }
    while (!cells.empty() && cells.back() == ' ') cells.pop_back();
    std::string tb = row.tb.str();
    out << std::string(label - tb.size(), ' ') << tb << " | " << cells << '\n';
  }
  return out.str();
}

std::string render_svg(const MountainRange& range) {
  const std::vector<Row> rows = range.rows();
  const Extent e = extent(rows);
  const long columns = to_long(e.max_rotation - e.min_rotation) + 1;
  if (columns > kMaxColumns) throw DomainError("mountain range too wide to draw; use --format json");

  constexpr int cell = 24;
  constexpr int margin = 48;
  const long width = columns * cell + 2 * margin;
  const long height = static_cast<long>(rows.size()) * cell + 2 * margin;
  auto x = [&](const Integer& r) { return margin + to_long(r - e.min_rotation) * cell + cell / 2; };
  auto y = [&](const Integer& tb) { return margin + to_long(range.tb_max - tb) * cell + cell / 2; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "  <title>Legendrian mountain range, tb_max = " << range.tb_max.str() << "</title>\n";
  svg << "  <g stroke=\"#888\" stroke-width=\"1\">\n";
  for (const Row& row : rows) {
    if (row.tb <= range.tb_floor) continue;
    for (const Integer& r : row.rotations) {
      for (int side : {-1, 1}) {
        svg << "    <line x1=\"" << x(r) << "\" y1=\"" << y(row.tb) << "\" x2=\"" << x(r + side)
            << "\" y2=\"" << y(row.tb - 1) << "\"/>\n";
      }
    }
  }
  svg << "  </g>\n  <g fill=\"#333\">\n";
  for (const Row& row : rows) {
    for (const Integer& r : row.rotations) {
      svg << "    <circle cx=\"" << x(r) << "\" cy=\"" << y(row.tb) << "\" r=\"3\"/>\n";
    }
  }
  svg << "  </g>\n  <g fill=\"#000\">\n";
  for (const Integer& r : range.peak_rotations) {
    svg << "    <circle class=\"peak\" cx=\"" << x(r) << "\" cy=\"" << y(range.tb_max)
        << "\" r=\"6\"/>\n";
  }
  svg << "  </g>\n  <g fill=\"#c00\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (const ValleyRecord& v : range.valleys) {
    if (v.tb < range.tb_floor) continue;
    svg << "    <circle class=\"valley\" cx=\"" << x(v.rotation) << "\" cy=\"" << y(v.tb)
        << "\" r=\"5\"/>\n";
    svg << "    <text x=\"" << x(v.rotation) + 7 << "\" y=\"" << y(v.tb) + 14 << "\">depth "
        << v.depth.str() << "</text>\n";
  }
  svg << "  </g>\n  <g font-family=\"sans-serif\" font-size=\"10\" fill=\"#000\">\n";
  for (const Row& row : rows) {
    svg << "    <text x=\"4\" y=\"" << y(row.tb) + 4 << "\">" << row.tb.str() << "</text>\n";
  }
  svg << "    <text x=\"" << margin << "\" y=\"" << height - 8 << "\">rotation "
      << e.min_rotation.str() << " .. " << e.max_rotation.str() << "</text>\n";
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace cabling::cli
