#include "unref/young_diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace unref {

YoungDiagram YoungDiagram::from_set(NumericalSet source) {
  if (!source.has_gaps()) {
    throw std::invalid_argument("no gaps: the diagram would be empty");
  }
  const auto& gaps = source.gaps();
  const std::size_t genus = gaps.size();
  // The row closed by the i-th gap (1-based, in walk order) spans one cell
  // per member below that gap.
  std::vector<Int> rows(genus);
  for (std::size_t i = 0; i < genus; ++i) {
    rows[genus - 1 - i] = gaps[i] - static_cast<Int>(i);
  }
  return YoungDiagram(std::move(rows), std::move(source));
}

Int YoungDiagram::gap_of_row(std::size_t r) const {
  return source_.gaps().at(rows_.size() - 1 - r);
}

NumericalSet set_from_diagram(const YoungDiagram& d) {
  const auto& rows = d.rows();
  const std::size_t genus = rows.size();
  std::vector<Int> gaps(genus);
  for (std::size_t i = 0; i < genus; ++i) {
    gaps[i] = rows[genus - 1 - i] + static_cast<Int>(i);
  }
  return NumericalSet::from_gaps(std::move(gaps));
}

HookGrid::HookGrid(const YoungDiagram& d) : row_lengths_(d.rows()) {
  const std::size_t columns = d.column_count();
  column_heights_.assign(columns, 0);
  for (Int len : row_lengths_) {
    for (Int c = 0; c < len; ++c) ++column_heights_[static_cast<std::size_t>(c)];
  }
  hooks_.resize(row_lengths_.size());
  for (std::size_t r = 0; r < row_lengths_.size(); ++r) {
    hooks_[r].resize(static_cast<std::size_t>(row_lengths_[r]));
    for (std::size_t c = 0; c < hooks_[r].size(); ++c) {
      hooks_[r][c] = arm(r, c) + leg(r, c) + 1;
    }
  }
}

Int HookGrid::arm(std::size_t r, std::size_t c) const {
  return row_lengths_.at(r) - static_cast<Int>(c) - 1;
}

Int HookGrid::leg(std::size_t r, std::size_t c) const {
  return column_heights_.at(c) - static_cast<Int>(r) - 1;
}

std::vector<Int> HookGrid::first_column() const {
  std::vector<Int> out;
  out.reserve(hooks_.size());
  for (const auto& row : hooks_) out.push_back(row.front());
  return out;
}

std::vector<Int> HookGrid::first_column_path_order() const {
  auto out = first_column();
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Int> HookGrid::all_values() const {
  std::vector<Int> out;
  for (const auto& row : hooks_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

HookGrid hook_grid(const YoungDiagram& d) { return HookGrid(d); }

bool semigroup_by_hooks(const YoungDiagram& d) {
  const HookGrid grid(d);
  const auto first = grid.first_column();
  const std::unordered_set<Int> column(first.begin(), first.end());
  for (const auto& row : grid.rows()) {
    for (Int h : row) {
      if (!column.contains(h)) return false;
    }
  }
  return true;
}

bool unrefinable_by_hooks(const YoungDiagram& d) {
  const HookGrid grid(d);
  const auto first = grid.first_column();
  const std::unordered_set<Int> column(first.begin(), first.end());
  for (std::size_t r = 0; r < grid.rows().size(); ++r) {
    for (Int h : grid.rows()[r]) {
      if (column.contains(h)) continue;
      if (first[r] == 2 * h) continue;  // doubled hook heads its own row
      return false;
    }
  }
  return true;
}

std::string render(const YoungDiagram& d, DiagramRender mode) {
  std::ostringstream os;
  if (mode == DiagramRender::Outline) {
    for (Int len : d.rows()) {
      for (Int c = 0; c < len; ++c) os << "[]";
      os << '\n';
    }
    return os.str();
  }

  const HookGrid grid(d);
  std::size_t width = 1;
  for (const auto& row : grid.rows()) {
    for (Int h : row) width = std::max(width, std::to_string(h).size());
  }
  for (const auto& row : grid.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string text = std::to_string(row[c]);
      if (c > 0) os << ' ';
      os << std::string(width - text.size(), ' ') << text;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace unref
