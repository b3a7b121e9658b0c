#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unref/numerical_semigroup.hpp"

namespace unref {

/// Staircase diagram of a numerical set: walking 0..frobenius, each member
/// contributes an east step and each gap a north step. Rows are stored
/// longest first (top row first); storage row r is the row closed by the
/// (genus-1-r)-th gap of the walk, so the bottom storage row is the walk's
/// first row.
class YoungDiagram {
 public:
  static YoungDiagram from_set(NumericalSet source);  // throws when gapless

  const std::vector<Int>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t column_count() const noexcept { return static_cast<std::size_t>(rows_.front()); }
  const NumericalSet& source() const noexcept { return source_; }

  /// Gap whose north step closes storage row r (top row holds the largest).
  Int gap_of_row(std::size_t r) const;

 private:
  YoungDiagram(std::vector<Int> rows, NumericalSet source)
      : rows_(std::move(rows)), source_(std::move(source)) {}
  std::vector<Int> rows_;
  NumericalSet source_;
};

/// Re-walks the boundary path of the diagram back into a numerical set.
NumericalSet set_from_diagram(const YoungDiagram& d);

/// Arm/leg/hook lengths for every cell of a diagram.
class HookGrid {
 public:
  explicit HookGrid(const YoungDiagram& d);

  const std::vector<std::vector<Int>>& rows() const noexcept { return hooks_; }
  Int hook(std::size_t r, std::size_t c) const { return hooks_.at(r).at(c); }
  Int arm(std::size_t r, std::size_t c) const;
  Int leg(std::size_t r, std::size_t c) const;

  std::vector<Int> first_column() const;             // top to bottom
  std::vector<Int> first_column_path_order() const;  // bottom to top
  std::vector<Int> all_values() const;               // row-major

 private:
  std::vector<Int> row_lengths_;
  std::vector<Int> column_heights_;
  std::vector<std::vector<Int>> hooks_;
};

HookGrid hook_grid(const YoungDiagram& d);

/// True when every hook value occurs among the first-column hooks; holds
/// exactly when the source set is additively closed.
bool semigroup_by_hooks(const YoungDiagram& d);

/// True when every hook value either occurs in the first column or the
/// first-column hook of its row is exactly its double. On diagrams sourced
/// from a gap partition this decides unrefinability.
bool unrefinable_by_hooks(const YoungDiagram& d);

enum class DiagramRender { Outline, Hooks };

/// Monospace rendering; Hooks mode prints right-aligned hook lengths.
std::string render(const YoungDiagram& d, DiagramRender mode);

}  // namespace unref
