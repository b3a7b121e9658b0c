#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace unref {

using Int = std::int64_t;

/// A partition into distinct parts, stored as strictly increasing positive
/// integers. Immutable value type; derived data is recomputed on demand.
class DistinctPartition {
 public:
  /// Validates and adopts `parts`. Throws std::invalid_argument on
  /// non-positive values, duplicates, or non-increasing order.
  static DistinctPartition from_parts(std::vector<Int> parts);

  const std::vector<Int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  Int largest() const noexcept { return parts_.back(); }
  Int weight() const noexcept;
  bool contains(Int x) const noexcept;

  /// Copy with one extra part inserted at its sorted position.
  /// Throws std::invalid_argument when `x` is non-positive or already a part.
  DistinctPartition with_part(Int x) const;

  std::string to_string() const;  // "(1,2,3,5)"

  auto operator<=>(const DistinctPartition&) const = default;

 private:
  explicit DistinctPartition(std::vector<Int> parts) : parts_(std::move(parts)) {}
  std::vector<Int> parts_;
};

/// The integers in [1, largest part] absent from a partition, increasing.
/// The minimal excludant is the smallest of them, 0 when there are none.
struct MissingParts {
  std::vector<Int> values;

  /// Validates a standalone value set (positive, strictly increasing).
  static MissingParts from_values(std::vector<Int> values);

  Int mex() const noexcept { return values.empty() ? 0 : values.front(); }
  std::size_t count() const noexcept { return values.size(); }
  bool contains(Int x) const noexcept;
};

/// Complement of the parts inside [1, largest part].
MissingParts missing_parts(const DistinctPartition& p);

/// n(n+1)/2 for n >= 0.
Int triangular(Int n);

/// The two staircase families: (1,...,n), and (1,...,n) with one inner part
/// removed. Both are unrefinable since at most one part is missing.
struct CanonicalFamily {
  enum class Kind { Complete, NearComplete };

  Kind kind = Kind::Complete;
  Int n = 0;
  Int d = 0;  // removed part for NearComplete, 1 <= d <= n-1

  Int weight() const;
  DistinctPartition realize() const;
};

/// Picks the staircase family of weight N. Requires N > 2.
CanonicalFamily canonical_family_for(Int N);

/// An unrefinable partition of weight N. Requires N > 2.
DistinctPartition canonical_unrefinable(Int N);

/// Missing-part bound for unrefinable partitions: count <= floor(largest/2).
/// The caller asserts unrefinability; this only evaluates the inequality.
bool missing_bound_holds(const DistinctPartition& p);

}  // namespace unref
