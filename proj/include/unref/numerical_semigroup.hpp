#pragma once

#include <string>
#include <vector>

#include "unref/partition.hpp"
#include "unref/refinability.hpp"

namespace unref {

/// A cofinite subset of the non-negative integers containing 0, stored as
/// its finite gap set.
class NumericalSet {
 public:
  /// Gaps must be positive and strictly increasing (the empty list gives
  /// the full set of non-negative integers).
  static NumericalSet from_gaps(std::vector<Int> gaps);

  const std::vector<Int>& gaps() const noexcept { return gaps_; }
  bool has_gaps() const noexcept { return !gaps_.empty(); }
  bool contains(Int x) const noexcept;

  Int frobenius() const;              // largest gap; throws when there is none
  Int genus() const noexcept;         // number of gaps
  Int multiplicity() const noexcept;  // least positive member

  std::vector<Int> members_up_to(Int bound) const;  // includes 0

  std::string to_string() const;  // "{0,3,6,8,9,11,12,14,->}"

  friend bool operator==(const NumericalSet&, const NumericalSet&) = default;

 private:
  explicit NumericalSet(std::vector<Int> gaps) : gaps_(std::move(gaps)) {}
  std::vector<Int> gaps_;
};

/// True when no gap is a sum of two positive members (sums past the largest
/// gap land in the cofinite tail and need no check).
bool is_semigroup(const NumericalSet& s);

/// A numerical set validated for additive closure.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_set(NumericalSet s);          // throws when not closed
  static NumericalSemigroup from_gaps(std::vector<Int> gaps);  // convenience
  /// Submonoid generated by positive integers, materialized as a gap set.
  /// Throws std::invalid_argument unless the generators have gcd 1.
  static NumericalSemigroup from_generators(const std::vector<Int>& generators);

  const NumericalSet& set() const noexcept { return set_; }
  const std::vector<Int>& gaps() const noexcept { return set_.gaps(); }
  bool contains(Int x) const noexcept { return set_.contains(x); }
  Int frobenius() const { return set_.frobenius(); }
  Int genus() const noexcept { return set_.genus(); }
  Int multiplicity() const noexcept { return set_.multiplicity(); }

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

 private:
  explicit NumericalSemigroup(NumericalSet s) : set_(std::move(s)) {}
  NumericalSet set_;
};

/// Least member in each residue class modulo n; index 0 holds 0. n >= 1.
std::vector<Int> apery_set(const NumericalSemigroup& s, Int n);

/// The unique minimal generating set: positive members that are not a sum
/// of two positive members. Its size is the embedding dimension.
std::vector<Int> minimal_generators(const NumericalSemigroup& s);

/// Odd Frobenius number and every gap mirrors into the set. Requires gaps.
bool is_symmetric(const NumericalSemigroup& s);

/// Even Frobenius number and every gap except its half mirrors into the
/// set. Requires gaps.
bool is_pseudo_symmetric(const NumericalSemigroup& s);

/// The numerical set whose gaps are exactly the parts of `p`.
NumericalSet set_from_partition(const DistinctPartition& p);

/// The gap set read back as a partition. Requires at least one gap.
DistinctPartition gap_partition(const NumericalSet& s);

/// Side-by-side comparison of the least-member-per-class table (modulo the
/// multiplicity) and the insertion thresholds of the gap partition. The two
/// agree position-by-position away from class 0 exactly when no class needs
/// a doubled member; the flags record what actually happened.
struct AperyForbiddenReport {
  Int modulus = 0;
  std::vector<Int> apery;
  ForbiddenVector thresholds;
  std::vector<bool> agrees;  // per class; class 0 compares 0 vs threshold
  bool agrees_off_zero = false;
  bool zero_is_double_multiplicity = false;
};

/// Requires multiplicity >= 2 and a gap partition with a missing value.
AperyForbiddenReport apery_vs_forbidden(const NumericalSemigroup& s);

}  // namespace unref
