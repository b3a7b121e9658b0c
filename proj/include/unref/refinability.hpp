#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unref/partition.hpp"

namespace unref {

/// A part together with two or more distinct missing values summing to it.
struct RefinementWitness {
  Int part = 0;
  std::vector<Int> summands;
};

/// Exhaustive subset-sum search over the missing values. Returns the
/// smallest part expressible as a sum of at least two distinct missing
/// values, with a two-summand witness when one exists (one always does for
/// the smallest such part), or nullopt when no part is expressible.
/// Requires at least two parts.
std::optional<RefinementWitness> brute_force_refinement(const DistinctPartition& p);

/// Per-residue-class thresholds modulo the minimal excludant. A finite
/// entry is the smallest integer in its class whose presence as a part
/// would allow a refinement; an unbounded entry means no such integer has
/// been derived. The entry for class r is always congruent to r.
class ForbiddenVector {
 public:
  using Entry = std::optional<Int>;

  ForbiddenVector(Int mex, std::vector<Entry> entries);

  Int mex() const noexcept { return mex_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Entry& entry(Int residue) const;
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// True when every entry is finite.
  bool saturated() const noexcept;

  /// True when `x` sits strictly below the threshold of its class.
  bool allows_part(Int x) const;

  std::string to_string() const;  // "(24,7,20,9,16,23)", unbounded as "inf"

  friend bool operator==(const ForbiddenVector&, const ForbiddenVector&) = default;

 private:
  Int mex_ = 0;
  std::vector<Entry> entries_;
};

/// Snapshots of one missing value being folded into the thresholds:
/// the state after the arithmetic-progression stage, after the cross-class
/// sums, and after the closure reached its fixed point. A skipped step
/// (threshold already below the value) repeats the unchanged state.
struct VectorTraceStep {
  Int mu = 0;
  bool skipped = false;
  std::vector<ForbiddenVector::Entry> after_progression;
  std::vector<ForbiddenVector::Entry> after_mixed;
  std::vector<ForbiddenVector::Entry> after_closure;
};

struct VectorTrace {
  Int mex = 0;
  std::vector<VectorTraceStep> steps;
};

/// Iterative threshold construction over the missing values, smallest
/// first. Requires a nonzero minimal excludant. The optional trace records
/// every intermediate state for reporting and tests.
ForbiddenVector build_forbidden_vector(const MissingParts& missing, VectorTrace* trace = nullptr);

bool is_saturated(const ForbiddenVector& v);

/// Threshold-based refinability check: unrefinable iff every part sits
/// strictly below its class threshold. Partitions without missing values
/// report true. Requires at least two parts.
bool check_unrefinable_fast(const DistinctPartition& p);

enum class ExtensionFiniteness { Finite, PossiblyInfinite };

/// Finite when some later missing value is coprime to the minimal
/// excludant (the thresholds then saturate and only finitely many parts
/// can ever be appended). Requires at least two missing values.
ExtensionFiniteness classify_extension_finiteness(const MissingParts& missing);

/// Missing values (other than the minimal excludant) whose insertion keeps
/// the partition unrefinable with the same largest part and excludant.
/// The input is assumed unrefinable.
std::vector<Int> extension_candidates(const DistinctPartition& p);

/// DAG of single-value insertions that preserve unrefinability, the largest
/// part, and the minimal excludant. Nodes are insertion sets; the empty set
/// is node 0 and nodes are ordered by size, then lexicographically.
struct ExtensionLattice {
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Int inserted = 0;
  };

  DistinctPartition base;
  std::vector<std::vector<Int>> nodes;
  std::vector<Edge> edges;
};

/// Breadth-first closure of extension_candidates starting from the empty
/// insertion set. Throws std::invalid_argument when the base is refinable.
ExtensionLattice extension_lattice(const DistinctPartition& base);

namespace detail {

/// Folds one missing value into the threshold entries (progression,
/// cross-class sums, closure). Shared by the builder and the enumerators so
/// both always agree. Returns false when the step was skipped.
bool apply_missing_value(Int mex, std::vector<ForbiddenVector::Entry>& entries, Int mu,
                         VectorTraceStep* step = nullptr);

}  // namespace detail

}  // namespace unref
