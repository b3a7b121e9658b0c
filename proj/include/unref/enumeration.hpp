#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unref/numerical_semigroup.hpp"
#include "unref/partition.hpp"
#include "unref/refinability.hpp"

namespace unref {

/// Desk-scale guard rails for the exhaustive searches.
struct EnumerationLimits {
  Int max_part_cap = 30;  // largest part / Frobenius number
  Int weight_cap = 120;
};

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family {
  LargestPart,         // unrefinable partitions with a fixed largest part
  LargestPartWithMex,  // one minimal-excludant stratum of the above
  MaxMissing,          // largest part fixed, maximal number of missing values
  MaxMissingWithMex,
  Weight,              // unrefinable partitions of a fixed weight
  MaximalForWeight,    // members of Weight attaining the largest part
  Semigroups,          // numerical semigroups with a fixed Frobenius number
  SymmetricSemigroups,
};

std::string family_name(Family f);

struct FamilyQuery {
  Family family = Family::LargestPart;
  Int value = 0;           // largest part, weight, or Frobenius number
  std::optional<Int> mex;  // required for the *WithMex families
  bool want_listing = false;
  int workers = 1;
  EnumerationLimits limits;
};

struct CountsRecord {
  FamilyQuery query;
  std::uint64_t count = 0;
  std::vector<std::vector<Int>> listing;  // parts or gap sets, lexicographic
  std::int64_t wall_us = 0;
};

/// Exact enumeration of one family. Throws CapExceeded past the limits and
/// std::invalid_argument on malformed queries.
CountsRecord enumerate(const FamilyQuery& q);

// Lower-level enumerators. Output is sorted and deterministic for any
// worker count. Partitions are emitted as ascending part lists (the
// single-part list is excluded); semigroups as ascending gap lists.
std::vector<std::vector<Int>> enumerate_unrefinable_with_largest(Int largest, int workers = 1);
std::vector<std::vector<Int>> enumerate_unrefinable_with_weight(Int weight, int workers = 1);
std::vector<std::vector<Int>> enumerate_semigroup_gapsets(Int frobenius, int workers = 1);

/// Dual count at a prime largest part: the maximal-missing partition count
/// (partition search) against the symmetric-semigroup count at the same
/// Frobenius number (gap-set search). The two routes share no search code.
struct PrimeIdentityReport {
  struct Row {
    Int prime = 0;
    std::uint64_t max_missing_partitions = 0;
    std::uint64_t symmetric_semigroups = 0;
    bool equal = false;
  };
  std::vector<Row> rows;
  bool all_equal = false;
};

/// Inputs must be primes greater than 3.
PrimeIdentityReport verify_prime_identity(const std::vector<Int>& primes,
                                          const EnumerationLimits& limits = {});

/// Structural checks over every maximal-missing partition with the given
/// largest part: parts and missing values mirror around the largest part,
/// half the largest part is never a part, and for an odd largest part that
/// is not three times a missing value the induced numerical set is closed.
struct MirrorReport {
  Int largest = 0;
  std::uint64_t members = 0;
  std::vector<std::vector<Int>> mirror_violations;
  std::vector<std::vector<Int>> half_part_violations;
  std::vector<std::vector<Int>> closure_violations;
  /// Largest part equals three times a missing value and the induced set is
  /// not closed; allowed, recorded for inspection.
  std::vector<std::vector<Int>> triple_multiple_cases;

  bool ok() const {
    return mirror_violations.empty() && half_part_violations.empty() &&
           closure_violations.empty();
  }
};

MirrorReport check_mirror_properties(Int largest, const EnumerationLimits& limits = {});

/// Unrefinable partitions of `weight` attaining the largest possible part.
/// Requires weight > 2.
CountsRecord maximal_unrefinable(Int weight, bool want_listing = true,
                                 const EnumerationLimits& limits = {});

/// For every weight of the form T(n), T(n)-3, T(n)-4 with 6 <= n <= n_max:
/// each maximal unrefinable partition outside the three explicit staircase
/// families must carry the maximal number of missing values.
struct MaximalSubsetReport {
  struct Row {
    Int n = 0;
    Int weight = 0;
    std::string weight_kind;  // "T(n)", "T(n)-3", "T(n)-4"
    std::uint64_t maximal_count = 0;
    std::uint64_t excluded_count = 0;
    std::vector<std::vector<Int>> violations;
  };
  std::vector<Row> rows;

  bool ok() const {
    for (const auto& row : rows) {
      if (!row.violations.empty()) return false;
    }
    return true;
  }
};

MaximalSubsetReport verify_maximal_subset_proposition(Int n_max,
                                                      const EnumerationLimits& limits = {});

/// Helpers shared by the family filters (exposed for tests and the CLI).
Int mex_of_parts(const std::vector<Int>& parts);
Int missing_count_of_parts(const std::vector<Int>& parts);

}  // namespace unref
