#include "unref/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

namespace unref {

namespace {

using Clock = std::chrono::steady_clock;
using Entry = ForbiddenVector::Entry;

int clamp_workers(int workers) { return std::clamp(workers, 1, 64); }

// ---------------------------------------------------------------------------
// Unrefinable partition search: decide 1..largest-1 in order, largest fixed
// as a part. The threshold entries are maintained incrementally; a branch
// dies as soon as any chosen part reaches its class threshold.

struct PartitionSearchState {
  std::vector<Int> parts;    // chosen parts below `largest`
  std::vector<Int> missing;  // ascending
  Int mex = 0;               // 0 until the first missing value
  std::vector<Entry> entries;
  std::vector<Int> class_max;  // largest chosen part per class, incl. `largest`
  Int sum = 0;                 // includes `largest`
};

class PartitionSearch {
 public:
  PartitionSearch(Int largest, std::optional<Int> target_weight)
      : largest_(largest), target_weight_(target_weight) {}

  void run(PartitionSearchState& st, Int k, std::vector<std::vector<Int>>& out) const {
    if (target_weight_) {
      const Int max_additional = triangular(largest_ - 1) - triangular(k - 1);
      if (st.sum > *target_weight_ || st.sum + max_additional < *target_weight_) return;
    }
    if (k == largest_) {
      if (st.parts.empty()) return;  // at least two parts overall
      if (target_weight_ && st.sum != *target_weight_) return;
      auto full = st.parts;
      full.push_back(largest_);
      out.push_back(std::move(full));
      return;
    }
    descend_part(st, k, [&](PartitionSearchState& next) { run(next, k + 1, out); });
    descend_missing(st, k, [&](PartitionSearchState& next) { run(next, k + 1, out); });
  }

  /// Runs only to depth `stop` and collects the surviving states.
  void collect(PartitionSearchState& st, Int k, Int stop,
               std::vector<PartitionSearchState>& stubs) const {
    if (k == stop) {
      stubs.push_back(st);
      return;
    }
    descend_part(st, k, [&](PartitionSearchState& next) { collect(next, k + 1, stop, stubs); });
    descend_missing(st, k, [&](PartitionSearchState& next) { collect(next, k + 1, stop, stubs); });
  }

  Int largest() const { return largest_; }

 private:
  template <typename Fn>
  void descend_part(PartitionSearchState& st, Int k, Fn&& next) const {
    if (target_weight_ && st.sum + k > *target_weight_) return;
    Int cls = -1;
    if (st.mex > 0) {
      cls = k % st.mex;
      const auto& e = st.entries[static_cast<std::size_t>(cls)];
      if (e && k >= *e) return;
    }
    st.parts.push_back(k);
    st.sum += k;
    Int saved = 0;
    if (cls >= 0) {
      saved = st.class_max[static_cast<std::size_t>(cls)];
      st.class_max[static_cast<std::size_t>(cls)] = std::max(saved, k);
    }
    next(st);
    if (cls >= 0) st.class_max[static_cast<std::size_t>(cls)] = saved;
    st.sum -= k;
    st.parts.pop_back();
  }

  template <typename Fn>
  void descend_missing(PartitionSearchState& st, Int k, Fn&& next) const {
    if (st.mex == 0) {
      PartitionSearchState fresh = st;
      fresh.mex = k;
      fresh.entries.assign(static_cast<std::size_t>(k), std::nullopt);
      fresh.class_max.assign(static_cast<std::size_t>(k), 0);
      for (Int p : fresh.parts) {
        auto& slot = fresh.class_max[static_cast<std::size_t>(p % k)];
        slot = std::max(slot, p);
      }
      auto& top = fresh.class_max[static_cast<std::size_t>(largest_ % k)];
      top = std::max(top, largest_);
      fresh.missing.push_back(k);
      next(fresh);
      return;
    }
    const auto snapshot = st.entries;
    st.missing.push_back(k);
    detail::apply_missing_value(st.mex, st.entries, k);
    bool alive = true;
    for (Int c = 0; c < st.mex; ++c) {
      const auto& e = st.entries[static_cast<std::size_t>(c)];
      if (e && st.class_max[static_cast<std::size_t>(c)] >= *e) {
        alive = false;
        break;
      }
    }
    if (alive) next(st);
    st.entries = snapshot;
    st.missing.pop_back();
  }

  Int largest_ = 0;
  std::optional<Int> target_weight_;
};

std::vector<std::vector<Int>> search_partitions(Int largest, std::optional<Int> target_weight,
                                                int workers) {
  std::vector<std::vector<Int>> out;
  if (largest < 2) return out;

  const PartitionSearch search(largest, target_weight);
  PartitionSearchState root;
  root.sum = largest;

  workers = clamp_workers(workers);
  const Int split_depth = std::min<Int>(largest - 1, 10);
  if (workers == 1 || split_depth < 2) {
    search.run(root, 1, out);
  } else {
    std::vector<PartitionSearchState> stubs;
    search.collect(root, 1, split_depth + 1, stubs);
    std::vector<std::vector<std::vector<Int>>> buckets(stubs.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= stubs.size()) break;
        PartitionSearchState st = stubs[i];
        search.run(st, split_depth + 1, buckets[i]);
      }
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(workers, static_cast<int>(stubs.size()));
    pool.reserve(static_cast<std::size_t>(std::max(n, 1)));
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (auto& bucket : buckets) {
      out.insert(out.end(), std::make_move_iterator(bucket.begin()),
                 std::make_move_iterator(bucket.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Numerical semigroup search: decide membership of 1..frobenius-1 in order;
// an integer can only be declared a gap when it is not a sum of two smaller
// members, so every leaf is additively closed by construction.

class SemigroupSearch {
 public:
  explicit SemigroupSearch(Int frobenius) : frobenius_(frobenius) {}

  struct State {
    std::vector<char> member;  // indexed 0..frobenius, decided below k
    std::vector<Int> gaps;
  };

  State root() const {
    State st;
    st.member.assign(static_cast<std::size_t>(frobenius_) + 1, 0);
    st.member[0] = 1;
    return st;
  }

  void run(State& st, Int k, std::vector<std::vector<Int>>& out) const {
    if (k == frobenius_) {
      if (!gap_allowed(st, k)) return;
      auto gaps = st.gaps;
      gaps.push_back(frobenius_);
      out.push_back(std::move(gaps));
      return;
    }
    st.member[static_cast<std::size_t>(k)] = 1;
    run(st, k + 1, out);
    st.member[static_cast<std::size_t>(k)] = 0;
    if (gap_allowed(st, k)) {
      st.gaps.push_back(k);
      run(st, k + 1, out);
      st.gaps.pop_back();
    }
  }

  void collect(State& st, Int k, Int stop, std::vector<State>& stubs) const {
    if (k == stop) {
      stubs.push_back(st);
      return;
    }
    st.member[static_cast<std::size_t>(k)] = 1;
    collect(st, k + 1, stop, stubs);
    st.member[static_cast<std::size_t>(k)] = 0;
    if (gap_allowed(st, k)) {
      st.gaps.push_back(k);
      collect(st, k + 1, stop, stubs);
      st.gaps.pop_back();
    }
  }

 private:
  bool gap_allowed(const State& st, Int k) const {
    for (Int a = 1; 2 * a <= k; ++a) {
      if (st.member[static_cast<std::size_t>(a)] && st.member[static_cast<std::size_t>(k - a)]) {
        return false;
      }
    }
    return true;
  }

  Int frobenius_ = 0;
};

std::vector<std::vector<Int>> search_semigroups(Int frobenius, int workers) {
  std::vector<std::vector<Int>> out;
  if (frobenius < 1) return out;

  const SemigroupSearch search(frobenius);
  auto root = search.root();

  workers = clamp_workers(workers);
  const Int split_depth = std::min<Int>(frobenius - 1, 10);
  if (workers == 1 || split_depth < 2) {
    search.run(root, 1, out);
  } else {
    std::vector<SemigroupSearch::State> stubs;
    search.collect(root, 1, split_depth + 1, stubs);
    std::vector<std::vector<std::vector<Int>>> buckets(stubs.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= stubs.size()) break;
        SemigroupSearch::State st = stubs[i];
        search.run(st, split_depth + 1, buckets[i]);
      }
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(workers, static_cast<int>(stubs.size()));
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (auto& bucket : buckets) {
      out.insert(out.end(), std::make_move_iterator(bucket.begin()),
                 std::make_move_iterator(bucket.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool symmetric_gapset(const std::vector<Int>& gaps) {
  const Int frobenius = gaps.back();
  if (frobenius % 2 == 0) return false;
  std::vector<char> is_gap(static_cast<std::size_t>(frobenius) + 1, 0);
  for (Int g : gaps) is_gap[static_cast<std::size_t>(g)] = 1;
  for (Int g : gaps) {
    if (is_gap[static_cast<std::size_t>(frobenius - g)]) return false;
  }
  return true;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_largest_in_cap(Int value, const EnumerationLimits& limits, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be positive");
  if (value > limits.max_part_cap) {
    throw CapExceeded(std::string(what) + " " + std::to_string(value) + " exceeds cap " +
                      std::to_string(limits.max_part_cap));
  }
}

void require_weight_in_cap(Int value, const EnumerationLimits& limits) {
  if (value < 1) throw std::invalid_argument("weight must be positive");
  if (value > limits.weight_cap) {
    throw CapExceeded("weight " + std::to_string(value) + " exceeds cap " +
                      std::to_string(limits.weight_cap));
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::LargestPart: return "largest_part";
    case Family::LargestPartWithMex: return "largest_part_with_mex";
    case Family::MaxMissing: return "max_missing";
    case Family::MaxMissingWithMex: return "max_missing_with_mex";
    case Family::Weight: return "weight";
    case Family::MaximalForWeight: return "maximal_for_weight";
    case Family::Semigroups: return "semigroups";
    case Family::SymmetricSemigroups: return "symmetric_semigroups";
  }
  return "unknown";
}

Int mex_of_parts(const std::vector<Int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] != static_cast<Int>(i) + 1) return static_cast<Int>(i) + 1;
  }
  return 0;
}

Int missing_count_of_parts(const std::vector<Int>& parts) {
  return parts.back() - static_cast<Int>(parts.size());
}

std::vector<std::vector<Int>> enumerate_unrefinable_with_largest(Int largest, int workers) {
  return search_partitions(largest, std::nullopt, workers);
}

std::vector<std::vector<Int>> enumerate_unrefinable_with_weight(Int weight, int workers) {
  std::vector<std::vector<Int>> out;
  for (Int largest = 2; largest < weight; ++largest) {
    if (triangular(largest) < weight) continue;
    auto chunk = search_partitions(largest, weight, workers);
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Int>> enumerate_semigroup_gapsets(Int frobenius, int workers) {
  return search_semigroups(frobenius, workers);
}

CountsRecord enumerate(const FamilyQuery& q) {
  const auto started = Clock::now();

  const bool with_mex = q.family == Family::LargestPartWithMex ||
                        q.family == Family::MaxMissingWithMex;
  if (with_mex && !q.mex) throw std::invalid_argument("this family needs a mex value");
  if (!with_mex && q.mex) throw std::invalid_argument("mex is only valid for the *_with_mex families");
  if (q.mex && *q.mex < 0) throw std::invalid_argument("mex must be non-negative");

  std::vector<std::vector<Int>> items;
  switch (q.family) {
    case Family::LargestPart:
    case Family::LargestPartWithMex:
    case Family::MaxMissing:
    case Family::MaxMissingWithMex: {
      require_largest_in_cap(q.value, q.limits, "largest part");
      items = enumerate_unrefinable_with_largest(q.value, q.workers);
      if (q.family == Family::MaxMissing || q.family == Family::MaxMissingWithMex) {
        std::erase_if(items, [&](const std::vector<Int>& parts) {
          return missing_count_of_parts(parts) != q.value / 2;
        });
      }
      if (with_mex) {
        std::erase_if(items, [&](const std::vector<Int>& parts) {
          return mex_of_parts(parts) != *q.mex;
        });
      }
      break;
    }
    case Family::Weight: {
      require_weight_in_cap(q.value, q.limits);
      items = enumerate_unrefinable_with_weight(q.value, q.workers);
      break;
    }
    case Family::MaximalForWeight: {
      if (q.value <= 2) throw std::invalid_argument("weight must exceed 2");
      require_weight_in_cap(q.value, q.limits);
      items = enumerate_unrefinable_with_weight(q.value, q.workers);
      Int best = 0;
      for (const auto& parts : items) best = std::max(best, parts.back());
      std::erase_if(items, [&](const std::vector<Int>& parts) { return parts.back() != best; });
      break;
    }
    case Family::Semigroups:
    case Family::SymmetricSemigroups: {
      require_largest_in_cap(q.value, q.limits, "Frobenius number");
      items = enumerate_semigroup_gapsets(q.value, q.workers);
      if (q.family == Family::SymmetricSemigroups) {
        std::erase_if(items, [](const std::vector<Int>& gaps) { return !symmetric_gapset(gaps); });
      }
      break;
    }
  }

  CountsRecord record;
  record.query = q;
  record.count = items.size();
  if (q.want_listing) record.listing = std::move(items);
  record.wall_us =
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - started).count();
  return record;
}

PrimeIdentityReport verify_prime_identity(const std::vector<Int>& primes,
                                          const EnumerationLimits& limits) {
  if (primes.empty()) throw std::invalid_argument("no primes given");
  PrimeIdentityReport report;
  report.all_equal = true;
  for (Int p : primes) {
    if (!is_prime(p)) {
      throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    if (p <= 3) {
      throw std::invalid_argument("primes must exceed 3");
    }
    require_largest_in_cap(p, limits, "prime");

    PrimeIdentityReport::Row row;
    row.prime = p;
    for (const auto& parts : enumerate_unrefinable_with_largest(p)) {
      if (missing_count_of_parts(parts) == p / 2) ++row.max_missing_partitions;
    }
    for (const auto& gaps : enumerate_semigroup_gapsets(p)) {
      if (symmetric_gapset(gaps)) ++row.symmetric_semigroups;
    }
    row.equal = row.max_missing_partitions == row.symmetric_semigroups;
    report.all_equal = report.all_equal && row.equal;
    report.rows.push_back(row);
  }
  return report;
}

MirrorReport check_mirror_properties(Int largest, const EnumerationLimits& limits) {
  require_largest_in_cap(largest, limits, "largest part");
  MirrorReport report;
  report.largest = largest;

  for (const auto& parts : enumerate_unrefinable_with_largest(largest)) {
    if (missing_count_of_parts(parts) != largest / 2) continue;
    ++report.members;

    std::vector<char> is_part(static_cast<std::size_t>(largest) + 1, 0);
    for (Int p : parts) is_part[static_cast<std::size_t>(p)] = 1;

    bool mirror_ok = true;
    for (Int x = 1; x < largest && mirror_ok; ++x) {
      if (2 * x == largest) continue;
      // x is a part exactly when largest - x is missing
      if (is_part[static_cast<std::size_t>(x)] == is_part[static_cast<std::size_t>(largest - x)]) {
        mirror_ok = false;
      }
    }
    if (!mirror_ok) report.mirror_violations.push_back(parts);

    if (largest % 2 == 0 && is_part[static_cast<std::size_t>(largest / 2)]) {
      report.half_part_violations.push_back(parts);
    }

    if (largest % 2 == 1) {
      bool exempt = false;
      for (Int x = 1; x <= largest; ++x) {
        if (!is_part[static_cast<std::size_t>(x)] && largest == 3 * x) {
          exempt = true;
          break;
        }
      }
      const bool closed = is_semigroup(
          set_from_partition(DistinctPartition::from_parts(parts)));
      if (!closed) {
        if (exempt) {
          report.triple_multiple_cases.push_back(parts);
        } else {
          report.closure_violations.push_back(parts);
        }
      }
    }
  }
  return report;
}

CountsRecord maximal_unrefinable(Int weight, bool want_listing, const EnumerationLimits& limits) {
  if (weight <= 2) throw std::invalid_argument("weight must exceed 2");
  FamilyQuery q;
  q.family = Family::MaximalForWeight;
  q.value = weight;
  q.want_listing = want_listing;
  q.limits = limits;
  return enumerate(q);
}

namespace {

bool staircase_prefix(const std::vector<Int>& parts, std::size_t length) {
  for (std::size_t i = 0; i < length; ++i) {
    if (parts[i] != static_cast<Int>(i) + 1) return false;
  }
  return true;
}

/// The three explicitly classified maximal families: (1..j, 2j) and
/// (1..j, 2j-1) for j >= 4, and (1..n-3, n+1, 2n-4) for n >= 6. None of
/// them ever has the maximal number of missing values.
bool in_excluded_staircase_families(const std::vector<Int>& parts) {
  const std::size_t t = parts.size();
  if (t >= 2 && staircase_prefix(parts, t - 1)) {
    const Int j = static_cast<Int>(t) - 1;
    const Int last = parts.back();
    if (j >= 4 && (last == 2 * j || last == 2 * j - 1)) return true;
  }
  if (t >= 5 && staircase_prefix(parts, t - 2)) {
    const Int n = static_cast<Int>(t) + 1;
    if (n >= 6 && parts[t - 2] == n + 1 && parts[t - 1] == 2 * n - 4) return true;
  }
  return false;
}

}  // namespace

MaximalSubsetReport verify_maximal_subset_proposition(Int n_max, const EnumerationLimits& limits) {
  if (n_max < 6) throw std::invalid_argument("the covered weights start at n = 6");
  if (triangular(n_max) > limits.weight_cap) {
    throw CapExceeded("T(" + std::to_string(n_max) + ") exceeds the weight cap " +
                      std::to_string(limits.weight_cap));
  }

  MaximalSubsetReport report;
  for (Int n = 6; n <= n_max; ++n) {
    const struct {
      Int weight;
      const char* kind;
    } cases[] = {
        {triangular(n), "T(n)"},
        {triangular(n) - 3, "T(n)-3"},
        {triangular(n) - 4, "T(n)-4"},
    };
    for (const auto& c : cases) {
      MaximalSubsetReport::Row row;
      row.n = n;
      row.weight = c.weight;
      row.weight_kind = c.kind;
      const auto maximal = maximal_unrefinable(c.weight, true, limits);
      row.maximal_count = maximal.count;
      for (const auto& parts : maximal.listing) {
        if (in_excluded_staircase_families(parts)) {
          ++row.excluded_count;
        } else if (missing_count_of_parts(parts) != parts.back() / 2) {
          row.violations.push_back(parts);
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace unref
