// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "unref/enumeration.hpp"
#include "unref/numerical_semigroup.hpp"
#include "unref/partition.hpp"
#include "unref/refinability.hpp"
#include "unref/young_diagram.hpp"

namespace {

using unref::DistinctPartition;
using unref::ForbiddenVector;
using unref::Int;
using unref::MissingParts;
using unref::NumericalSet;
using Clock = std::chrono::steady_clock;

struct Failure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

template <typename T>
std::string show(const std::vector<T>& values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << ',';
    os << values[i];
  }
  os << ']';
  return os.str();
}

template <typename Fn>
void for_each_partition_with_largest(Int largest, Fn&& fn) {
  const std::uint32_t limit = 1u << (largest - 1);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::vector<Int> parts;
    for (Int v = 1; v < largest; ++v) {
      if (mask >> (v - 1) & 1u) parts.push_back(v);
    }
    parts.push_back(largest);
    fn(DistinctPartition::from_parts(std::move(parts)));
  }
}

template <typename Fn>
void for_each_gapset_with_frobenius(Int frobenius, Fn&& fn) {
  const std::uint32_t limit = 1u << (frobenius - 1);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<Int> gaps;
    for (Int v = 1; v < frobenius; ++v) {
      if (mask >> (v - 1) & 1u) gaps.push_back(v);
    }
    gaps.push_back(frobenius);
    fn(NumericalSet::from_gaps(std::move(gaps)));
  }
}

std::vector<ForbiddenVector::Entry> entries(std::vector<ForbiddenVector::Entry> e) { return e; }

double best_of(int rounds, const std::function<void()>& fn) {
  double best = 1e18;
  for (int i = 0; i < rounds; ++i) {
    const auto t0 = Clock::now();
    fn();
    const auto dt = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    best = std::min(best, dt);
  }
  return best;
}

// --------------------------------------------------------------------------

void criterion_1_threshold_worked_example() {
  unref::VectorTrace trace;
  const auto vector = unref::build_forbidden_vector(MissingParts::from_values({6, 7, 9, 13}), &trace);

  require(trace.steps.size() == 3, "expected three construction steps");
  require(trace.steps[0].mu == 7 && !trace.steps[0].skipped, "step 7 must update");
  require(trace.steps[0].after_closure == entries({48, 7, 20, 27, 34, 41}),
          "state after 7 must be (48,7,20,27,34,41)");
  require(trace.steps[1].mu == 9, "second step is 9");
  require(trace.steps[1].after_progression == entries({24, 7, 20, 9, 34, 41}),
          "progression for 9 must give (24,7,20,9,34,41)");
  require(trace.steps[1].after_mixed == entries({24, 7, 20, 9, 16, 29}),
          "cross-class sums for 9 must give (24,7,20,9,16,29)");
  require(trace.steps[1].after_closure == entries({24, 7, 20, 9, 16, 23}),
          "closure for 9 must give (24,7,20,9,16,23)");
  require(trace.steps[2].mu == 13 && trace.steps[2].skipped, "13 must trigger no update");
  require(vector == ForbiddenVector(6, {24, 7, 20, 9, 16, 23}),
          "final vector must be (24,7,20,9,16,23), got " + vector.to_string());

  const auto missing = MissingParts::from_values({6, 7, 9, 13});
  const double ms = best_of(5, [&] { (void)unref::build_forbidden_vector(missing); });
  require(ms < 1.0, "construction took " + std::to_string(ms) + " ms (allowed < 1 ms)");
}

void criterion_2_gcd_cases() {
  const auto even = unref::build_forbidden_vector(MissingParts::from_values({6, 10}));
  require(even == ForbiddenVector(6, {36, std::nullopt, 26, std::nullopt, 10, std::nullopt}),
          "mex 6 with 10 must give (36,inf,26,inf,10,inf), got " + even.to_string());
  const auto full = unref::build_forbidden_vector(MissingParts::from_values({6, 18}));
  require(full == ForbiddenVector(6, {18, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                                      std::nullopt}),
          "mex 6 with 18 must give (18,inf,inf,inf,inf,inf), got " + full.to_string());
}

void criterion_3_refinability_verdicts() {
  const auto w1 =
      unref::brute_force_refinement(DistinctPartition::from_parts({1, 2, 3, 5, 6, 8, 9, 11, 13}));
  require(w1 && w1->part == 11 && w1->summands == std::vector<Int>{4, 7},
          "(1,2,3,5,6,8,9,11,13) must be refinable with witness 11=4+7");
  const auto w2 = unref::brute_force_refinement(
      DistinctPartition::from_parts({1, 2, 3, 4, 5, 8, 10, 11, 12, 14, 15, 17, 18}));
  require(w2 && w2->part == 15 && w2->summands == std::vector<Int>{6, 9},
          "(...,15,17,18) must be refinable with witness 15=6+9");
  require(!unref::brute_force_refinement(
               DistinctPartition::from_parts({1, 2, 3, 4, 5, 8, 10, 11, 12, 14, 17}))
               .has_value(),
          "(1,2,3,4,5,8,10,11,12,14,17) must be unrefinable");
  require(!unref::brute_force_refinement(DistinctPartition::from_parts({1, 2, 3, 5, 6, 8, 9, 13}))
               .has_value(),
          "(1,2,3,5,6,8,9,13) must be unrefinable");
}

void criterion_4_semigroup_stats() {
  const auto set = NumericalSet::from_gaps({1, 2, 4, 5, 7, 10, 13});
  require(set.frobenius() == 13, "Frobenius number must be 13");
  require(set.genus() == 7, "genus must be 7");
  require(set.multiplicity() == 3, "multiplicity must be 3");
  require(unref::is_semigroup(set), "the set must be additively closed");

  const auto diagram = unref::YoungDiagram::from_set(set);
  require(diagram.rows() == std::vector<Int>{7, 5, 3, 2, 2, 1, 1},
          "profile must be (7,5,3,2,2,1,1), got " + show(diagram.rows()));
  const auto grid = unref::hook_grid(diagram);
  require(grid.first_column_path_order() == set.gaps(),
          "first-column hooks must equal the gaps");
}

void criterion_5_correspondence() {
  const auto partition = DistinctPartition::from_parts({1, 2, 3, 5, 6, 9, 13});
  const auto set = unref::set_from_partition(partition);
  require(set.to_string() == "{0,4,7,8,10,11,12,14,->}",
          "induced set must be {0,4,7,8,10,11,12,14,->}, got " + set.to_string());
  const auto semigroup = unref::NumericalSemigroup::from_set(set);
  const auto report = unref::apery_vs_forbidden(semigroup);
  require(report.apery == std::vector<Int>{0, 17, 10, 7},
          "least members mod 4 must be {0,17,10,7}, got " + show(report.apery));
  require(report.thresholds == ForbiddenVector(4, {8, 17, 10, 7}),
          "thresholds must be (8,17,10,7), got " + report.thresholds.to_string());
  require(report.agrees_off_zero, "tables must agree away from class 0");
  require(report.zero_is_double_multiplicity, "class-0 threshold must be twice the multiplicity");
}

void criterion_6_hookset_criteria() {
  const auto diagram = unref::YoungDiagram::from_set(
      unref::set_from_partition(DistinctPartition::from_parts({1, 2, 5, 6, 8})));
  require(unref::unrefinable_by_hooks(diagram),
          "(1,2,5,6,8) must pass the unrefinability hook criterion");
  require(!unref::semigroup_by_hooks(diagram),
          "(1,2,5,6,8) must fail the closure hook criterion");
}

void criterion_7_extension_lattice() {
  const auto start = Clock::now();
  const auto base = DistinctPartition::from_parts({1, 2, 4, 5, 7, 10, 13});

  const auto vector = unref::build_forbidden_vector(unref::missing_parts(base));
  require(vector.entry(0) == ForbiddenVector::Entry{6}, "class-0 threshold must be 6");
  require(vector.entry(2) == ForbiddenVector::Entry{8}, "class-2 threshold must be 8");
  // class 1 holds no value up to the largest part (every 1 mod 3 is a part),
  // so its threshold only matters beyond 13
  require(vector.entry(1).has_value() && *vector.entry(1) > 13,
          "class-1 threshold must exceed the largest part, got " + vector.to_string());

  const auto lattice = unref::extension_lattice(base);
  require(lattice.nodes.size() == 12,
          "lattice must have 12 nodes, got " + std::to_string(lattice.nodes.size()));
  require(lattice.nodes.back() == std::vector<Int>{6, 8, 9, 11, 12},
          "top node must be {6,8,9,11,12}, got " + show(lattice.nodes.back()));
  require(lattice.nodes[lattice.nodes.size() - 2].size() < 5, "the largest node must be unique");

  // independent exhaustive count of the stratum: plain masks + subset sums
  std::uint64_t stratum = 0;
  for_each_partition_with_largest(13, [&](const DistinctPartition& p) {
    if (unref::missing_parts(p).mex() != 3) return;
    if (!unref::brute_force_refinement(p).has_value()) ++stratum;
  });
  require(stratum == 12, "exhaustive stratum count must be 12, got " + std::to_string(stratum));

  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  require(seconds < 1.0, "criterion took " + std::to_string(seconds) + " s (allowed < 1 s)");
}

void criterion_8_prime_identity() {
  const auto start = Clock::now();
  const auto report = unref::verify_prime_identity({5, 7, 11, 13, 17, 19});
  for (const auto& row : report.rows) {
    require(row.equal, "counts differ at " + std::to_string(row.prime) + ": " +
                           std::to_string(row.max_missing_partitions) + " vs " +
                           std::to_string(row.symmetric_semigroups));
  }
  require(report.all_equal, "all rows must agree");
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  require(seconds < 120.0, "criterion took " + std::to_string(seconds) + " s (allowed < 2 min)");
}

void criterion_9_oracle_equivalence() {
  const auto start = Clock::now();

  std::uint64_t partitions = 0;
  for (Int largest = 2; largest <= 16; ++largest) {
    for_each_partition_with_largest(largest, [&](const DistinctPartition& p) {
      ++partitions;
      const bool fast = unref::check_unrefinable_fast(p);
      const bool oracle = !unref::brute_force_refinement(p).has_value();
      require(fast == oracle, "route disagreement at " + p.to_string());
    });
  }
  // sum over largest 2..16 of 2^(largest-1) - 1
  require(partitions == (1u << 16) - 2 - 15, "sweep must cover every partition");

  for (Int frobenius = 1; frobenius <= 14; ++frobenius) {
    for_each_gapset_with_frobenius(frobenius, [&](const NumericalSet& set) {
      const auto diagram = unref::YoungDiagram::from_set(set);
      require(unref::semigroup_by_hooks(diagram) == unref::is_semigroup(set),
              "closure criterion disagreement at gaps " + show(set.gaps()));
    });
  }

  for (Int largest = 2; largest <= 14; ++largest) {
    for_each_partition_with_largest(largest, [&](const DistinctPartition& p) {
      const auto diagram = unref::YoungDiagram::from_set(unref::set_from_partition(p));
      require(unref::unrefinable_by_hooks(diagram) ==
                  !unref::brute_force_refinement(p).has_value(),
              "hook criterion disagreement at " + p.to_string());
    });
  }

  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  require(seconds < 300.0, "criterion took " + std::to_string(seconds) + " s (allowed < 5 min)");
}

void criterion_10_structural_sweeps() {
  // missing-count bound over every unrefinable partition
  for (Int largest = 2; largest <= 16; ++largest) {
    for_each_partition_with_largest(largest, [&](const DistinctPartition& p) {
      if (unref::brute_force_refinement(p).has_value()) return;
      require(unref::missing_bound_holds(p), "missing-count bound violated at " + p.to_string());
    });
  }

  // mirror property, excluded half, closure for odd non-triple largest parts
  for (Int largest = 2; largest <= 16; ++largest) {
    const auto report = unref::check_mirror_properties(largest);
    require(report.mirror_violations.empty(),
            "mirror violation at largest part " + std::to_string(largest));
    require(report.half_part_violations.empty(),
            "half-part violation at largest part " + std::to_string(largest));
    require(report.closure_violations.empty(),
            "closure violation at largest part " + std::to_string(largest));
  }

  // every semigroup gap partition is unrefinable; strictly fewer semigroups
  for (Int k = 4; k <= 16; ++k) {
    std::uint64_t semigroups = 0;
    for (const auto& gaps : unref::enumerate_semigroup_gapsets(k)) {
      ++semigroups;
      const auto partition = DistinctPartition::from_parts(gaps);
      require(!unref::brute_force_refinement(partition).has_value(),
              "semigroup gap partition refinable: " + partition.to_string());
    }
    const std::uint64_t partitions = unref::enumerate_unrefinable_with_largest(k).size();
    require(semigroups < partitions,
            "expected strictly fewer semigroups at " + std::to_string(k) + ": " +
                std::to_string(semigroups) + " vs " + std::to_string(partitions));
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "threshold construction reproduces the worked trace", criterion_1_threshold_worked_example},
      {2, "gcd cases cover exactly the reachable classes", criterion_2_gcd_cases},
      {3, "refinability verdicts and witnesses", criterion_3_refinability_verdicts},
      {4, "semigroup statistics and diagram profile", criterion_4_semigroup_stats},
      {5, "partition/semigroup correspondence tables", criterion_5_correspondence},
      {6, "hookset criteria split closure from unrefinability", criterion_6_hookset_criteria},
      {7, "extension lattice matches the exhaustive stratum", criterion_7_extension_lattice},
      {8, "dual counts agree at prime largest parts", criterion_8_prime_identity},
      {9, "oracle equivalence sweeps", criterion_9_oracle_equivalence},
      {10, "structural sweeps", criterion_10_structural_sweeps},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto t0 = Clock::now();
    std::string error;
    try {
      criterion.run();
    } catch (const Failure& f) {
      error = f.message;
    } catch (const std::exception& e) {
      error = std::string("unexpected exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream line;
    line << (error.empty() ? "[PASS]" : "[FAIL]") << " C" << criterion.id << " " << criterion.name
         << " (" << seconds << " s)";
    if (!error.empty()) {
      line << ": " << error;
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
  } else {
    std::cout << "all criteria passed" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
