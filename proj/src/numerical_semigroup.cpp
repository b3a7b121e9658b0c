#include "unref/numerical_semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unref {

NumericalSet NumericalSet::from_gaps(std::vector<Int> gaps) {
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] <= 0) throw std::invalid_argument("gaps must be positive (0 is always a member)");
    if (i > 0 && gaps[i] == gaps[i - 1]) {
      throw std::invalid_argument("duplicate gap: " + std::to_string(gaps[i]));
    }
    if (i > 0 && gaps[i] < gaps[i - 1]) {
      throw std::invalid_argument("gaps must be strictly increasing");
    }
  }
  return NumericalSet(std::move(gaps));
}

bool NumericalSet::contains(Int x) const noexcept {
  if (x < 0) return false;
  return !std::binary_search(gaps_.begin(), gaps_.end(), x);
}

Int NumericalSet::frobenius() const {
  if (gaps_.empty()) throw std::invalid_argument("no gaps: Frobenius number undefined");
  return gaps_.back();
}

Int NumericalSet::genus() const noexcept { return static_cast<Int>(gaps_.size()); }

Int NumericalSet::multiplicity() const noexcept {
  Int candidate = 1;
  for (Int g : gaps_) {
    if (g == candidate) {
      ++candidate;
    } else if (g > candidate) {
      break;
    }
  }
  return candidate;
}

std::vector<Int> NumericalSet::members_up_to(Int bound) const {
  std::vector<Int> out;
  for (Int x = 0; x <= bound; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::string NumericalSet::to_string() const {
  std::ostringstream os;
  os << '{';
  const Int stop = gaps_.empty() ? 0 : gaps_.back() + 1;
  bool first = true;
  for (Int x = 0; x <= stop; ++x) {
    if (!contains(x)) continue;
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ",->}";
  return os.str();
}

bool is_semigroup(const NumericalSet& s) {
  for (Int g : s.gaps()) {
    for (Int a = 1; 2 * a <= g; ++a) {
      if (s.contains(a) && s.contains(g - a)) return false;
    }
  }
  return true;
}

NumericalSemigroup NumericalSemigroup::from_set(NumericalSet s) {
  if (!is_semigroup(s)) {
    throw std::invalid_argument("numerical set is not additively closed");
  }
  return NumericalSemigroup(std::move(s));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<Int> gaps) {
  return from_set(NumericalSet::from_gaps(std::move(gaps)));
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<Int>& generators) {
  if (generators.empty()) throw std::invalid_argument("generator set must be nonempty");
  Int g = 0;
  for (Int a : generators) {
    if (a <= 0) throw std::invalid_argument("generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) {
    throw std::invalid_argument("not cofinite: gcd of the generators is " + std::to_string(g));
  }

  const Int m = *std::min_element(generators.begin(), generators.end());
  // Sieve reachable sums until a full run of `m` consecutive members shows
  // up; from there on everything is a member.
  Int bound = 256;
  constexpr Int kBoundCap = Int{1} << 24;
  for (;; bound *= 2) {
    if (bound > kBoundCap) {
      throw std::invalid_argument("generators too large for closure computation");
    }
    std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
    member[0] = 1;
    for (Int x = 1; x <= bound; ++x) {
      for (Int a : generators) {
        if (x >= a && member[static_cast<std::size_t>(x - a)]) {
          member[static_cast<std::size_t>(x)] = 1;
          break;
        }
      }
    }
    Int run = 0;
    for (Int x = 1; x <= bound; ++x) {
      run = member[static_cast<std::size_t>(x)] ? run + 1 : 0;
      if (run == m) {
        std::vector<Int> gaps;
        for (Int y = 1; y <= x; ++y) {
          if (!member[static_cast<std::size_t>(y)]) gaps.push_back(y);
        }
        return NumericalSemigroup(NumericalSet::from_gaps(std::move(gaps)));
      }
    }
  }
}

std::vector<Int> apery_set(const NumericalSemigroup& s, Int n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Int r = 0; r < n; ++r) {
    Int x = r;
    while (!s.contains(x)) x += n;
    out.push_back(x);
  }
  return out;
}

std::vector<Int> minimal_generators(const NumericalSemigroup& s) {
  if (!s.set().has_gaps()) return {1};
  const Int frobenius = s.frobenius();
  const Int m = s.multiplicity();
  std::vector<Int> out;
  // Members past frobenius + multiplicity always split off a multiplicity.
  for (Int x = 1; x <= frobenius + m; ++x) {
    if (!s.contains(x)) continue;
    bool splits = false;
    for (Int a = m; 2 * a <= x; ++a) {
      if (s.contains(a) && s.contains(x - a)) {
        splits = true;
        break;
      }
    }
    if (!splits) out.push_back(x);
  }
  return out;
}

bool is_symmetric(const NumericalSemigroup& s) {
  const Int frobenius = s.frobenius();
  if (frobenius % 2 == 0) return false;
  for (Int g : s.gaps()) {
    if (!s.contains(frobenius - g)) return false;
  }
  return true;
}

bool is_pseudo_symmetric(const NumericalSemigroup& s) {
  const Int frobenius = s.frobenius();
  if (frobenius % 2 != 0) return false;
  for (Int g : s.gaps()) {
    if (2 * g == frobenius) continue;
    if (!s.contains(frobenius - g)) return false;
  }
  return true;
}

NumericalSet set_from_partition(const DistinctPartition& p) {
  return NumericalSet::from_gaps(p.parts());
}

DistinctPartition gap_partition(const NumericalSet& s) {
  if (!s.has_gaps()) throw std::invalid_argument("no gaps: nothing to read as a partition");
  return DistinctPartition::from_parts(s.gaps());
}

AperyForbiddenReport apery_vs_forbidden(const NumericalSemigroup& s) {
  const Int m = s.multiplicity();
  if (m < 2) throw std::invalid_argument("comparison needs multiplicity >= 2");
  const auto partition = gap_partition(s.set());
  const auto missing = missing_parts(partition);
  if (missing.mex() == 0) {
    throw std::invalid_argument("gap partition has no missing value; thresholds undefined");
  }
  // The smallest missing value of the gap partition is the multiplicity.

  AperyForbiddenReport report{m, apery_set(s, m), build_forbidden_vector(missing), {}, true, false};
  report.agrees.resize(static_cast<std::size_t>(m), false);
  for (Int r = 0; r < m; ++r) {
    const auto& e = report.thresholds.entry(r);
    report.agrees[static_cast<std::size_t>(r)] =
        e.has_value() && *e == report.apery[static_cast<std::size_t>(r)];
    if (r > 0 && !report.agrees[static_cast<std::size_t>(r)]) report.agrees_off_zero = false;
  }
  const auto& zero = report.thresholds.entry(0);
  report.zero_is_double_multiplicity = zero.has_value() && *zero == 2 * m;
  return report;
}

}  // namespace unref
