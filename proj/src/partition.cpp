#include "unref/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unref {

namespace {

void validate_increasing_positive(const std::vector<Int>& values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) {
      throw std::invalid_argument(std::string(what) + " must be positive");
    }
    if (i > 0 && values[i] == values[i - 1]) {
      throw std::invalid_argument(std::string("duplicate ") + what + ": " +
                                  std::to_string(values[i]));
    }
    if (i > 0 && values[i] < values[i - 1]) {
      throw std::invalid_argument(std::string(what) + " must be strictly increasing");
    }
  }
}

}  // namespace

DistinctPartition DistinctPartition::from_parts(std::vector<Int> parts) {
  if (parts.empty()) {
    throw std::invalid_argument("a partition needs at least one part");
  }
  validate_increasing_positive(parts, "parts");
  return DistinctPartition(std::move(parts));
}

Int DistinctPartition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

bool DistinctPartition::contains(Int x) const noexcept {
  return std::binary_search(parts_.begin(), parts_.end(), x);
}

DistinctPartition DistinctPartition::with_part(Int x) const {
  if (x <= 0) {
    throw std::invalid_argument("parts must be positive");
  }
  auto copy = parts_;
  auto it = std::lower_bound(copy.begin(), copy.end(), x);
  if (it != copy.end() && *it == x) {
    throw std::invalid_argument("duplicate part: " + std::to_string(x));
  }
  copy.insert(it, x);
  return DistinctPartition(std::move(copy));
}

std::string DistinctPartition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

MissingParts MissingParts::from_values(std::vector<Int> values) {
  validate_increasing_positive(values, "missing values");
  return MissingParts{std::move(values)};
}

bool MissingParts::contains(Int x) const noexcept {
  return std::binary_search(values.begin(), values.end(), x);
}

MissingParts missing_parts(const DistinctPartition& p) {
  MissingParts out;
  const auto& parts = p.parts();
  std::size_t next = 0;
  for (Int v = 1; v <= p.largest(); ++v) {
    if (next < parts.size() && parts[next] == v) {
      ++next;
    } else {
      out.values.push_back(v);
    }
  }
  return out;
}

Int triangular(Int n) {
  if (n < 0) throw std::invalid_argument("triangular numbers need n >= 0");
  return n * (n + 1) / 2;
}

Int CanonicalFamily::weight() const {
  return kind == Kind::Complete ? triangular(n) : triangular(n) - d;
}

DistinctPartition CanonicalFamily::realize() const {
  if (kind == Kind::NearComplete && (n < 3 || d < 1 || d > n - 1)) {
    throw std::invalid_argument("near-complete staircase needs n >= 3 and 1 <= d <= n-1");
  }
  std::vector<Int> parts;
  parts.reserve(static_cast<std::size_t>(n));
  for (Int v = 1; v <= n; ++v) {
    if (kind == Kind::NearComplete && v == d) continue;
    parts.push_back(v);
  }
  return DistinctPartition::from_parts(std::move(parts));
}

CanonicalFamily canonical_family_for(Int N) {
  if (N <= 2) {
    throw std::invalid_argument("weight must exceed 2");
  }
  Int n = 1;
  while (triangular(n) < N) ++n;
  if (triangular(n) == N) {
    return CanonicalFamily{CanonicalFamily::Kind::Complete, n, 0};
  }
  return CanonicalFamily{CanonicalFamily::Kind::NearComplete, n, triangular(n) - N};
}

DistinctPartition canonical_unrefinable(Int N) { return canonical_family_for(N).realize(); }

bool missing_bound_holds(const DistinctPartition& p) {
  return static_cast<Int>(missing_parts(p).count()) <= p.largest() / 2;
}

}  // namespace unref
