#include "unref/refinability.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unref {

namespace {

using Entry = ForbiddenVector::Entry;

void take_min(std::vector<Entry>& entries, Int cls, Int value) {
  auto& slot = entries[static_cast<std::size_t>(cls)];
  if (!slot || *slot > value) slot = value;
}

/// One sweep of cross-class sums; returns true when any entry decreased.
bool closure_pass(Int mex, std::vector<Entry>& entries) {
  bool changed = false;
  for (Int s = 0; s < mex; ++s) {
    if (!entries[static_cast<std::size_t>(s)]) continue;
    for (Int j = s + 1; j < mex; ++j) {
      if (!entries[static_cast<std::size_t>(j)]) continue;
      const Int sum = *entries[static_cast<std::size_t>(s)] + *entries[static_cast<std::size_t>(j)];
      auto& slot = entries[static_cast<std::size_t>(sum % mex)];
      if (!slot || *slot > sum) {
        slot = sum;
        changed = true;
      }
    }
  }
  return changed;
}

/// Lexicographically-first subset of `values` (>= min_count elements)
/// summing to `target`. Fallback path for witness reconstruction.
bool subset_sum_search(const std::vector<Int>& values, std::size_t idx, Int target,
                       std::size_t min_count, std::vector<Int>& acc) {
  if (target == 0) return acc.size() >= min_count;
  if (idx == values.size() || target < 0) return false;
  if (values[idx] <= target) {
    acc.push_back(values[idx]);
    if (subset_sum_search(values, idx + 1, target - values[idx], min_count, acc)) return true;
    acc.pop_back();
  }
  return subset_sum_search(values, idx + 1, target, min_count, acc);
}

}  // namespace

namespace detail {

bool apply_missing_value(Int mex, std::vector<Entry>& entries, Int mu, VectorTraceStep* step) {
  const Int cls = mu % mex;
  {
    const auto& slot = entries[static_cast<std::size_t>(cls)];
    if (slot && *slot < mu) {
      if (step) {
        step->skipped = true;
        step->after_progression = step->after_mixed = step->after_closure = entries;
      }
      return false;
    }
  }
  entries[static_cast<std::size_t>(cls)] = mu;

  // Progression mex + k*mu covers the residue classes of the subgroup
  // generated by mu; k ranges up to mex/gcd before the classes repeat.
  const Int span = mex / std::gcd(mex, mu);
  for (Int k = 1; k <= span; ++k) {
    const Int term = mex + k * mu;
    take_min(entries, term % mex, term);
  }
  if (step) step->after_progression = entries;

  // Cross-class sums entry + mu, against a snapshot of the entries.
  {
    const std::vector<Entry> snapshot = entries;
    for (Int j = 0; j < mex; ++j) {
      if (j == cls || !snapshot[static_cast<std::size_t>(j)]) continue;
      const Int sum = *snapshot[static_cast<std::size_t>(j)] + mu;
      take_min(entries, sum % mex, sum);
    }
  }
  if (step) step->after_mixed = entries;

  // Closure: keep combining finite entries from distinct classes until no
  // entry decreases. Terminates since entries are positive and only shrink.
  while (closure_pass(mex, entries)) {
  }
  if (step) step->after_closure = entries;
  return true;
}

}  // namespace detail

ForbiddenVector::ForbiddenVector(Int mex, std::vector<Entry> entries)
    : mex_(mex), entries_(std::move(entries)) {
  if (mex_ < 1) throw std::invalid_argument("threshold vector needs a positive modulus");
  if (entries_.size() != static_cast<std::size_t>(mex_)) {
    throw std::invalid_argument("threshold vector needs one entry per residue class");
  }
  for (Int r = 0; r < mex_; ++r) {
    const auto& e = entries_[static_cast<std::size_t>(r)];
    if (e && (*e <= 0 || *e % mex_ != r)) {
      throw std::invalid_argument("entry not congruent to its residue class");
    }
  }
}

const ForbiddenVector::Entry& ForbiddenVector::entry(Int residue) const {
  if (residue < 0 || residue >= mex_) throw std::out_of_range("residue class out of range");
  return entries_[static_cast<std::size_t>(residue)];
}

bool ForbiddenVector::saturated() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.has_value(); });
}

bool ForbiddenVector::allows_part(Int x) const {
  if (x <= 0) throw std::invalid_argument("parts must be positive");
  const auto& e = entries_[static_cast<std::size_t>(x % mex_)];
  return !e || x < *e;
}

std::string ForbiddenVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) os << ',';
    if (entries_[i]) {
      os << *entries_[i];
    } else {
      os << "inf";
    }
  }
  os << ')';
  return os.str();
}

ForbiddenVector build_forbidden_vector(const MissingParts& missing, VectorTrace* trace) {
  const Int mex = missing.mex();
  if (mex < 1) {
    throw std::invalid_argument("threshold vector undefined without a missing value");
  }
  std::vector<Entry> entries(static_cast<std::size_t>(mex));
  if (trace) {
    trace->mex = mex;
    trace->steps.clear();
  }
  for (std::size_t i = 1; i < missing.values.size(); ++i) {
    VectorTraceStep* step = nullptr;
    if (trace) {
      trace->steps.emplace_back();
      step = &trace->steps.back();
      step->mu = missing.values[i];
    }
    detail::apply_missing_value(mex, entries, missing.values[i], step);
  }
  return ForbiddenVector(mex, std::move(entries));
}

bool is_saturated(const ForbiddenVector& v) { return v.saturated(); }

std::optional<RefinementWitness> brute_force_refinement(const DistinctPartition& p) {
  if (p.size() < 2) {
    throw std::invalid_argument("refinability is defined for partitions with at least two parts");
  }
  const auto missing = missing_parts(p);
  const Int top = p.largest();

  // reach1[s]: s is a sum of a nonempty subset of missing values;
  // reach2[s]: s is a sum of at least two distinct missing values.
  std::vector<char> reach1(static_cast<std::size_t>(top) + 1, 0);
  std::vector<char> reach2(static_cast<std::size_t>(top) + 1, 0);
  for (Int mu : missing.values) {
    for (Int s = top; s >= mu; --s) {
      const Int r = s - mu;
      if (reach1[static_cast<std::size_t>(r)]) reach2[static_cast<std::size_t>(s)] = 1;
      if (r == 0 || reach1[static_cast<std::size_t>(r)]) reach1[static_cast<std::size_t>(s)] = 1;
    }
  }

  for (Int part : p.parts()) {
    if (!reach2[static_cast<std::size_t>(part)]) continue;
    for (Int a : missing.values) {
      const Int b = part - a;
      if (b <= a) break;
      if (missing.contains(b)) return RefinementWitness{part, {a, b}};
    }
    // The smallest refinable part always has a two-summand split; keep a
    // full search anyway so a violation would surface as a >2 witness.
    std::vector<Int> acc;
    if (subset_sum_search(missing.values, 0, part, 2, acc)) {
      return RefinementWitness{part, acc};
    }
    throw std::logic_error("witness reconstruction failed");
  }
  return std::nullopt;
}

bool check_unrefinable_fast(const DistinctPartition& p) {
  if (p.size() < 2) {
    throw std::invalid_argument("refinability is defined for partitions with at least two parts");
  }
  const auto missing = missing_parts(p);
  if (missing.mex() == 0) return true;
  const auto v = build_forbidden_vector(missing);
  return std::all_of(p.parts().begin(), p.parts().end(),
                     [&](Int x) { return v.allows_part(x); });
}

ExtensionFiniteness classify_extension_finiteness(const MissingParts& missing) {
  if (missing.count() < 2) {
    throw std::invalid_argument("finiteness classification needs at least two missing values");
  }
  const Int mex = missing.mex();
  for (std::size_t i = 1; i < missing.values.size(); ++i) {
    if (std::gcd(mex, missing.values[i]) == 1) return ExtensionFiniteness::Finite;
  }
  return ExtensionFiniteness::PossiblyInfinite;
}

std::vector<Int> extension_candidates(const DistinctPartition& p) {
  std::vector<Int> out;
  const auto missing = missing_parts(p);
  if (missing.mex() == 0) return out;
  for (Int x : missing.values) {
    if (x == missing.mex()) continue;  // would change the excludant
    if (check_unrefinable_fast(p.with_part(x))) out.push_back(x);
  }
  return out;
}

ExtensionLattice extension_lattice(const DistinctPartition& base) {
  if (!check_unrefinable_fast(base)) {
    throw std::invalid_argument("base partition is refinable");
  }

  std::map<std::vector<Int>, std::size_t> index;
  std::vector<std::vector<Int>> nodes{{}};
  index.emplace(std::vector<Int>{}, 0);
  std::vector<ExtensionLattice::Edge> edges;

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();

    DistinctPartition current = base;
    for (Int x : nodes[cur]) current = current.with_part(x);

    for (Int x : extension_candidates(current)) {
      auto node = nodes[cur];
      node.insert(std::lower_bound(node.begin(), node.end(), x), x);
      auto [it, fresh] = index.try_emplace(std::move(node), nodes.size());
      if (fresh) {
        nodes.push_back(it->first);
        queue.push_back(it->second);
      }
      edges.push_back({cur, it->second, x});
    }
  }

  // Canonical order: by insertion-set size, then lexicographically.
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (nodes[a].size() != nodes[b].size()) return nodes[a].size() < nodes[b].size();
    return nodes[a] < nodes[b];
  });
  std::vector<std::size_t> rank(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  ExtensionLattice lattice{base, {}, {}};
  lattice.nodes.reserve(nodes.size());
  for (std::size_t i : order) lattice.nodes.push_back(std::move(nodes[i]));
  lattice.edges.reserve(edges.size());
  for (const auto& e : edges) lattice.edges.push_back({rank[e.from], rank[e.to], e.inserted});
  std::sort(lattice.edges.begin(), lattice.edges.end(),
            [](const ExtensionLattice::Edge& a, const ExtensionLattice::Edge& b) {
              return std::tie(a.from, a.to) < std::tie(b.from, b.to);
            });
  return lattice;
}

}  // namespace unref
