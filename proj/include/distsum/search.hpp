#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "distsum/sequence.hpp"

// Exhaustive backtracking search over all distinct-sum sequences of a given
// length. This module is deliberately independent of the constructors: it
// never consults the closed forms, so agreement between the two is evidence,
// not circularity.
//
// Variables are filled in position order 1..m. Placing positions 1 and 2
// fixes x; placing position 4 (position 3 when m = 3) fixes y. From there,
// every even position p >= 6 is forced by the window anchored at p-1, and
// for odd m the final position is forced by the two-term end window, so the
// search only branches on a handful of free slots. A counting-identity bound
// (the weighted total the remaining values must reach) prunes hopeless
// branches early.
//
// Enumeration order is deterministic: free positions try candidate values in
// ascending order, which makes the emission order the lexicographic order of
// the full sequences. Parallel runs partition the space by the value placed
// at position 1 and merge sub-results in that order, so they return exactly
// the serial outcome.

namespace distsum {

enum class SearchMode {
  exists,  // stop at the first kept solution; store nothing
  first,   // stop at the first kept solution; store it
  all,     // enumerate everything; store solutions (up to limit)
  count,   // enumerate everything; store nothing
};

enum class Symmetry {
  raw,              // every solution counts
  up_to_reversal,   // keep one representative per {a, reverse(a)} pair (odd m only)
};

struct SearchConfig {
  label_t m = 0;
  SearchMode mode = SearchMode::all;
  Symmetry symmetry = Symmetry::raw;
  // Caps how many solutions are *stored* in `all` mode; counting is unaffected,
  // so the outcome's count and exhaustion certificate stay exact.
  std::optional<std::uint64_t> limit{};
  // Lengths above this bound return a not-exhausted outcome instead of a
  // nonexistence claim the search did not actually establish.
  label_t max_exhaustive_m = 16;
  unsigned threads = 1;
};

struct SearchOutcome {
  std::vector<DistinctSumSequence> solutions;
  std::uint64_t count = 0;
  // True only when the entire space was covered; required before trusting
  // count == 0 as nonexistence or count as an exact census.
  bool exhausted = false;
  std::uint64_t nodes_explored = 0;
};

namespace detail {

struct SubResult {
  std::vector<std::vector<label_t>> solutions;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  bool stopped_early = false;
};

// One depth-first traversal. A node is one attempted placement: each
// candidate tried at a free position and each computed forced value counts
// once, whether or not it survives its checks.
class Dfs {
 public:
  explicit Dfs(const SearchConfig& cfg)
      : m_(cfg.m),
        mode_(cfg.mode),
        symmetry_(cfg.symmetry),
        store_cap_(cfg.limit),
        a_(static_cast<std::size_t>(cfg.m) + 1, 0),
        coeff_(static_cast<std::size_t>(cfg.m) + 2, 0),
        coeff2_from_(static_cast<std::size_t>(cfg.m) + 2, 0) {
    const ClassSizes sizes = class_sizes(m_);
    nx_ = sizes.n_x;
    ny_ = sizes.n_y;
    total_ = m_ * (m_ + 1) / 2;
    for (position_t q = 1; q <= m_; ++q) coeff_[static_cast<std::size_t>(q)] = window_coefficient(q, m_);
    for (position_t q = m_; q >= 1; --q) {
      coeff2_from_[static_cast<std::size_t>(q)] =
          coeff2_from_[static_cast<std::size_t>(q) + 1] + (coeff_[static_cast<std::size_t>(q)] == 2 ? 1 : 0);
    }
  }

  // Explores the whole space.
  SubResult run() {
    place(1, 0, 0);
    return std::move(result_);
  }

  // Explores only the subtree with `first_value` at position 1 (one parallel
  // shard). The attempt at position 1 is counted here, as it would be in the
  // serial loop.
  SubResult run_shard(label_t first_value) {
    ++result_.nodes;
    put(1, first_value);
    place(2, 0, 0);
    take(1, first_value);
    return std::move(result_);
  }

 private:
  // x and y use 0 as "not yet determined"; every real window sum is >= 3.
  void place(position_t p, label_t x, label_t y) {
    if (p > m_) {
      if (x != y) record();
      return;
    }
    if (p >= 6 && p % 2 == 0) {
      // The window anchored at p-1 is complete once a[p] is set.
      const label_t t = ((p - 1) % 4 == 1) ? x : y;
      attempt_forced(p, t - a_[static_cast<std::size_t>(p) - 2] - a_[static_cast<std::size_t>(p) - 1], x, y);
      return;
    }
    if (p == m_ && m_ % 2 == 1 && m_ >= 5) {
      // Two-term end window.
      const label_t t = (m_ % 4 == 1) ? x : y;
      attempt_forced(p, t - a_[static_cast<std::size_t>(m_) - 1], x, y);
      return;
    }
    for (label_t v = 1; v <= m_ && !stop_; ++v) {
      if (used_ & (std::uint64_t{1} << v)) continue;
      ++result_.nodes;
      put(p, v);
      label_t nx = x;
      label_t ny = y;
      bool ok = true;
      if (p == 2) {
        nx = a_[1] + a_[2];
      } else if (p == 3 && m_ == 3) {
        ny = a_[2] + a_[3];
        ok = nx != ny;
      } else if (p == 4) {
        ny = a_[2] + a_[3] + a_[4];
        ok = nx != ny;
      }
      if (ok && feasible(p, nx, ny)) place(p + 1, nx, ny);
      take(p, v);
    }
  }

  void attempt_forced(position_t p, label_t v, label_t x, label_t y) {
    ++result_.nodes;
    if (v < 1 || v > m_ || (used_ & (std::uint64_t{1} << v))) return;
    put(p, v);
    if (feasible(p, x, y)) place(p + 1, x, y);
    take(p, v);
  }

  // Counting-identity bound: over a full sequence, sum of c_q * a_q equals
  // n_x * x + n_y * y. The values still unplaced contribute their plain sum
  // once, plus once more for however many coefficient-2 positions remain —
  // bounded below/above by taking the smallest/largest unused values.
  bool feasible(position_t p, label_t x, label_t y) const {
    if (y == 0) return true;
    const label_t target = nx_ * x + ny_ * y;
    const label_t base = weighted_sum_ + (total_ - placed_sum_);
    const label_t twos = coeff2_from_[static_cast<std::size_t>(p) + 1];
    label_t lo = 0;
    label_t need = twos;
    for (label_t v = 1; v <= m_ && need > 0; ++v) {
      if (!(used_ & (std::uint64_t{1} << v))) {
        lo += v;
        --need;
      }
    }
    label_t hi = 0;
    need = twos;
    for (label_t v = m_; v >= 1 && need > 0; --v) {
      if (!(used_ & (std::uint64_t{1} << v))) {
        hi += v;
        --need;
      }
    }
    return base + lo <= target && target <= base + hi;
  }

  void put(position_t p, label_t v) {
    a_[static_cast<std::size_t>(p)] = v;
    used_ |= std::uint64_t{1} << v;
    placed_sum_ += v;
    weighted_sum_ += coeff_[static_cast<std::size_t>(p)] * v;
  }

  void take(position_t p, label_t v) {
    a_[static_cast<std::size_t>(p)] = 0;
    used_ &= ~(std::uint64_t{1} << v);
    placed_sum_ -= v;
    weighted_sum_ -= coeff_[static_cast<std::size_t>(p)] * v;
  }

  // True when a_[1..m] is lexicographically <= its own reversal, i.e. it is
  // the representative of its reversal pair (palindromes represent themselves).
  bool is_reversal_representative() const {
    for (position_t i = 1; i <= m_; ++i) {
      const label_t front = a_[static_cast<std::size_t>(i)];
      const label_t back = a_[static_cast<std::size_t>(m_ - i + 1)];
      if (front != back) return front < back;
    }
    return true;
  }

  void record() {
    if (symmetry_ == Symmetry::up_to_reversal && !is_reversal_representative()) return;
    ++result_.count;
    if (mode_ == SearchMode::all || mode_ == SearchMode::first) {
      if (!store_cap_ || result_.solutions.size() < *store_cap_) {
        result_.solutions.emplace_back(a_.begin() + 1, a_.begin() + 1 + static_cast<std::ptrdiff_t>(m_));
      }
    }
    if (mode_ == SearchMode::exists || mode_ == SearchMode::first) {
      stop_ = true;
      result_.stopped_early = true;
    }
  }

  label_t m_;
  SearchMode mode_;
  Symmetry symmetry_;
  std::optional<std::uint64_t> store_cap_;
  std::vector<label_t> a_;
  std::vector<label_t> coeff_;
  std::vector<label_t> coeff2_from_;
  label_t nx_ = 0;
  label_t ny_ = 0;
  label_t total_ = 0;
  std::uint64_t used_ = 0;
  label_t placed_sum_ = 0;
  label_t weighted_sum_ = 0;
  bool stop_ = false;
  SubResult result_;
};

inline DistinctSumSequence to_sequence(std::vector<label_t> values) {
  DistinctSumSequence seq{std::move(values), std::nullopt};
  const label_t x = seq.values[0] + seq.values[1];
  const label_t y = seq.m() == 3 ? seq.values[1] + seq.values[2]
                                 : seq.values[1] + seq.values[2] + seq.values[3];
  seq.weights = WeightPair{x, y};
  return seq;
}

}  // namespace detail

// Runs the exhaustive search described by `cfg`. Lengths above
// cfg.max_exhaustive_m yield an empty, not-exhausted outcome. Identical
// configurations always produce identical outcomes, regardless of threads.
inline SearchOutcome search(const SearchConfig& cfg) {
  if (cfg.m < 3) {
    throw std::out_of_range("search: need m >= 3, got " + std::to_string(cfg.m));
  }
  if (cfg.m > 63) {
    throw std::invalid_argument("search: lengths above 63 are not supported");
  }
  if (cfg.symmetry == Symmetry::up_to_reversal && cfg.m % 2 == 0) {
    throw std::invalid_argument(
        "search: reversal identifies solutions of the same length only for odd m; got m = " +
        std::to_string(cfg.m));
  }
  SearchOutcome out;
  if (cfg.m > cfg.max_exhaustive_m) {
    out.exhausted = false;
    return out;
  }

  const unsigned threads = cfg.threads == 0 ? 1 : cfg.threads;
  const bool enumerate_fully = cfg.mode == SearchMode::all || cfg.mode == SearchMode::count;
  detail::SubResult merged;
  if (threads == 1 || !enumerate_fully) {
    detail::Dfs dfs(cfg);
    merged = dfs.run();
  } else {
    // One shard per value of a_1, merged back in ascending order: byte-for-byte
    // the serial result because full-enumeration modes never stop early.
    std::vector<detail::SubResult> shards(static_cast<std::size_t>(cfg.m));
    std::atomic<label_t> next{1};
    auto worker = [&cfg, &shards, &next] {
      for (;;) {
        const label_t v = next.fetch_add(1);
        if (v > cfg.m) break;
        detail::Dfs dfs(cfg);
        shards[static_cast<std::size_t>(v) - 1] = dfs.run_shard(v);
      }
    };
    std::vector<std::thread> pool;
    const unsigned pool_size = std::min<unsigned>(threads, static_cast<unsigned>(cfg.m));
    pool.reserve(pool_size);
    for (unsigned t = 0; t < pool_size; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& shard : shards) {
      merged.count += shard.count;
      merged.nodes += shard.nodes;
      for (auto& sol : shard.solutions) {
        if (!cfg.limit || merged.solutions.size() < *cfg.limit) {
          merged.solutions.push_back(std::move(sol));
        }
      }
    }
  }

  out.count = merged.count;
  out.nodes_explored = merged.nodes;
  out.exhausted = enumerate_fully ? true : !merged.stopped_early;
  out.solutions.reserve(merged.solutions.size());
  for (auto& sol : merged.solutions) out.solutions.push_back(detail::to_sequence(std::move(sol)));
  return out;
}

// True iff a distinct-sum sequence of length m exists, answered exhaustively.
// Lengths outside [3, max_exhaustive_m] are refused rather than guessed at.
inline bool exists(label_t m, label_t max_exhaustive_m = 16) {
  if (m < 3 || m > max_exhaustive_m) {
    throw std::out_of_range("exists: exhaustive answers cover 3 <= m <= " +
                            std::to_string(max_exhaustive_m) + ", got " + std::to_string(m));
  }
  SearchConfig cfg;
  cfg.m = m;
  cfg.mode = SearchMode::exists;
  cfg.max_exhaustive_m = max_exhaustive_m;
  const SearchOutcome out = search(cfg);
  return out.count > 0;
}

}  // namespace distsum
