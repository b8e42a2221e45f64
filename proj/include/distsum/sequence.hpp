#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Core data model for distinct-sum sequences.
//
// A distinct-sum sequence of length m is a permutation of [1,m] in which
// every window sum at positions p = 1 (mod 4) equals one constant (x) and
// every window sum at positions p = 3 (mod 4) equals another (y), with
// x != y. The window of a position is the value there plus its in-range
// neighbours: two terms at either end of the sequence, three in the
// interior. Positions are 1-indexed throughout.

namespace distsum {

using label_t = std::int64_t;
using position_t = std::int64_t;

struct WeightPair {
  label_t x = 0;  // constant over windows at positions = 1 (mod 4)
  label_t y = 0;  // constant over windows at positions = 3 (mod 4)

  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

struct DistinctSumSequence {
  std::vector<label_t> values;        // values[p-1] holds the entry at position p
  std::optional<WeightPair> weights;  // set only after successful verification

  label_t m() const { return static_cast<label_t>(values.size()); }
  label_t at(position_t p) const { return values[static_cast<std::size_t>(p) - 1]; }
};

// Positions covered by the window centred at p: {p-1, p, p+1} clipped to [1,m].
inline std::vector<position_t> window(position_t p, label_t m) {
  if (p < 1 || p > m) {
    throw std::out_of_range("window: position " + std::to_string(p) + " not in [1," +
                            std::to_string(m) + "]");
  }
  std::vector<position_t> w;
  if (p > 1) w.push_back(p - 1);
  w.push_back(p);
  if (p < m) w.push_back(p + 1);
  return w;
}

struct PositionClasses {
  std::vector<position_t> xs;  // p = 1 (mod 4)
  std::vector<position_t> ys;  // p = 3 (mod 4)
};

inline PositionClasses constrained_positions(label_t m) {
  if (m < 3) {
    throw std::invalid_argument("constrained_positions: need m >= 3, got " + std::to_string(m));
  }
  PositionClasses pc;
  for (position_t p = 1; p <= m; p += 4) pc.xs.push_back(p);
  for (position_t p = 3; p <= m; p += 4) pc.ys.push_back(p);
  return pc;
}

enum class FailureKind {
  too_short,            // fewer than 3 entries; no y-class window exists
  value_out_of_range,   // entry outside [1,m]
  duplicate_value,      // entry occurs twice
  inconsistent_x_class, // some x-class window disagrees with the first
  inconsistent_y_class, // some y-class window disagrees with the first
  equal_weights,        // both classes share one constant
};

struct VerificationFailure {
  FailureKind kind;
  label_t value = 0;       // offending value or sum
  position_t position = 0; // offending position (0 when not positional)
  std::string message;
};

struct WindowSum {
  position_t position;
  label_t sum;
};

struct VerificationReport {
  bool is_permutation = false;
  std::vector<WindowSum> window_sums;  // every constrained position, ascending
  std::optional<WeightPair> weights;   // set iff the sequence is valid
  std::optional<VerificationFailure> failure;

  bool valid() const { return !failure.has_value(); }
};

namespace detail {

inline label_t sum_window(const std::vector<label_t>& values, position_t p) {
  const auto m = static_cast<position_t>(values.size());
  label_t s = values[static_cast<std::size_t>(p) - 1];
  if (p > 1) s += values[static_cast<std::size_t>(p) - 2];
  if (p < m) s += values[static_cast<std::size_t>(p)];
  return s;
}

}  // namespace detail

// Decides whether `values` is a valid distinct-sum sequence and extracts its
// weight pair. Pure and total over nonempty input; every failure is encoded
// in the report, checked in a fixed order: length, range, duplicates,
// x-class consistency, y-class consistency, x != y.
inline VerificationReport verify(const std::vector<label_t>& values) {
  if (values.empty()) throw std::invalid_argument("verify: empty sequence");
  const auto m = static_cast<label_t>(values.size());
  VerificationReport report;

  auto fail = [&](FailureKind kind, label_t value, position_t pos, std::string msg) {
    report.failure = VerificationFailure{kind, value, pos, std::move(msg)};
    return report;
  };

  if (m < 3) {
    report.is_permutation = false;
    return fail(FailureKind::too_short, m, 0,
                "sequence has " + std::to_string(m) + " entries; at least 3 are required");
  }

  for (position_t p = 1; p <= m; ++p) {
    const label_t v = values[static_cast<std::size_t>(p) - 1];
    if (v < 1 || v > m) {
      return fail(FailureKind::value_out_of_range, v, p,
                  "value " + std::to_string(v) + " at position " + std::to_string(p) +
                      " is outside [1," + std::to_string(m) + "]");
    }
  }

  std::vector<position_t> first_seen(static_cast<std::size_t>(m) + 1, 0);
  for (position_t p = 1; p <= m; ++p) {
    const label_t v = values[static_cast<std::size_t>(p) - 1];
    if (first_seen[static_cast<std::size_t>(v)] != 0) {
      return fail(FailureKind::duplicate_value, v, p,
                  "duplicate value " + std::to_string(v) + " (positions " +
                      std::to_string(first_seen[static_cast<std::size_t>(v)]) + " and " +
                      std::to_string(p) + ")");
    }
    first_seen[static_cast<std::size_t>(v)] = p;
  }

  // In-range and duplicate-free implies a permutation of [1,m].
  report.is_permutation = true;

  const PositionClasses pc = constrained_positions(m);
  for (position_t p = 1; p <= m; ++p) {
    if (p % 4 == 1 || p % 4 == 3) {
      report.window_sums.push_back({p, detail::sum_window(values, p)});
    }
  }

  const label_t x = detail::sum_window(values, pc.xs.front());
  for (position_t p : pc.xs) {
    const label_t s = detail::sum_window(values, p);
    if (s != x) {
      fail(FailureKind::inconsistent_x_class, s, p,
           "window sum at position " + std::to_string(p) + " is " + std::to_string(s) +
               ", but position 1 fixes x=" + std::to_string(x));
      return report;
    }
  }
  const label_t y = detail::sum_window(values, pc.ys.front());
  for (position_t p : pc.ys) {
    const label_t s = detail::sum_window(values, p);
    if (s != y) {
      fail(FailureKind::inconsistent_y_class, s, p,
           "window sum at position " + std::to_string(p) + " is " + std::to_string(s) +
               ", but position 3 fixes y=" + std::to_string(y));
      return report;
    }
  }
  if (x == y) {
    fail(FailureKind::equal_weights, x, 0,
         "both window classes sum to " + std::to_string(x) + "; the constants must differ");
    return report;
  }

  report.weights = WeightPair{x, y};
  return report;
}

inline VerificationReport verify(const DistinctSumSequence& seq) { return verify(seq.values); }

// Position order reversed. For odd m the result of reversing a valid
// sequence is again valid: the weight multiset is preserved, and the class
// assignment swaps exactly when m = 3 (mod 4). For even m validity is not
// preserved in general.
inline std::vector<label_t> reversed(const std::vector<label_t>& values) {
  return {values.rbegin(), values.rend()};
}

// Number of constrained windows that contain position q. Summing the window
// equations gives the counting identity n_x*x + n_y*y = sum_q c_q * a_q,
// which bounds feasible weight pairs during search.
inline label_t window_coefficient(position_t q, label_t m) {
  if (q < 1 || q > m) {
    throw std::out_of_range("window_coefficient: position out of range");
  }
  if (q % 2 == 1) return 1;     // covered only by its own (constrained) centre
  return q + 1 <= m ? 2 : 1;    // covered by both odd neighbours when in range
}

struct ClassSizes {
  label_t n_x;
  label_t n_y;
};

inline ClassSizes class_sizes(label_t m) {
  return ClassSizes{(m + 3) / 4, (m + 1) / 4};
}

}  // namespace distsum
