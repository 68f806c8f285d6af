#pragma once

// k-avoiding odd-even sequences.
//
// A two-sided integer sequence (a_i) is odd-even when a_i = i (mod 2) for
// every i, and k-avoiding (k even) when a_i <= k/2 for every i and no two
// distinct indices satisfy a_i + a_j + |i - j| = k.  Because every value is at
// least 1, a conflicting pair is never more than k - 2 positions apart, so the
// existence question is decidable by a finite transfer-state search: states
// are conflict-free windows of k - 2 consecutive values, and a two-sided
// k-avoiding sequence exists iff that state graph contains a directed cycle.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "deg3lab/errors.hpp"

namespace deg3lab {

namespace detail {

inline long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

inline void require_even_k(int k, int min_k = 2) {
  require(k >= min_k && k % 2 == 0,
          "k must be an even integer >= " + std::to_string(min_k) + ", got " +
              std::to_string(k));
}

}  // namespace detail

/// A finite slice a_offset, ..., a_{offset+size-1} of a two-sided odd-even
/// sequence.  Construction rejects non-positive values and parity violations.
class OddEvenWindow {
 public:
  OddEvenWindow() = default;
  OddEvenWindow(long long offset, std::vector<int> values)
      : offset_(offset), values_(std::move(values)) {
    for (std::size_t t = 0; t < values_.size(); ++t) {
      const long long pos = offset_ + static_cast<long long>(t);
      detail::require(values_[t] >= 1, "window values must be positive (index " +
                                           std::to_string(pos) + ")");
      detail::require(detail::floor_mod(values_[t], 2) == detail::floor_mod(pos, 2),
                      "window is not odd-even at index " + std::to_string(pos));
    }
  }

  long long offset() const { return offset_; }
  long long last_index() const { return offset_ + static_cast<long long>(values_.size()) - 1; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::span<const int> values() const { return values_; }

  /// Value at two-sided index i; i must lie inside the window.
  int at(long long i) const {
    detail::require(i >= offset_ && i <= last_index(),
                    "index " + std::to_string(i) + " outside window");
    return values_[static_cast<std::size_t>(i - offset_)];
  }

  int max_value() const {
    return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
  }

  friend bool operator==(const OddEvenWindow&, const OddEvenWindow&) = default;

 private:
  long long offset_ = 1;
  std::vector<int> values_;
};

/// Two indices i < j of a window with a_i + a_j + (j - i) = k.
struct Conflict {
  long long i = 0;
  long long j = 0;
  friend bool operator==(const Conflict&, const Conflict&) = default;
};

/// First conflicting pair in the window (ordered by j, then i), if any.
/// Values above k/2 are not reported here; see is_k_avoiding_window.
inline std::optional<Conflict> find_conflict(const OddEvenWindow& w, int k) {
  detail::require_even_k(k);
  const auto vals = w.values();
  const std::size_t range = static_cast<std::size_t>(k - 2);
  for (std::size_t j = 1; j < vals.size(); ++j) {
    const std::size_t lo = j > range ? j - range : 0;
    for (std::size_t i = lo; i < j; ++i) {
      if (vals[i] + vals[j] + static_cast<int>(j - i) == k) {
        return Conflict{w.offset() + static_cast<long long>(i),
                        w.offset() + static_cast<long long>(j)};
      }
    }
  }
  return std::nullopt;
}

/// Window form of the k-avoiding test: all values <= k/2 and no conflicting
/// pair inside the window.  Necessary, not sufficient, for the two-sided
/// property.
inline bool is_k_avoiding_window(const OddEvenWindow& w, int k) {
  detail::require_even_k(k);
  if (w.max_value() > k / 2) return false;
  return !find_conflict(w, k).has_value();
}

/// The line y = -x + intercept.
struct FaultLine {
  long long intercept = 0;

  bool contains(long long x, long long y) const { return y == -x + intercept; }
  friend bool operator==(const FaultLine&, const FaultLine&) = default;
};

/// Fault line of the point (c, d) for target k: the points conflicting with
/// (c, d) whose conflict is blamed on (c, d), i.e. the ones to its right.
inline FaultLine fault_line(long long c, int d, int k) {
  detail::require_even_k(k);
  detail::require(d >= 1 && d <= k / 2, "fault_line: need 1 <= d <= k/2");
  return FaultLine{static_cast<long long>(k) + c - d};
}

/// Evaluates "no point (i, a_i) lies on the fault line of another point
/// (j, a_j)" and checks it against is_k_avoiding_window.  The two are
/// equivalent for windows with values <= k/2; a disagreement throws
/// std::logic_error.
inline bool fault_line_equivalence(const OddEvenWindow& w, int k) {
  detail::require_even_k(k);
  detail::require(w.max_value() <= k / 2, "fault_line_equivalence: values must be <= k/2");
  bool on_fault_line = false;
  for (long long j = w.offset(); j <= w.last_index() && !on_fault_line; ++j) {
    const FaultLine line = fault_line(j, w.at(j), k);
    for (long long i = w.offset(); i <= w.last_index(); ++i) {
      if (i != j && line.contains(i, w.at(i))) {
        on_fault_line = true;
        break;
      }
    }
  }
  const bool avoiding = is_k_avoiding_window(w, k);
  if (avoiding == on_fault_line) {
    throw std::logic_error("fault-line predicate disagrees with the pair-sum predicate");
  }
  return avoiding;
}

/// One period of the 20-avoiding sequence, a_1 through a_24.
inline constexpr std::array<int, 24> kTwentyAvoidingPeriod = {
    1, 2, 1, 4, 3, 2, 7, 6, 5, 6, 7, 2, 3, 4, 1, 2, 1, 8, 9, 6, 5, 6, 9, 8};

/// a_i of the period-24 20-avoiding sequence, for any integer i (a_1 = 1).
inline int twenty_avoiding_term(long long i) {
  return kTwentyAvoidingPeriod[static_cast<std::size_t>(detail::floor_mod(i - 1, 24))];
}

/// a_first, ..., a_{first+count-1} of the period-24 sequence.
inline OddEvenWindow twenty_avoiding_window(long long first, std::size_t count) {
  std::vector<int> vals(count);
  for (std::size_t t = 0; t < count; ++t) {
    vals[t] = twenty_avoiding_term(first + static_cast<long long>(t));
  }
  return OddEvenWindow(first, std::move(vals));
}

/// Shifts a verified k-avoiding window to a (k + 2*shift)-avoiding one:
/// b_i = a_{i+shift} + shift.  The result covers indices offset-shift onward.
inline OddEvenWindow step_up(const OddEvenWindow& w, int k, int shift) {
  detail::require(shift >= 0, "step_up: shift must be non-negative");
  detail::require(is_k_avoiding_window(w, k), "step_up: input window is not k-avoiding");
  std::vector<int> vals(w.values().begin(), w.values().end());
  for (int& v : vals) v += shift;
  return OddEvenWindow(w.offset() - shift, std::move(vals));
}

/// Whether the periodic extension of `period` is k-avoiding.  The first value
/// sits at an index of its own parity; the period length must be even so the
/// odd-even pattern survives the seam.  Checking 2*period + k consecutive
/// terms covers every pair, since conflicts span at most k - 2 positions.
inline bool is_k_avoiding_periodic(std::span<const int> period, int k) {
  detail::require_even_k(k);
  detail::require(!period.empty() && period.size() % 2 == 0,
                  "periodic witness must have positive even length");
  for (std::size_t t = 0; t < period.size(); ++t) {
    detail::require(period[t] >= 1, "periodic witness values must be positive");
    detail::require(detail::floor_mod(period[t] - period[0], 2) == static_cast<long long>(t % 2),
                    "periodic witness is not parity-consistent at position " +
                        std::to_string(t));
  }
  const std::size_t len = 2 * period.size() + static_cast<std::size_t>(k);
  std::vector<int> vals(len);
  for (std::size_t t = 0; t < len; ++t) vals[t] = period[t % period.size()];
  const long long offset = period[0] % 2 == 1 ? 1 : 2;
  return is_k_avoiding_window(OddEvenWindow(offset, std::move(vals)), k);
}

enum class Verdict { Exists, NotExists, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Exists: return "Exists";
    case Verdict::NotExists: return "NotExists";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t states_explored = 0;  // distinct full windows entered
  std::uint64_t prefix_nodes = 0;     // partial windows (shorter than k-2)
  std::uint64_t extensions = 0;       // candidate values tested
  std::uint64_t budget = 0;
  bool budget_exhausted = false;
};

struct SearchOutcome {
  int k = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<int> witness_period;  // non-empty iff verdict == Exists
  SearchStats stats;
};

inline constexpr int kMaxSearchK = 30;
inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000ULL;

namespace detail {

// Up to 28 values of at most 15, four bits each.
struct PackedWindow {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const PackedWindow&, const PackedWindow&) = default;
};

struct PackedWindowHash {
  std::size_t operator()(const PackedWindow& p) const noexcept {
    std::uint64_t h = p.lo * 0x9E3779B97F4A7C15ULL;
    h ^= (p.hi + 0x7F4A7C159E3779B9ULL) * 0xC2B2AE3D27D4EB4FULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

inline PackedWindow pack_tail(const std::vector<int>& seq, std::size_t width) {
  PackedWindow p;
  const std::size_t start = seq.size() - width;
  for (std::size_t t = 0; t < width; ++t) {
    const auto v = static_cast<std::uint64_t>(seq[start + t]);
    if (t < 16) {
      p.lo |= v << (4 * t);
    } else {
      p.hi |= v << (4 * (t - 16));
    }
  }
  return p;
}

}  // namespace detail

/// Decides whether a two-sided k-avoiding odd-even sequence exists.
///
/// Depth-first search over the transfer graph, extending one value at a time
/// (candidates ascending).  Windows that are fully explored without closing a
/// cycle are memoized as dead.  A back edge to a window still on the stack
/// yields a periodic witness, which is re-verified before Exists is reported.
/// `budget` caps the number of search nodes (full windows plus prefixes).
inline SearchOutcome search_k_avoiding(int k, std::uint64_t budget = kDefaultSearchBudget) {
  detail::require_even_k(k, 4);
  detail::require(k <= kMaxSearchK,
                  "search_k_avoiding supports k <= " + std::to_string(kMaxSearchK));

  const std::size_t width = static_cast<std::size_t>(k - 2);
  const int cap = k / 2;

  SearchOutcome out;
  out.k = k;
  out.stats.budget = budget;

  // >= 0: on the stack, value is the sequence length when entered; -1: dead.
  constexpr std::int32_t kDead = -1;
  std::unordered_map<detail::PackedWindow, std::int32_t, detail::PackedWindowHash> seen;

  std::vector<int> seq;           // seq[t] sits at index t + 1
  std::vector<int> next_value{};  // next candidate per stack frame
  next_value.push_back(1);

  auto compatible = [&](int v) {
    const std::size_t len = seq.size();
    const std::size_t reach = std::min(len, width);
    for (std::size_t d = 1; d <= reach; ++d) {
      if (seq[len - d] + v + static_cast<int>(d) == k) return false;
    }
    return true;
  };

  while (!next_value.empty()) {
    int& cand = next_value.back();
    int chosen = 0;
    while (cand <= cap) {
      const int v = cand;
      cand += 2;
      ++out.stats.extensions;
      if (compatible(v)) {
        chosen = v;
        break;
      }
    }

    if (chosen == 0) {
      if (seq.size() >= width) seen[detail::pack_tail(seq, width)] = kDead;
      next_value.pop_back();
      if (!seq.empty()) seq.pop_back();
      continue;
    }

    seq.push_back(chosen);
    const int first_candidate = (seq.size() + 1) % 2 == 1 ? 1 : 2;

    if (seq.size() < width) {
      ++out.stats.prefix_nodes;
    } else {
      const auto key = detail::pack_tail(seq, width);
      auto [it, inserted] = seen.try_emplace(key, static_cast<std::int32_t>(seq.size()));
      if (!inserted) {
        if (it->second == kDead) {
          seq.pop_back();
          continue;
        }
        out.witness_period.assign(seq.begin() + it->second, seq.end());
        if (!is_k_avoiding_periodic(out.witness_period, k)) {
          throw std::logic_error("search_k_avoiding produced an invalid witness");
        }
        out.verdict = Verdict::Exists;
        return out;
      }
      ++out.stats.states_explored;
    }

    if (out.stats.states_explored + out.stats.prefix_nodes > budget) {
      out.stats.budget_exhausted = true;
      out.verdict = Verdict::Inconclusive;
      return out;
    }
    next_value.push_back(first_candidate);
  }

  out.verdict = Verdict::NotExists;
  return out;
}

}  // namespace deg3lab
