#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "deg3lab/sequences.hpp"

using namespace deg3lab;

namespace {

std::vector<int> fixed_period() { return {kTwentyAvoidingPeriod.begin(), kTwentyAvoidingPeriod.end()}; }

// All odd-even windows with the given offset and length and values <= cap.
template <typename Fn>
void for_each_window(long long offset, int length, int cap, Fn&& fn) {
  std::vector<int> vals(static_cast<std::size_t>(length));
  auto base = [&](int t) { return detail::floor_mod(offset + t, 2) == 1 ? 1 : 2; };
  for (int t = 0; t < length; ++t) vals[static_cast<std::size_t>(t)] = base(t);
  while (true) {
    fn(OddEvenWindow(offset, vals));
    int pos = length - 1;
    while (pos >= 0 && vals[static_cast<std::size_t>(pos)] + 2 > cap) {
      vals[static_cast<std::size_t>(pos)] = base(pos);
      --pos;
    }
    if (pos < 0) return;
    vals[static_cast<std::size_t>(pos)] += 2;
  }
}

}  // namespace

TEST(OddEvenWindow, Validation) {
  EXPECT_NO_THROW(OddEvenWindow(1, {1, 2, 3}));
  EXPECT_NO_THROW(OddEvenWindow(-3, {1, 2, 3}));
  EXPECT_THROW(OddEvenWindow(1, {2}), PreconditionError);
  EXPECT_THROW(OddEvenWindow(2, {0}), PreconditionError);
  EXPECT_THROW(OddEvenWindow(1, {-1}), PreconditionError);
  const OddEvenWindow w(5, {1, 2, 3});
  EXPECT_EQ(w.at(6), 2);
  EXPECT_EQ(w.last_index(), 7);
  EXPECT_EQ(w.max_value(), 3);
}

TEST(KAvoidingWindow, Examples) {
  EXPECT_TRUE(is_k_avoiding_window(OddEvenWindow(1, {1, 2}), 18));
  // a_1 = a_5 = 1 with |1 - 5| = 4 = k - 2.
  EXPECT_FALSE(is_k_avoiding_window(OddEvenWindow(1, {1, 2, 1, 2, 1}), 6));
  EXPECT_TRUE(is_k_avoiding_window(twenty_avoiding_window(1, 72), 20));
  EXPECT_TRUE(is_k_avoiding_window(twenty_avoiding_window(-100, 72 + 20), 20));
  EXPECT_FALSE(is_k_avoiding_window(OddEvenWindow(1, {1, 2, 5}), 8));  // 5 > k/2
  EXPECT_THROW(is_k_avoiding_window(OddEvenWindow(1, {1}), 7), PreconditionError);
}

TEST(KAvoidingWindow, ConflictReported) {
  const auto c = find_conflict(twenty_avoiding_window(1, 72), 18);
  ASSERT_TRUE(c.has_value());
  const auto w = twenty_avoiding_window(1, 72);
  EXPECT_EQ(w.at(c->i) + w.at(c->j) + std::abs(c->i - c->j), 18);
}

TEST(FaultLine, Formula) {
  EXPECT_EQ(fault_line(0, 1, 18).intercept, 17);
  EXPECT_EQ(fault_line(1, 1, 20).intercept, 20);
  EXPECT_THROW(fault_line(0, 11, 20), PreconditionError);
  EXPECT_THROW(fault_line(0, 0, 20), PreconditionError);
}

TEST(FaultLine, NoPointOfTheWitnessOnAFaultLine) {
  const auto w = twenty_avoiding_window(-24, 96);
  for (long long j = w.offset(); j <= w.last_index(); ++j) {
    const FaultLine f = fault_line(j, w.at(j), 20);
    for (long long i = w.offset(); i <= w.last_index(); ++i) {
      if (i != j) {
        EXPECT_FALSE(f.contains(i, w.at(i))) << i << " " << j;
      }
    }
  }
  EXPECT_TRUE(fault_line_equivalence(w, 20));
}

TEST(FaultLine, Equivalence) {
  EXPECT_FALSE(fault_line_equivalence(OddEvenWindow(1, {1, 2, 1}), 4));
  int windows = 0;
  for (long long offset : {1LL, 2LL}) {
    for (int length = 1; length <= 5; ++length) {
      for_each_window(offset, length, 3, [&](const OddEvenWindow& w) {
        fault_line_equivalence(w, 6);
        ++windows;
      });
    }
  }
  EXPECT_EQ(windows, 33);
}

TEST(TwentyAvoidingTerm, Values) {
  EXPECT_EQ(twenty_avoiding_term(1), 1);
  EXPECT_EQ(twenty_avoiding_term(18), 8);
  EXPECT_EQ(twenty_avoiding_term(19), 9);
  EXPECT_EQ(twenty_avoiding_term(25), 1);
  EXPECT_EQ(twenty_avoiding_term(0), 8);
  EXPECT_EQ(twenty_avoiding_term(-23), 1);
  for (long long i = -50; i <= 50; ++i) EXPECT_EQ(detail::floor_mod(twenty_avoiding_term(i), 2), detail::floor_mod(i, 2));
}

TEST(StepUp, Examples) {
  const auto w = twenty_avoiding_window(1, 72);
  EXPECT_EQ(step_up(w, 20, 0), w);
  for (int l = 1; l <= 3; ++l) {
    const auto b = step_up(w, 20, l);
    EXPECT_EQ(b.offset(), 1 - l);
    EXPECT_LE(b.max_value(), (20 + 2 * l) / 2);
    EXPECT_TRUE(is_k_avoiding_window(b, 20 + 2 * l)) << l;
  }
  EXPECT_THROW(step_up(OddEvenWindow(1, {1, 2, 1}), 4, 1), PreconditionError);
}

TEST(StepUp, PreservesAvoidanceOnRandomWindows) {
  std::mt19937 rng(53);
  int verified = 0;
  for (int attempt = 0; attempt < 200000 && verified < 50; ++attempt) {
    const int k = 2 * std::uniform_int_distribution<int>(3, 10)(rng);
    const int length = std::uniform_int_distribution<int>(2, 12)(rng);
    const long long offset = std::uniform_int_distribution<int>(-5, 5)(rng);
    std::vector<int> vals;
    for (int t = 0; t < length; ++t) {
      const bool odd = detail::floor_mod(offset + t, 2) == 1;
      const int choices = (k / 2 - (odd ? 1 : 2)) / 2 + 1;
      vals.push_back((odd ? 1 : 2) + 2 * std::uniform_int_distribution<int>(0, choices - 1)(rng));
    }
    const OddEvenWindow w(offset, vals);
    if (!is_k_avoiding_window(w, k)) continue;
    ++verified;
    for (int l = 0; l <= 3; ++l) EXPECT_TRUE(is_k_avoiding_window(step_up(w, k, l), k + 2 * l));
  }
  EXPECT_EQ(verified, 50);
}

TEST(Periodic, Examples) {
  EXPECT_TRUE(is_k_avoiding_periodic(fixed_period(), 20));
  EXPECT_FALSE(is_k_avoiding_periodic(fixed_period(), 18));
  EXPECT_FALSE(is_k_avoiding_periodic(std::vector<int>{1, 2}, 6));
  EXPECT_THROW(is_k_avoiding_periodic(std::vector<int>{1, 2, 1}, 6), PreconditionError);
  EXPECT_THROW(is_k_avoiding_periodic(std::vector<int>{1, 1}, 6), PreconditionError);
  EXPECT_THROW(is_k_avoiding_periodic(std::vector<int>{}, 6), PreconditionError);
}

TEST(Search, SmallK) {
  for (int k = 4; k <= 16; k += 2) {
    const auto r = search_k_avoiding(k);
    EXPECT_EQ(r.verdict, Verdict::NotExists) << k;
    EXPECT_FALSE(r.stats.budget_exhausted);
    EXPECT_TRUE(r.witness_period.empty());
  }
}

TEST(Search, EighteenHasNoSequence) {
  const auto r = search_k_avoiding(18);
  EXPECT_EQ(r.verdict, Verdict::NotExists);
  EXPECT_FALSE(r.stats.budget_exhausted);
  EXPECT_GT(r.stats.states_explored, 0u);
}

TEST(Search, TwentyHasSequence) {
  const auto r = search_k_avoiding(20);
  ASSERT_EQ(r.verdict, Verdict::Exists);
  EXPECT_TRUE(is_k_avoiding_periodic(r.witness_period, 20));
  EXPECT_EQ(r.witness_period.size() % 2, 0u);
}

TEST(Search, TwentyTwoHasSequence) {
  const auto r = search_k_avoiding(22);
  ASSERT_EQ(r.verdict, Verdict::Exists);
  EXPECT_TRUE(is_k_avoiding_periodic(r.witness_period, 22));
}

TEST(Search, Deterministic) {
  const auto a = search_k_avoiding(20);
  const auto b = search_k_avoiding(20);
  EXPECT_EQ(a.witness_period, b.witness_period);
  EXPECT_EQ(a.stats.states_explored, b.stats.states_explored);
  EXPECT_EQ(a.stats.prefix_nodes, b.stats.prefix_nodes);
  EXPECT_EQ(a.stats.extensions, b.stats.extensions);
}

TEST(Search, BudgetGivesInconclusive) {
  const auto r = search_k_avoiding(18, 1000);
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
  EXPECT_TRUE(r.stats.budget_exhausted);
}

TEST(Search, Preconditions) {
  EXPECT_THROW(search_k_avoiding(2), PreconditionError);
  EXPECT_THROW(search_k_avoiding(7), PreconditionError);
  EXPECT_THROW(search_k_avoiding(kMaxSearchK + 2), PreconditionError);
}
