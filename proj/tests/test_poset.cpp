#include <gtest/gtest.h>

#include <algorithm>
#include <climits>
#include <set>
#include <vector>

#include "truncweyl/poset.hpp"

using namespace truncweyl;

namespace {

WeightTuple sl2_tuple(const std::vector<int>& v) {
  WeightTuple t;
  for (int x : v) t.entries.emplace_back(std::vector<int>{x});
  return t;
}

// Oracle: compositions of m into n parts, counted by stars and bars.
long stars_and_bars(int m, int n) {
  long c = 1;
  for (int i = 1; i <= n - 1; ++i) c = c * (m + i) / i;
  return c;
}

// Oracle: minimum over all k-subsets by explicit bitmask enumeration.
int brute_r(const RootSystem& rs, const WeightTuple& t, std::size_t a, int k) {
  const int n = t.size();
  int best = INT_MAX;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int s = 0;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) s += rs.pair(t.entries[j].coords(), a);
    best = std::min(best, s);
  }
  return best;
}

}  // namespace

TEST(Poset, TupleCountMatchesStarsAndBars) {
  for (int m = 0; m <= 7; ++m)
    for (int n = 1; n <= 5; ++n) {
      DominantWeight lam({m});
      EXPECT_EQ(count_tuples(lam, n), BigInt(stars_and_bars(m, n)));
      EXPECT_EQ(enumerate_tuples(lam, n).size(), static_cast<std::size_t>(stars_and_bars(m, n)));
    }
  EXPECT_EQ(count_tuples(DominantWeight({5}), 3), 21);
  // rank 2: product over coordinates
  EXPECT_EQ(count_tuples(DominantWeight({2, 3}), 3), BigInt(6 * 10));
}

TEST(Poset, EnumerationIsLexicographicAndDistinct) {
  DominantWeight lam({2, 1});
  auto ts = enumerate_tuples(lam, 3);
  std::vector<std::vector<int>> flat;
  for (const auto& t : ts) {
    EXPECT_EQ(t.sum(), lam);
    std::vector<int> f;
    for (const auto& e : t.entries) f.insert(f.end(), e.coords().begin(), e.coords().end());
    flat.push_back(f);
  }
  EXPECT_TRUE(std::is_sorted(flat.begin(), flat.end()));
  EXPECT_EQ(std::set<std::vector<int>>(flat.begin(), flat.end()).size(), flat.size());
  EXPECT_EQ(enumerate_tuples(lam, 3), ts);
}

TEST(Poset, BoundExceededThrows) {
  EXPECT_THROW(enumerate_tuples(DominantWeight({30}), 6, 1000), EnumerationBoundExceeded);
  EXPECT_THROW(count_tuples(DominantWeight({3}), 0), InvalidArgument);
  RootSystem rs = build_root_system('A', 1);
  EXPECT_THROW(maximal_elements(rs, DominantWeight({40}), 8, 500), EnumerationBoundExceeded);
}

TEST(Poset, RAlphaKExamples) {
  RootSystem rs = build_root_system('A', 1);
  EXPECT_EQ(r_alpha_k(rs, sl2_tuple({2, 2, 1}), 0, 2), 3);
  EXPECT_EQ(r_alpha_k(rs, sl2_tuple({5, 0, 0}), 0, 1), 0);
  EXPECT_EQ(r_alpha_k(rs, sl2_tuple({5, 0, 0}), 0, 3), 5);
  EXPECT_THROW(r_alpha_k(rs, sl2_tuple({1, 1}), 0, 0), InvalidArgument);
  EXPECT_THROW(r_alpha_k(rs, sl2_tuple({1, 1}), 0, 3), InvalidArgument);
}

TEST(Poset, RAlphaKMatchesSubsetOracle) {
  for (auto [s, r] : {std::pair{'A', 2}, std::pair{'B', 2}, std::pair{'G', 2}}) {
    RootSystem rs = build_root_system(s, r);
    for (const auto& t : enumerate_tuples(DominantWeight({2, 1}), 3))
      for (std::size_t a = 0; a < rs.num_positive_roots(); ++a)
        for (int k = 1; k <= 3; ++k) EXPECT_EQ(r_alpha_k(rs, t, a, k), brute_r(rs, t, a, k));
  }
}

TEST(Poset, ProfileIsPermutationInvariant) {
  RootSystem rs = build_root_system('B', 2);
  WeightTuple t;
  t.entries = {DominantWeight({1, 0}), DominantWeight({0, 2}), DominantWeight({1, 1})};
  auto p = r_profile(rs, t);
  std::sort(t.entries.begin(), t.entries.end());
  do {
    EXPECT_EQ(r_profile(rs, t), p);
  } while (std::next_permutation(t.entries.begin(), t.entries.end()));
}

TEST(Poset, OrderVerdicts) {
  RootSystem rs = build_root_system('A', 1);
  // balancing raises every r_k
  EXPECT_EQ(poset_leq(rs, sl2_tuple({5, 0, 0}), sl2_tuple({2, 2, 1})), PosetOrder::Less);
  EXPECT_EQ(poset_leq(rs, sl2_tuple({2, 2, 1}), sl2_tuple({5, 0, 0})), PosetOrder::Greater);
  EXPECT_EQ(poset_leq(rs, sl2_tuple({2, 2, 1}), sl2_tuple({1, 2, 2})), PosetOrder::EqualClass);
  EXPECT_THROW(poset_leq(rs, sl2_tuple({2, 2}), sl2_tuple({2, 1, 1})), InvalidArgument);
  EXPECT_THROW(poset_leq(rs, sl2_tuple({2, 2}), sl2_tuple({2, 1})), InvalidArgument);

  RootSystem a2 = build_root_system('A', 2);
  WeightTuple x, y;
  x.entries = {DominantWeight({2, 0}), DominantWeight({0, 2})};
  y.entries = {DominantWeight({1, 1}), DominantWeight({1, 1})};
  EXPECT_EQ(poset_leq(a2, x, y), PosetOrder::Less);
  WeightTuple u, v;
  u.entries = {DominantWeight({2, 1}), DominantWeight({0, 1})};
  v.entries = {DominantWeight({1, 2}), DominantWeight({1, 0})};
  EXPECT_EQ(poset_leq(a2, u, v), PosetOrder::Incomparable);
}

TEST(Poset, OrderIsAPreorder) {
  RootSystem rs = build_root_system('B', 2);
  auto ts = enumerate_tuples(DominantWeight({1, 2}), 2);
  for (const auto& a : ts) {
    EXPECT_EQ(poset_leq(rs, a, a), PosetOrder::EqualClass);
    for (const auto& b : ts)
      for (const auto& c : ts) {
        auto ab = poset_leq(rs, a, b), bc = poset_leq(rs, b, c);
        bool ab_le = ab == PosetOrder::Less || ab == PosetOrder::EqualClass;
        bool bc_le = bc == PosetOrder::Less || bc == PosetOrder::EqualClass;
        if (ab_le && bc_le) {
          auto ac = poset_leq(rs, a, c);
          EXPECT_TRUE(ac == PosetOrder::Less || ac == PosetOrder::EqualClass);
        }
      }
  }
}

TEST(Poset, OrbitSize) {
  EXPECT_EQ(orbit_size(sl2_tuple({2, 2, 1})), 3);
  EXPECT_EQ(orbit_size(sl2_tuple({3, 2, 1, 0})), 24);
  EXPECT_EQ(orbit_size(sl2_tuple({1, 1, 1})), 1);
}

TEST(Poset, MaximalSl2IsBalancedTuple) {
  RootSystem rs = build_root_system('A', 1);
  auto m = maximal_elements(rs, DominantWeight({5}), 3);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].representative, sl2_tuple({2, 2, 1}));
  EXPECT_EQ(m[0].size, 3);
  for (int lam = 0; lam <= 9; ++lam)
    for (int n = 1; n <= 5; ++n) {
      auto mx = maximal_elements(rs, DominantWeight({lam}), n);
      ASSERT_EQ(mx.size(), 1u) << lam << "," << n;
      std::vector<int> e;
      for (const auto& w : mx[0].representative.entries) e.push_back(w.coords()[0]);
      EXPECT_LE(e.front() - e.back(), 1);
    }
}

TEST(Poset, MaximalMatchesBruteForce) {
  RootSystem rs = build_root_system('A', 2);
  DominantWeight lam({2, 2});
  auto ts = enumerate_tuples(lam, 2);
  std::set<WeightTuple> brute;
  for (const auto& a : ts) {
    bool below = false;
    for (const auto& b : ts) below = below || poset_leq(rs, a, b) == PosetOrder::Less;
    if (!below) brute.insert(a.canonical());
  }
  std::set<WeightTuple> got;
  for (const auto& o : maximal_elements(rs, lam, 2)) got.insert(o.representative);
  EXPECT_EQ(got, brute);
}

TEST(Poset, FundamentalMultipleCriterion) {
  EXPECT_TRUE(is_maximal_fundamental_multiple(5, 3, {2, 2, 1}));
  EXPECT_TRUE(is_maximal_fundamental_multiple(5, 3, {1, 2, 2}));
  EXPECT_FALSE(is_maximal_fundamental_multiple(5, 3, {3, 1, 1}));
  EXPECT_FALSE(is_maximal_fundamental_multiple(5, 3, {5, 0, 0}));
  EXPECT_THROW(is_maximal_fundamental_multiple(5, 3, {2, 2}), InvalidArgument);
  EXPECT_THROW(is_maximal_fundamental_multiple(5, 3, {2, 2, 2}), InvalidArgument);
  EXPECT_THROW(is_maximal_fundamental_multiple(1, 2, {2, -1}), InvalidArgument);
}
