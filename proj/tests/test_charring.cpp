#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <vector>

#include "truncweyl/charring.hpp"
#include "truncweyl/laurent.hpp"
#include "truncweyl/rootsys.hpp"

using namespace truncweyl;

namespace {

LaurentPoly poly(const std::map<long, long>& terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, BigInt(c));
  return p;
}

// Oracle: [m choose k]_t counts k-subsets of {0..m-1} by the sum of their
// elements minus k(k-1)/2.
LaurentPoly qbinom_by_subsets(int m, int k) {
  LaurentPoly p;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    long s = 0;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) s += i;
    p.add_term(s - long(k) * (k - 1) / 2, 1);
  }
  return p;
}

// Oracle: weight multiplicities of sl_n via semistandard tableaux. The shape
// comes from fundamental coordinates, the content c gives weight c_i - c_{i+1}.
std::map<Weight, BigInt> ssyt_character(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size()) + 1;
  std::vector<int> rows(n - 1);
  for (int i = n - 2, acc = 0; i >= 0; --i) rows[i] = acc += lambda[i];
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < n - 1; ++r)
    for (int c = 0; c < rows[r]; ++c) cells.emplace_back(r, c);
  std::map<std::pair<int, int>, int> fill;
  std::map<Weight, BigInt> out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      std::vector<int> content(n, 0);
      for (const auto& [cell, v] : fill) ++content[v];
      Weight w(n - 1);
      for (int i = 0; i < n - 1; ++i) w[i] = content[i] - content[i + 1];
      out[w] += 1;
      return;
    }
    auto [r, c] = cells[k];
    int lo = 0;
    if (c > 0) lo = std::max(lo, fill[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, fill[{r - 1, c}] + 1);
    for (int v = lo; v < n; ++v) {
      fill[{r, c}] = v;
      rec(k + 1);
    }
    fill.erase({r, c});
  };
  rec(0);
  return out;
}

}  // namespace

TEST(LaurentPoly, StoresNoZerosAndEvaluates) {
  LaurentPoly p = poly({{0, 1}, {2, 3}});
  p.add_term(2, -3);
  EXPECT_EQ(p.coeffs().size(), 1u);
  EXPECT_EQ(p.eval_at_one(), 1);
  LaurentPoly q = poly({{-1, 2}, {3, 5}});
  EXPECT_EQ(q.eval_at_one(), 7);
  EXPECT_EQ(q.min_degree(), -1);
  EXPECT_EQ(q.max_degree(), 3);
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ(poly({{0, 1}, {1, 1}, {2, 2}}).to_string(), "1+t+2t^2");
  EXPECT_EQ(LaurentPoly::monomial(3).to_string(), "t^3");
}

TEST(LaurentPoly, Arithmetic) {
  LaurentPoly a = poly({{0, 1}, {1, 1}});
  EXPECT_EQ(a * a, poly({{0, 1}, {1, 2}, {2, 1}}));
  EXPECT_EQ(a.shifted(3), poly({{3, 1}, {4, 1}}));
  EXPECT_EQ(divide_exact(a * a * poly({{0, 1}, {2, -1}}), a), a * poly({{0, 1}, {2, -1}}));
  EXPECT_THROW(divide_exact(poly({{0, 1}, {1, 1}}), poly({{0, 1}, {1, 2}})), IdentityFalsified);
}

TEST(QBinomial, Examples) {
  EXPECT_EQ(qbinom(2, 1), poly({{0, 1}, {1, 1}}));
  EXPECT_EQ(qbinom(5, 0), LaurentPoly(1));
  EXPECT_EQ(qbinom(4, 2), poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
  EXPECT_TRUE(qbinom(3, 4).is_zero());
  EXPECT_TRUE(qbinom(3, -1).is_zero());
  EXPECT_FALSE(qbinom_defined(3, 4));
}

TEST(QBinomial, MatchesSubsetSumOracle) {
  for (int m = 0; m <= 12; ++m)
    for (int k = 0; k <= m; ++k) {
      const LaurentPoly q = qbinom(m, k);
      EXPECT_EQ(q, qbinom_by_subsets(m, k)) << m << " " << k;
      EXPECT_EQ(q, qbinom(m, m - k));
      EXPECT_EQ(q.eval_at_one(), binomial(m, k));
      EXPECT_EQ(q.max_degree(), long(k) * (m - k));
      EXPECT_TRUE(q.nonnegative());
      EXPECT_EQ(qbinom_product(m, k), qbinom_pascal(m, k));
    }
}

TEST(WeylDimension, Examples) {
  for (int m = 0; m <= 10; ++m) EXPECT_EQ(weyl_dim(sl2(), sl2_weight(m)), m + 1);
  const RootSystem b2 = build_root_system('B', 2);
  EXPECT_EQ(weyl_dim(b2, DominantWeight({0, 1})), 4);
  EXPECT_EQ(weyl_dim(b2, DominantWeight({1, 0})), 5);
  EXPECT_EQ(weyl_dim(build_root_system('G', 2), DominantWeight({1, 0})), 7);
  EXPECT_EQ(weyl_dim(build_root_system('E', 8), DominantWeight({0, 0, 0, 0, 0, 0, 0, 1})), 248);
  EXPECT_EQ(weyl_dim(build_root_system('F', 4), DominantWeight({0, 0, 0, 1})), 26);
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'C', 3}, {'D', 4}, {'E', 6}})
    EXPECT_EQ(weyl_dim(build_root_system(s, n), DominantWeight::zero(n)), 1);
}

TEST(IrreducibleCharacter, Examples) {
  const FormalCharacter ch = irreducible_character(sl2(), sl2_weight(2));
  EXPECT_EQ(ch.entries().size(), 3u);
  for (int w : {2, 0, -2}) EXPECT_EQ(ch.multiplicity({w}), 1);

  const RootSystem b2 = build_root_system('B', 2);
  const FormalCharacter spin = irreducible_character(b2, DominantWeight({0, 1}));
  EXPECT_EQ(spin.entries().size(), 4u);
  for (const auto& [w, m] : spin.entries()) EXPECT_EQ(m, 1);

  const RootSystem a2 = build_root_system('A', 2);
  const FormalCharacter adj = irreducible_character(a2, DominantWeight({1, 1}));
  EXPECT_EQ(adj.dimension(), 8);
  EXPECT_EQ(adj.multiplicity({0, 0}), 2);
}

TEST(IrreducibleCharacter, TypeAMatchesTableauOracle) {
  for (int n = 1; n <= 3; ++n) {
    const RootSystem rs = build_root_system('A', n);
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& w, int i, int left) {
      if (i == n) {
        EXPECT_EQ(irreducible_character(rs, DominantWeight(w)).entries(), ssyt_character(w)) << rs.name();
        return;
      }
      for (int x = 0; x <= left; ++x) {
        w[i] = x;
        rec(w, i + 1, left - x);
      }
    };
    std::vector<int> w(n);
    rec(w, 0, 4);
  }
}

TEST(IrreducibleCharacter, WeylInvariantAndDimensionMatches) {
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'B', 2}, {'G', 2}, {'C', 3}, {'B', 3}, {'A', 3}}) {
    const RootSystem rs = build_root_system(s, n);
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& w, int i, int left) {
      if (i == n) {
        const FormalCharacter ch = irreducible_character(rs, DominantWeight(w));
        EXPECT_TRUE(is_weyl_invariant(rs, ch)) << rs.name();
        EXPECT_EQ(ch.dimension(), weyl_dim(rs, DominantWeight(w))) << rs.name();
        return;
      }
      for (int x = 0; x <= left; ++x) {
        w[i] = x;
        rec(w, i + 1, left - x);
      }
    };
    std::vector<int> w(n);
    rec(w, 0, 3);
  }
  FormalCharacter lopsided;
  lopsided.add({1}, 1);
  EXPECT_FALSE(is_weyl_invariant(sl2(), lopsided));
}

TEST(TensorDecompose, ClebschGordan) {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      std::map<DominantWeight, BigInt> expected;
      for (int c = std::abs(a - b); c <= a + b; c += 2) expected[sl2_weight(c)] = 1;
      EXPECT_EQ(tensor_decompose(sl2(), sl2_weight(a), sl2_weight(b)), expected);
    }
}

TEST(TensorDecompose, B2KirillovReshetikhinExample) {
  const RootSystem b2 = build_root_system('B', 2);
  for (int k = 1; k <= 6; ++k) {
    std::map<DominantWeight, BigInt> expected{
        {DominantWeight({0, k + 1}), 1}, {DominantWeight({1, k - 1}), 1}, {DominantWeight({0, k - 1}), 1}};
    EXPECT_EQ(tensor_decompose(b2, DominantWeight({0, k}), DominantWeight({0, 1})), expected) << k;
  }
  // KR(k w2) = sum_r V((k-2r) w2); its dimensions for k = 1, 2, 3.
  std::vector<int> kr_dims;
  for (int k = 1; k <= 3; ++k) {
    BigInt d = 0;
    for (int r = 0; 2 * r <= k; ++r) d += weyl_dim(b2, DominantWeight({0, k - 2 * r}));
    kr_dims.push_back(d.get_si());
  }
  EXPECT_EQ(kr_dims, (std::vector<int>{4, 11, 24}));
}

TEST(TensorDecompose, SymmetricAndBalanced) {
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
    const RootSystem rs = build_root_system(s, n);
    std::vector<DominantWeight> ws;
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& w, int i, int left) {
      if (i == n) return ws.push_back(DominantWeight(w));
      for (int x = 0; x <= left; ++x) {
        w[i] = x;
        rec(w, i + 1, left - x);
      }
    };
    std::vector<int> w(n);
    rec(w, 0, 2);
    for (const auto& a : ws)
      for (const auto& b : ws) {
        const auto ab = tensor_decompose(rs, a, b);
        EXPECT_EQ(ab, tensor_decompose(rs, b, a));
        BigInt total = 0;
        for (const auto& [nu, m] : ab) {
          EXPECT_GT(m, 0);
          total += m * weyl_dim(rs, nu);
        }
        EXPECT_EQ(total, weyl_dim(rs, a) * weyl_dim(rs, b)) << rs.name();
      }
    const DominantWeight zero = DominantWeight::zero(n);
    for (const auto& a : ws) EXPECT_EQ(tensor_decompose(rs, a, zero), (std::map<DominantWeight, BigInt>{{a, 1}}));
  }
  const RootSystem a2 = build_root_system('A', 2);
  EXPECT_EQ(tensor_decompose(a2, DominantWeight({1, 0}), DominantWeight({0, 1})),
            (std::map<DominantWeight, BigInt>{{DominantWeight({1, 1}), 1}, {DominantWeight({0, 0}), 1}}));
}

TEST(DominanceHeight, IncreasesAlongPositiveRoots) {
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'B', 2}, {'G', 2}, {'F', 4}, {'C', 3}}) {
    const RootSystem rs = build_root_system(s, n);
    for (int j = 1; j <= n; ++j) EXPECT_GT(dominance_height(rs, rs.simple_root_weight(j)), 0);
  }
}

TEST(GradedCharacter, OperationsAndSeries) {
  GradedCharacter gc;
  EXPECT_TRUE(graded_dim_series(gc).is_zero());
  EXPECT_EQ(total_dim(gc), 0);
  gc.add(0, sl2_weight(3), 1);
  EXPECT_EQ(graded_dim_series(gc), LaurentPoly(4));
  gc.add(2, sl2_weight(1), 2);
  EXPECT_EQ(graded_dim_series(gc), poly({{0, 4}, {2, 4}}));
  EXPECT_EQ(total_dim(gc), 8);
  EXPECT_EQ(gc.shifted(1).multiplicity(3, sl2_weight(1)), 2);
  EXPECT_EQ(gc.scaled(3).multiplicity(0, sl2_weight(3)), 3);
  GradedCharacter sum = gc + gc.scaled(-1);
  EXPECT_TRUE(sum.empty());
  EXPECT_TRUE(gc.nonnegative());
  EXPECT_FALSE(gc.scaled(-1).nonnegative());
  EXPECT_EQ(gc.min_degree(), 0);
  EXPECT_EQ(gc.max_degree(), 2);
}

TEST(DominantWeight, Validation) {
  EXPECT_THROW(DominantWeight({1, -1}), InvalidArgument);
  const DominantWeight w = DominantWeight::fundamental_multiple(3, 2, 4);
  EXPECT_EQ(w.coords(), (std::vector<int>{0, 4, 0}));
  EXPECT_EQ(w.norm(), 4);
  EXPECT_EQ(w.to_string(), "(0,4,0)");
  EXPECT_EQ(sl2_weight(5).to_string(), "5");
}
