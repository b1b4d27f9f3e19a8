#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "truncweyl/cvengine.hpp"

using namespace truncweyl;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

LaurentPoly t(long e) { return LaurentPoly::monomial(e); }

// Oracle: isotypic decomposition of V(a_1) x ... x V(a_l) from the weight
// multiset, peeling highest weights.
std::map<int, long> tensor_oracle(const std::vector<int>& parts) {
  std::map<int, long> weights{{0, 1}};
  for (int a : parts) {
    std::map<int, long> next;
    for (auto [w, m] : weights)
      for (int j = -a; j <= a; j += 2) next[w + j] += m;
    weights = next;
  }
  std::map<int, long> iso;
  for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
    if (it->first < 0) break;
    long above = weights.count(it->first + 2) ? weights[it->first + 2] : 0;
    if (it->second - above) iso[it->first] = it->second - above;
  }
  return iso;
}

std::map<int, long> ungraded(const GradedCharacter& gc) {
  std::map<int, long> out;
  for (const auto& [k, piece] : gc.pieces())
    for (const auto& [w, m] : piece) out[w.coords()[0]] += m.get_si();
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST(CvEngine, Dimensions) {
  EXPECT_EQ(dim_cv(P({2, 1, 1})), 12);
  EXPECT_EQ(dim_cv(P({2, 2, 2})) - dim_cv(P({3, 3})), 11);
  EXPECT_EQ(dim_cv(Partition()), 1);
  EXPECT_EQ(dim_truncated(4, 3), 12);
  EXPECT_EQ(dim_truncated(5, 4), 24);
  for (int lam = 0; lam <= 12; ++lam) {
    EXPECT_EQ(dim_truncated(lam, 1), lam + 1);
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(dim_truncated(lam, n), dim_cv(xi_parts(lam, n)));
  }
}

TEST(CvEngine, GradingTableOfW45) {
  GradedCharacter gc = graded_char_cv(P({2, 1, 1, 1}));
  GradedCharacter expect;
  expect.add(0, sl2_weight(5), 1);
  expect.add(1, sl2_weight(3), 1);
  expect.add(2, sl2_weight(3), 1);
  expect.add(2, sl2_weight(1), 1);
  expect.add(3, sl2_weight(3), 1);
  expect.add(3, sl2_weight(1), 1);
  expect.add(4, sl2_weight(1), 1);
  EXPECT_EQ(gc, expect);
  LaurentPoly series = 6 + 4 * t(1) + 6 * t(2) + 6 * t(3) + 2 * t(4);
  EXPECT_EQ(graded_dim_series(gc), series);
}

TEST(CvEngine, SmallCharacters) {
  GradedCharacter one_one;
  one_one.add(0, sl2_weight(2), 1);
  one_one.add(1, sl2_weight(0), 1);
  EXPECT_EQ(graded_char_cv(P({1, 1})), one_one);
  for (int m = 1; m <= 5; ++m) {
    GradedCharacter v;
    v.add(0, sl2_weight(m), 1);
    EXPECT_EQ(graded_char_cv(P({m})), v);
  }
  GradedCharacter zero;
  zero.add(0, sl2_weight(0), 1);
  EXPECT_EQ(graded_char_cv(Partition()), zero);
}

TEST(CvEngine, UngradedCharacterIsTensorProduct) {
  CvSession s;
  for (int n = 1; n <= 9; ++n)
    for (const auto& xi : partitions_of(n)) {
      const auto& gc = s.graded_char(xi);
      EXPECT_EQ(ungraded(gc), tensor_oracle(xi.parts())) << xi.to_string();
      EXPECT_EQ(total_dim(gc), dim_cv(xi));
      EXPECT_EQ(gc.multiplicity(0, sl2_weight(n)), 1);
      EXPECT_TRUE(gc.nonnegative());
      EXPECT_GE(gc.min_degree(), 0);
    }
}

TEST(CvEngine, LabelsResolve) {
  EXPECT_EQ(ModuleLabel::truncated_weyl(5, 4).resolve(), P({2, 1, 1, 1}));
  EXPECT_EQ(ModuleLabel::weyl(3).resolve(), P({1, 1, 1}));
  EXPECT_EQ(ModuleLabel::demazure(2, 4).resolve(), P({2, 2}));
  EXPECT_EQ(ModuleLabel::truncated_weyl(5, 4).to_string(), "W_4(5)");
  EXPECT_EQ(ModuleLabel::demazure(2, 4).shifted(3).to_string(), "tau_3 D(2,4)");
  EXPECT_EQ(ModuleLabel::weyl(2).to_string(), "W(2)");

  GradedCharacter d24 = graded_char_label(ModuleLabel::demazure(2, 4));
  EXPECT_EQ(total_dim(d24), 9);
  EXPECT_EQ(d24.multiplicity(0, sl2_weight(4)), 1);

  GradedCharacter shifted = graded_char_label(ModuleLabel::weyl(0).shifted(2));
  GradedCharacter v0;
  v0.add(2, sl2_weight(0), 1);
  EXPECT_EQ(shifted, v0);

  for (int lam = 0; lam <= 6; ++lam)
    for (int n = lam; n <= lam + 2; ++n)
      EXPECT_EQ(graded_char_label(ModuleLabel::truncated_weyl(lam, std::max(n, 1))),
                graded_char_label(ModuleLabel::weyl(lam)));
}

TEST(CvEngine, FlagMultiplicities) {
  auto a = flag_multiplicities(P({2, 1, 1, 1}), 2);
  EXPECT_EQ(a.entries.size(), 2u);
  EXPECT_EQ(a.at(5), LaurentPoly(1));
  EXPECT_EQ(a.at(3), t(3));
  EXPECT_EQ(a.length(), 2);

  auto b = flag_multiplicities(P({2, 1, 1}), 2);
  EXPECT_EQ(b.at(4), LaurentPoly(1));
  EXPECT_EQ(b.at(2), t(2));
  EXPECT_EQ(b.entries.size(), 2u);

  for (int l = 1; l <= 4; ++l)
    for (int lam = 0; lam <= 9; ++lam) {
      auto fm = flag_multiplicities(xi_demazure(l, lam, 1), l);
      EXPECT_EQ(fm.length(), 1);
      EXPECT_EQ(fm.at(lam), LaurentPoly(1));
    }
  EXPECT_THROW(flag_multiplicities(P({3, 1}), 2), FlagInadmissible);
  EXPECT_THROW(flag_length(P({3}), 1), InvalidArgument);
}

TEST(CvEngine, FlagRecoversCharacter) {
  CvSession s;
  for (int n = 1; n <= 8; ++n)
    for (const auto& xi : partitions_of(n))
      for (int l = xi.largest(); l <= xi.largest() + 1; ++l)
        EXPECT_EQ(character_from_flag(s.flags(xi, l), s), s.graded_char(xi)) << xi.to_string() << " " << l;
}

TEST(CvEngine, Level2ClosedForm) {
  EXPECT_EQ(flag_mult_level2_closed(5, TruncationIndex::finite(4), 1), t(3));
  EXPECT_TRUE(flag_mult_level2_closed(5, TruncationIndex::finite(4), 2).is_zero());
  EXPECT_EQ(flag_mult_level2_closed(4, TruncationIndex::infinite(), 1), t(2) + t(3));
  EXPECT_THROW(flag_mult_level2_closed(3, TruncationIndex::finite(4), 1), InvalidArgument);
  EXPECT_THROW(flag_mult_level2_closed(5, TruncationIndex::finite(4), 3), InvalidArgument);

  CvSession s;
  for (int n = 2; n <= 7; ++n)
    for (int lam = n; lam < 2 * n; ++lam) {
      const auto& fm = s.flags(xi_parts(lam, n), 2);
      for (int k = 0; 2 * k <= lam; ++k)
        EXPECT_EQ(fm.at(lam - 2 * k), flag_mult_level2_closed(lam, TruncationIndex::finite(n), k));
      EXPECT_EQ(fm.length(), pow(BigInt(2), n - (lam + 1) / 2));
    }
}

TEST(CvEngine, Classification) {
  auto c = classify_demazure(6, 3);
  EXPECT_EQ(c.verdict, DemazureVerdict::DemazureLevelQ);
  EXPECT_EQ(c.level, 2);
  EXPECT_EQ(classify_demazure(4, 3).verdict, DemazureVerdict::NotDemazure);
  EXPECT_EQ(classify_demazure(4, 3).flag_length, 2);
  for (int lam = 1; lam <= 12; ++lam)
    EXPECT_NE(classify_demazure(lam, 2).verdict, DemazureVerdict::NotDemazure) << lam;
  CvSession s;
  for (int n = 1; n <= 6; ++n)
    for (int lam = 1; lam <= 14; ++lam) {
      auto cl = classify_demazure(lam, n, s);
      if (cl.verdict != DemazureVerdict::NotDemazure)
        EXPECT_EQ(s.graded_char(xi_parts(lam, n)), s.graded_char(xi_demazure(cl.level, lam, 1)));
      else
        EXPECT_GT(cl.flag_length, 1);
    }
}

TEST(CvEngine, KernelReports) {
  auto a = kernel_is_truncated(6, 3);
  EXPECT_FALSE(a.holds);
  EXPECT_EQ(a.delta_n_lambda, 27);
  EXPECT_EQ(a.delta_n_lambda_minus_2, 12);
  EXPECT_EQ(a.delta_n_minus_1_lambda, 16);
  for (int lam = 2; lam <= 30; ++lam) EXPECT_TRUE(kernel_is_truncated(lam, 2).holds) << lam;
  for (int n = 2; n <= 10; ++n) EXPECT_TRUE(kernel_is_truncated(n, n).holds) << n;
  EXPECT_THROW(kernel_is_truncated(1, 3), InvalidArgument);
  EXPECT_THROW(kernel_is_truncated(4, 1), InvalidArgument);
}

TEST(CvEngine, ExactSequences) {
  auto r = verify_ses(P({2, 1, 1}));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.plus, P({2, 2}));
  EXPECT_EQ(r.minus, P({2}));
  EXPECT_EQ(r.dim_plus, 9);
  EXPECT_EQ(r.dim_minus, 3);

  auto u = verify_ses(P({1, 1}));
  EXPECT_TRUE(u.ok());
  EXPECT_EQ(u.minus, Partition());

  auto v = verify_ses(P({3, 2, 1}));
  EXPECT_TRUE(v.ok());
  EXPECT_EQ(v.plus, P({3, 3}));
  EXPECT_EQ(v.minus, P({3, 1}));
  EXPECT_EQ(v.dim, 24);

  CvSession s;
  for (int n = 2; n <= 9; ++n)
    for (const auto& xi : partitions_of(n))
      if (xi.length() >= 2) EXPECT_TRUE(verify_ses(xi, s).ok()) << xi.to_string();
  EXPECT_THROW(verify_ses(P({3})), InvalidArgument);
}

TEST(CvEngine, GammaAndTruncatedIdentities) {
  CvSession s;
  for (int mu = 0; mu <= lambda_ab(1, 3, 1); ++mu) EXPECT_TRUE(gamma_identity_check(1, 3, 1, mu, s)) << mu;
  for (int l = 1; l <= 3; ++l)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int mu = 0; mu <= lambda_ab(a, b, l); ++mu)
          EXPECT_TRUE(gamma_identity_check(a, b, l, mu, s)) << a << b << l << mu;
  for (int n = 2; n <= 5; ++n)
    for (int lam = n; lam <= 3 * n; ++lam)
      for (int mu = 0; mu <= lam; ++mu) EXPECT_TRUE(truncated_flag_identity_check(lam, n, mu, s));
  EXPECT_THROW(gamma_identity_check(-1, 0, 1, 0), InvalidArgument);
}
