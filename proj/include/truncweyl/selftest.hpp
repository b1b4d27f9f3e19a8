#pragma once

// The acceptance checks, parameterised by problem size so the CLI can run a
// reduced pass and the acceptance binary the full one. Each check collects
// its failures instead of stopping at the first.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "truncweyl/charring.hpp"
#include "truncweyl/conjecture.hpp"
#include "truncweyl/cvengine.hpp"
#include "truncweyl/fusion.hpp"
#include "truncweyl/poset.hpp"
#include "truncweyl/rootsys.hpp"

namespace truncweyl {

struct SelftestScale {
  int oracle_max_size;
  int level2_max_twice_n;   // 2N bound for W_N(lambda), N <= lambda < 2N
  int level2_weyl_max;
  int flag_max_size;
  int classify_max_lambda;
  int classify_max_n;
  int ses_max_size;
  int ses_oracle_max_size;  // additivity rechecked with fusion characters
  int conjecture_max_m;
  int poset_sl2_lambda;
  int poset_sl2_n;
  int poset_rank2_size;     // |lambda| for A2, B2, G2
  int poset_rank2_n;
  int ring_max_rank;
  int ring_max_size;
  int independence_max_size;

  static SelftestScale full() { return {7, 24, 12, 8, 20, 10, 10, 8, 8, 10, 6, 5, 4, 4, 5, 6}; }
  static SelftestScale reduced() { return {6, 16, 10, 6, 12, 8, 8, 6, 6, 8, 5, 4, 3, 3, 3, 5}; }
};

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;  // failures first, then informational lines
  double seconds = 0;
};

namespace detail {

class Collector {
 public:
  explicit Collector(CriterionOutcome& o) : o_(o) {}
  void check(bool ok, const std::string& what) {
    if (ok) return;
    o_.pass = false;
    if (++failures_ <= kShown) o_.notes.push_back("FAIL " + what);
    else if (failures_ == kShown + 1) o_.notes.push_back("(further failures omitted)");
  }
  void note(const std::string& s) { o_.notes.push_back(s); }
  int failures() const { return failures_; }

 private:
  static constexpr int kShown = 6;
  CriterionOutcome& o_;
  int failures_ = 0;
};

inline std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int s = 0; s <= max_size; ++s)
    for (auto& p : partitions_of(s)) out.push_back(std::move(p));
  return out;
}

inline GradedCharacter graded_from_table(const std::vector<std::vector<int>>& table) {
  GradedCharacter gc;
  for (std::size_t d = 0; d < table.size(); ++d)
    for (int w : table[d]) gc.add(static_cast<int>(d), sl2_weight(w), 1);
  return gc;
}

inline std::string ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace detail

inline void criterion_dimensions(detail::Collector& c, const SelftestScale&) {
  c.check(dim_truncated(4, 3) == 12, "delta_3(4) = " + dim_truncated(4, 3).get_str() + ", expected 12");
  c.check(dim_truncated(6, 3) == 27, "delta_3(6) = " + dim_truncated(6, 3).get_str() + ", expected 27");
  c.check(dim_truncated(6, 2) == 16, "delta_2(6) = " + dim_truncated(6, 2).get_str() + ", expected 16");
  c.check(dim_truncated(6, 3) - dim_truncated(6, 2) == 11, "delta_3(6) - delta_2(6) != 11");
}

inline void criterion_grading_table(detail::Collector& c, const SelftestScale&) {
  const Partition xi({2, 1, 1, 1});
  c.check(xi_parts(5, 4) == xi, "xi_4^5 = " + xi_parts(5, 4).to_string());
  const GradedCharacter gc = graded_char_cv(xi);
  const GradedCharacter table = detail::graded_from_table({{5}, {3}, {3, 1}, {1, 3}, {1}});
  c.check(gc == table, "graded character of W_4(5) differs from the table");
  const LaurentPoly dims = graded_dim_series(gc);
  const std::vector<int> expected{6, 4, 6, 6, 2};
  for (int d = 0; d < 5; ++d)
    c.check(dims.coeff(d) == expected[d], "dim W_4(5)[" + std::to_string(d) + "] = " + dims.coeff(d).get_str());
  c.check(dims.max_degree() == 4, "W_4(5) has pieces above degree 4");
  // The table's two columns are the level-2 flag 0 -> D(2,3,3) -> W_4(5) -> D(2,5) -> 0.
  FlagMultiplicities fm = flag_multiplicities(xi, 2);
  c.check(fm.entries.size() == 2 && fm.at(5) == LaurentPoly(1) && fm.at(3) == LaurentPoly::monomial(3),
          "level-2 flag of W_4(5) is not D(2,5) + t^3 D(2,3)");
}

inline void criterion_oracle(detail::Collector& c, const SelftestScale& sc) {
  CvSession s;
  int count = 0;
  for (const auto& xi : detail::partitions_up_to(sc.oracle_max_size)) {
    ++count;
    c.check(fusion_graded_char(xi) == s.graded_char(xi), "fusion != recursion for " + xi.to_string());
  }
  c.note(std::to_string(count) + " partitions with |xi| <= " + std::to_string(sc.oracle_max_size));
}

inline void criterion_level2(detail::Collector& c, const SelftestScale& sc) {
  CvSession s;
  int cases = 0;
  for (int n = 2; 2 * n <= sc.level2_max_twice_n; ++n)
    for (int lambda = n; lambda < 2 * n; ++lambda) {
      ++cases;
      const Partition xi = xi_parts(lambda, n);
      const FlagMultiplicities& fm = s.flags(xi, 2);
      FlagMultiplicities expected;
      expected.level = 2;
      for (int k = 0; 2 * k <= lambda; ++k)
        expected.add(lambda - 2 * k, flag_mult_level2_closed(lambda, TruncationIndex::finite(n), k));
      const std::string tag = "W_" + std::to_string(n) + "(" + std::to_string(lambda) + ")";
      c.check(fm == expected, tag + " level-2 multiplicities differ from the closed form");
      const BigInt len = pow(BigInt(2), n - (lambda + 1) / 2);
      c.check(fm.length() == len, tag + " flag length " + fm.length().get_str() + " != " + len.get_str());
    }
  for (int lambda = 1; lambda <= sc.level2_weyl_max; ++lambda) {
    ++cases;
    const Partition xi = xi_parts(lambda, TruncationIndex::infinite());
    FlagMultiplicities expected;
    expected.level = 2;
    for (int k = 0; 2 * k <= lambda; ++k)
      expected.add(lambda - 2 * k, flag_mult_level2_closed(lambda, TruncationIndex::infinite(), k));
    c.check(s.flags(xi, 2) == expected,
            "W(" + std::to_string(lambda) + ") level-2 multiplicities differ from the closed form");
  }
  c.note(std::to_string(cases) + " modules");
}

inline void criterion_flag_identity(detail::Collector& c, const SelftestScale& sc) {
  CvSession s;
  int cases = 0;
  for (const auto& xi : detail::partitions_up_to(sc.flag_max_size)) {
    if (xi.empty()) continue;
    for (int level = xi.largest(); level <= xi.largest() + 2; ++level) {
      ++cases;
      const FlagMultiplicities fm = s.flags(xi, level);
      c.check(character_from_flag(fm, s) == s.graded_char(xi),
              "flag character of " + xi.to_string() + " at level " + std::to_string(level));
      for (const auto& [mu, p] : fm.entries)
        c.check(p.nonnegative() && (xi.size() - mu) % 2 == 0 && mu <= xi.size(),
                "bad flag entry D(" + std::to_string(level) + "," + std::to_string(mu) + ") in " + xi.to_string());
    }
  }
  c.note(std::to_string(cases) + " (xi, level) pairs");
}

inline void criterion_classification(detail::Collector& c, const SelftestScale& sc) {
  CvSession s;
  int demazure = 0, other = 0;
  for (int lambda = 0; lambda <= sc.classify_max_lambda; ++lambda)
    for (int n = 1; n <= sc.classify_max_n; ++n) {
      const std::string tag = "W_" + std::to_string(n) + "(" + std::to_string(lambda) + ")";
      DemazureClass dc;
      try {
        dc = classify_demazure(lambda, n, s);
      } catch (const Error& e) {
        c.check(false, tag + ": " + e.what());
        continue;
      }
      const int q = lambda / n, p = lambda % n;
      // Case split: N | lambda -> level q; p in {N-1, lambda} -> level q+1; otherwise not Demazure.
      DemazureVerdict expected = DemazureVerdict::NotDemazure;
      if (lambda > 0 && p == 0) expected = DemazureVerdict::DemazureLevelQ;
      else if (p == n - 1 || p == lambda) expected = DemazureVerdict::DemazureLevelQPlus1;
      c.check(dc.verdict == expected, tag + " verdict " + to_string(dc.verdict));
      const Partition xi = xi_parts(lambda, n);
      if (dc.verdict == DemazureVerdict::NotDemazure) {
        ++other;
        c.check(dc.flag_length > 1, tag + " not Demazure but flag length " + dc.flag_length.get_str());
      } else {
        ++demazure;
        c.check(s.graded_char(xi) == s.graded_char(xi_demazure(dc.level, lambda)),
                tag + " differs from D(" + std::to_string(dc.level) + "," + std::to_string(lambda) + ")");
      }
      // A level-l flag exists iff l >= q (N | lambda) or l >= q+1.
      const int min_level = (lambda > 0 && p == 0) ? q : q + 1;
      if (!xi.empty()) {
        c.check(xi.largest() == min_level, tag + " smallest flag level " + std::to_string(xi.largest()));
        if (min_level > 1) {
          bool rejected = false;
          try {
            s.flags(xi, min_level - 1);
          } catch (const FlagInadmissible&) {
            rejected = true;
          }
          c.check(rejected, tag + " accepted a flag below level " + std::to_string(min_level));
        }
      }
    }
  c.note(std::to_string(demazure) + " Demazure, " + std::to_string(other) + " not Demazure");
}

inline void criterion_sequences(detail::Collector& c, const SelftestScale& sc) {
  CvSession s;
  int count = 0;
  for (const auto& xi : detail::partitions_up_to(sc.ses_max_size)) {
    if (xi.length() < 2) continue;
    ++count;
    const SesReport r = verify_ses(xi, s);
    std::string why;
    for (const auto& d : r.diagnostics) why += "; " + d;
    c.check(r.ok(), "exact sequence for " + xi.to_string() + why);
    if (xi.size() <= sc.ses_oracle_max_size) {
      GradedCharacter sum = fusion_graded_char(r.plus) + fusion_graded_char(r.minus).shifted(r.shift);
      c.check(fusion_graded_char(xi) == sum, "fusion characters not additive for " + xi.to_string());
    }
  }
  c.note(std::to_string(count) + " sequences with |xi| <= " + std::to_string(sc.ses_max_size));

  struct Instance {
    std::vector<int> xi, plus, minus;
    int shift;
  };
  // W_3(4), W_4(5), W_3(6) and the two sequences for D(2,4), D(3,4).
  const std::vector<Instance> known{{{2, 1, 1}, {2, 2}, {2}, 2},     {{2, 1, 1, 1}, {2, 2, 1}, {2, 1}, 3},
                                    {{2, 2, 2}, {3, 2, 1}, {2}, 4},  {{2, 2}, {3, 1}, {}, 2},
                                    {{3, 1}, {4}, {2}, 1}};
  for (const auto& in : known) {
    const SesReport r = verify_ses(Partition(in.xi), s);
    c.check(r.ok() && r.plus == Partition(in.plus) && r.minus == Partition(in.minus) && r.shift == in.shift,
            "sequence for " + detail::ints(in.xi) + " is " + r.plus.to_string() + ", tau_" +
                std::to_string(r.shift) + " " + r.minus.to_string());
  }

  for (int lambda = 2; lambda <= 30; ++lambda)
    c.check(kernel_is_truncated(lambda, 2).holds, "kernel identity fails for N=2, lambda=" + std::to_string(lambda));

  // For N > 2 and q = 1: the identity holds iff lambda in {N, N+1}.
  std::vector<std::string> q1_holds;
  for (int n = 3; n <= 12; ++n)
    for (int lambda = n; lambda < 2 * n; ++lambda) {
      const KernelReport k = kernel_is_truncated(lambda, n);
      const bool claimed = lambda == n || lambda == n + 1;
      if (k.holds) q1_holds.push_back("(" + std::to_string(lambda) + "," + std::to_string(n) + ")");
      c.check(k.holds == claimed, "q=1 characterization at lambda=" + std::to_string(lambda) + ", N=" +
                                      std::to_string(n) + ": delta_N(lambda)-delta_N(lambda-2) = " +
                                      BigInt(k.delta_n_lambda - k.delta_n_lambda_minus_2).get_str() +
                                      ", delta_{N-1}(lambda) = " + k.delta_n_minus_1_lambda.get_str());
    }
  std::string list;
  for (const auto& h : q1_holds) list += " " + h;
  c.note("q=1, N>2: identity holds exactly at (lambda,N) =" + list);

  const KernelReport k63 = kernel_is_truncated(6, 3);
  c.check(!k63.holds && k63.delta_n_lambda == 27 && k63.delta_n_lambda_minus_2 == 12 && k63.delta_n_minus_1_lambda == 16,
          "kernel report at (6,3)");
}

inline void criterion_conjecture(detail::Collector& c, const SelftestScale& sc) {
  CvSession s;
  int cases = 0;
  for (int m = 1; m <= sc.conjecture_max_m; ++m)
    for (int n = 1; n <= m; ++n) {
      ++cases;
      const ConjectureReport r = verify_conjecture_sl2(m, n, s);
      c.check(r.equal, "m=" + std::to_string(m) + ", N=" + std::to_string(n) + ": " +
                           (r.diff.empty() ? std::string() : r.diff.front()));
    }
  c.note(std::to_string(cases) + " cases with 1 <= N <= m <= " + std::to_string(sc.conjecture_max_m));
}

inline void criterion_poset(detail::Collector& c, const SelftestScale& sc) {
  auto run = [&](const RootSystem& rs, const DominantWeight& lambda, int n) {
    const auto orbits = maximal_elements(rs, lambda, n);
    std::string reps;
    for (const auto& o : orbits) reps += " " + o.representative.to_string();
    const std::string tag = rs.name() + " lambda=" + lambda.to_string() + " N=" + std::to_string(n);
    c.check(orbits.size() == 1, tag + ": " + std::to_string(orbits.size()) + " maximal orbits:" + reps);

    int size = 0;
    for (int x : lambda.coords()) size += x;
    std::set<WeightTuple> maximal;
    for (const auto& o : orbits) maximal.insert(o.representative);

    // N >= |lambda|: maximal iff every nonzero entry is a fundamental weight.
    if (n >= size) {
      for (const auto& t : enumerate_tuples(lambda, n)) {
        bool fundamental = true;
        for (const auto& w : t.entries) {
          int s = 0;
          for (int x : w.coords()) s += x;
          fundamental = fundamental && s <= 1;
        }
        c.check(fundamental == (maximal.count(t.canonical()) > 0),
                tag + ": " + t.to_string() + " fundamental-entry criterion disagrees");
      }
    }

    // lambda = m omega_i: maximal iff max - min <= 1 on the omega_i coefficients.
    int support = 0, node = 0;
    for (int i = 0; i < lambda.rank(); ++i)
      if (lambda[i] != 0) ++support, node = i;
    if (support == 1) {
      for (const auto& t : enumerate_tuples(lambda, n)) {
        std::vector<int> e;
        for (const auto& w : t.entries) e.push_back(w[node]);
        c.check(is_maximal_fundamental_multiple(lambda[node], n, e) == (maximal.count(t.canonical()) > 0),
                tag + ": " + t.to_string() + " max-min criterion disagrees");
      }
    }
  };

  int cases = 0;
  for (int m = 0; m <= sc.poset_sl2_lambda; ++m)
    for (int n = 1; n <= sc.poset_sl2_n; ++n, ++cases) run(sl2(), sl2_weight(m), n);
  for (char series : {'A', 'B', 'G'}) {
    const RootSystem rs = build_root_system(series, 2);
    for (int a = 0; a <= sc.poset_rank2_size; ++a)
      for (int b = 0; a + b <= sc.poset_rank2_size; ++b)
        for (int n = 1; n <= sc.poset_rank2_n; ++n, ++cases) run(rs, DominantWeight({a, b}), n);
  }
  c.note(std::to_string(cases) + " instances");
}

inline void criterion_character_ring(detail::Collector& c, const SelftestScale& sc) {
  const RootSystem b2 = build_root_system('B', 2);
  for (int k = 1; k <= 5; ++k) {
    std::map<DominantWeight, BigInt> expected{{DominantWeight({0, k + 1}), 1},
                                              {DominantWeight({1, k - 1}), 1},
                                              {DominantWeight({0, k - 1}), 1}};
    c.check(tensor_decompose(b2, DominantWeight({0, k}), DominantWeight({0, 1})) == expected,
            "B2: V(" + std::to_string(k) + " w2) (x) V(w2)");
  }
  // KR(2 w2) (x) V(w2) = V(3w2) + V(w1+w2) + 2 V(w2), with KR(2 w2) = V(2w2) + V(0).
  std::map<DominantWeight, BigInt> kr = tensor_decompose(b2, DominantWeight({0, 2}), DominantWeight({0, 1}));
  for (const auto& [w, m] : tensor_decompose(b2, DominantWeight({0, 0}), DominantWeight({0, 1}))) kr[w] += m;
  const std::map<DominantWeight, BigInt> kr_expected{
      {DominantWeight({0, 3}), 1}, {DominantWeight({1, 1}), 1}, {DominantWeight({0, 1}), 2}};
  c.check(kr == kr_expected, "B2: KR_2 decomposition for m=2");

  const std::vector<std::pair<char, int>> types{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
                                                {'B', 4}, {'C', 3}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}};
  int weights = 0;
  for (const auto& [series, rank] : types) {
    if (rank > sc.ring_max_rank) continue;
    const RootSystem rs = build_root_system(series, rank);
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& w, int i, int left) {
      if (i == rank) {
        ++weights;
        const DominantWeight lambda(w);
        BigInt total = 0;
        for (const auto& [mu, m] : dominant_character(rs, lambda)) total += m * BigInt(weyl_orbit(rs, mu.coords()).size());
        c.check(total == weyl_dim(rs, lambda), rs.name() + " " + lambda.to_string() + ": Freudenthal total " +
                                                    total.get_str() + " != Weyl " + weyl_dim(rs, lambda).get_str());
        return;
      }
      for (int x = 0; x <= left; ++x) {
        w[i] = x;
        rec(w, i + 1, left - x);
      }
      w[i] = 0;
    };
    std::vector<int> w(rank, 0);
    rec(w, 0, sc.ring_max_size);
  }
  c.note(std::to_string(weights) + " highest weights");
}

inline void criterion_independence(detail::Collector& c, const SelftestScale& sc) {
  int count = 0;
  for (const auto& xi : detail::partitions_up_to(sc.independence_max_size)) {
    if (xi.empty()) continue;
    ++count;
    const int l = xi.length();
    std::vector<std::vector<Rational>> choices(4);
    for (int j = 0; j < l; ++j) {
      choices[0].emplace_back(j);
      choices[1].emplace_back(2 * j + 1);
      choices[2].emplace_back(j % 2 ? -j : j + 3);
      choices[3].emplace_back(j + 1, j + 2);
    }
    for (auto& ch : choices) {
      for (auto& a : ch) a.canonicalize();
    }
    c.check(parameter_independence_check(xi, choices), "graded character of " + xi.to_string() + " depends on the parameters");
  }
  c.note(std::to_string(count) + " partitions, 4 parameter sets each");
}

struct CriterionSpec {
  int id;
  const char* title;
  void (*run)(detail::Collector&, const SelftestScale&);
};

inline const std::vector<CriterionSpec>& acceptance_criteria() {
  static const std::vector<CriterionSpec> list{
      {1, "dimension formulas", criterion_dimensions},
      {2, "W_4(5) grading table", criterion_grading_table},
      {3, "fusion oracle equals recursion", criterion_oracle},
      {4, "level-2 closed forms", criterion_level2},
      {5, "flag character identity", criterion_flag_identity},
      {6, "Demazure classification", criterion_classification},
      {7, "exact sequences and kernels", criterion_sequences},
      {8, "sl2 fusion conjecture", criterion_conjecture},
      {9, "maximal elements of P+(lambda,N)", criterion_poset},
      {10, "character ring", criterion_character_ring},
      {11, "parameter independence", criterion_independence},
  };
  return list;
}

inline CriterionOutcome run_criterion(const CriterionSpec& spec, const SelftestScale& scale) {
  CriterionOutcome out;
  out.id = spec.id;
  out.title = spec.title;
  detail::Collector c(out);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    spec.run(c, scale);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  if (c.failures() > 0) out.notes.push_back(std::to_string(c.failures()) + " failed checks");
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace truncweyl
