#pragma once

// The poset P^+(lambda, N) of N-tuples of dominant weights summing to
// lambda, ordered by the r_{alpha,k} statistics.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "truncweyl/bigint.hpp"
#include "truncweyl/error.hpp"
#include "truncweyl/rootsys.hpp"
#include "truncweyl/weight.hpp"

namespace truncweyl {

struct WeightTuple {
  std::vector<DominantWeight> entries;

  int size() const { return static_cast<int>(entries.size()); }

  DominantWeight sum() const {
    if (entries.empty()) throw InvalidArgument("empty weight tuple");
    DominantWeight s = DominantWeight::zero(entries.front().rank());
    for (const auto& e : entries) s = s + e;
    return s;
  }

  // Entries sorted in decreasing order: the S_N-orbit representative.
  WeightTuple canonical() const {
    WeightTuple t = *this;
    std::sort(t.entries.begin(), t.entries.end(), std::greater<>());
    return t;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ",";
      s += entries[i].to_string();
    }
    return s + ")";
  }

  auto operator<=>(const WeightTuple&) const = default;
};

inline constexpr unsigned long kDefaultTupleBound = 100000;

// |P^+(lambda, N)| = prod_i C(lambda_i + N - 1, N - 1)
inline BigInt count_tuples(const DominantWeight& lambda, int n) {
  if (n < 1) throw InvalidArgument("N must be positive");
  BigInt c = 1;
  for (int v : lambda.coords()) c *= binomial(v + n - 1, n - 1);
  return c;
}

// Visits every tuple once, lexicographically on the flattened coordinates.
inline void for_each_tuple(const DominantWeight& lambda, int n,
                           const std::function<void(const WeightTuple&)>& visit,
                           unsigned long bound = kDefaultTupleBound) {
  BigInt count = count_tuples(lambda, n);
  if (count > BigInt(bound)) throw EnumerationBoundExceeded(count.get_str(), bound);
  const int rank = lambda.rank();
  std::vector<std::vector<int>> flat(n, std::vector<int>(rank, 0));
  std::vector<int> rest = lambda.coords();
  std::function<void(int, int)> rec = [&](int entry, int coord) {
    if (coord == rank) {
      rec(entry + 1, 0);
      return;
    }
    if (entry == n - 1) {
      WeightTuple t;
      flat[entry] = rest;
      for (auto& f : flat) t.entries.emplace_back(f);
      visit(t);
      return;
    }
    const int avail = rest[coord];
    for (int v = 0; v <= avail; ++v) {
      flat[entry][coord] = v;
      rest[coord] = avail - v;
      rec(entry, coord + 1);
    }
    rest[coord] = avail;
  };
  rec(0, 0);
}

inline std::vector<WeightTuple> enumerate_tuples(const DominantWeight& lambda, int n,
                                                 unsigned long bound = kDefaultTupleBound) {
  std::vector<WeightTuple> out;
  for_each_tuple(lambda, n, [&](const WeightTuple& t) { out.push_back(t); }, bound);
  return out;
}

// min over k-subsets of (sum of entries)(h_alpha) = sum of the k smallest values.
inline int r_alpha_k(const RootSystem& rs, const WeightTuple& t, std::size_t root_index, int k) {
  if (k < 1 || k > t.size())
    throw InvalidArgument("k=" + std::to_string(k) + " outside 1.." + std::to_string(t.size()));
  std::vector<int> vals;
  for (const auto& e : t.entries) vals.push_back(rs.pair(e.coords(), root_index));
  std::sort(vals.begin(), vals.end());
  int s = 0;
  for (int j = 0; j < k; ++j) s += vals[j];
  return s;
}

// All r_{alpha,k}, alpha-major, k = 1..N. Sorting once per root gives every
// k from prefix sums.
inline std::vector<int> r_profile(const RootSystem& rs, const WeightTuple& t) {
  std::vector<int> prof;
  prof.reserve(rs.num_positive_roots() * t.size());
  std::vector<int> vals(t.size());
  for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
    for (int j = 0; j < t.size(); ++j) vals[j] = rs.pair(t.entries[j].coords(), a);
    std::sort(vals.begin(), vals.end());
    int s = 0;
    for (int v : vals) prof.push_back(s += v);
  }
  return prof;
}

enum class PosetOrder { Less, Greater, Incomparable, EqualClass };

inline const char* to_string(PosetOrder o) {
  switch (o) {
    case PosetOrder::Less: return "less";
    case PosetOrder::Greater: return "greater";
    case PosetOrder::Incomparable: return "incomparable";
    case PosetOrder::EqualClass: return "equal-class";
  }
  return "?";
}

inline PosetOrder compare_profiles(const std::vector<int>& a, const std::vector<int>& b) {
  bool le = true, ge = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) le = false;
    if (a[i] < b[i]) ge = false;
  }
  if (le && ge) return PosetOrder::EqualClass;
  if (le) return PosetOrder::Less;
  if (ge) return PosetOrder::Greater;
  return PosetOrder::Incomparable;
}

// Verdict for a against b.
inline PosetOrder poset_leq(const RootSystem& rs, const WeightTuple& a, const WeightTuple& b) {
  if (a.size() != b.size()) throw InvalidArgument("tuples have different lengths");
  if (a.sum() != b.sum()) throw InvalidArgument("tuples sum to different weights");
  return compare_profiles(r_profile(rs, a), r_profile(rs, b));
}

struct TupleOrbit {
  WeightTuple representative;  // canonical (decreasing) order
  BigInt size;                 // number of distinct permutations
};

inline BigInt orbit_size(const WeightTuple& t) {
  BigInt total;
  mpz_fac_ui(total.get_mpz_t(), t.size());
  std::map<DominantWeight, unsigned long> counts;
  for (const auto& e : t.entries) ++counts[e];
  for (const auto& [w, c] : counts) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), c);
    total /= f;
  }
  return total;
}

// Tuples not strictly below any other tuple, grouped into S_N-orbits.
inline std::vector<TupleOrbit> maximal_elements(const RootSystem& rs, const DominantWeight& lambda,
                                                int n, unsigned long bound = kDefaultTupleBound) {
  if (lambda.rank() != rs.rank()) throw InvalidArgument("weight rank does not match root system");
  // r-profiles are symmetric in the entries, so work with orbit representatives.
  std::map<WeightTuple, std::vector<int>> reps;
  for_each_tuple(
      lambda, n,
      [&](const WeightTuple& t) {
        WeightTuple c = t.canonical();
        if (!reps.count(c)) reps.emplace(c, r_profile(rs, c));
      },
      bound);

  std::set<std::vector<int>> profiles;
  for (const auto& [t, p] : reps) profiles.insert(p);
  std::set<std::vector<int>> maximal;
  for (const auto& p : profiles) {
    bool below = false;
    for (const auto& o : profiles)
      if (compare_profiles(p, o) == PosetOrder::Less) {
        below = true;
        break;
      }
    if (!below) maximal.insert(p);
  }

  std::vector<TupleOrbit> out;
  for (const auto& [t, p] : reps)
    if (maximal.count(p)) out.push_back({t, orbit_size(t)});
  return out;
}

// lambda = m omega_i: maximal iff max - min <= 1.
inline bool is_maximal_fundamental_multiple(int m, int n, const std::vector<int>& entries) {
  if (static_cast<int>(entries.size()) != n)
    throw InvalidArgument("expected " + std::to_string(n) + " entries");
  int sum = 0;
  for (int e : entries) {
    if (e < 0) throw InvalidArgument("negative entry");
    sum += e;
  }
  if (sum != m) throw InvalidArgument("entries sum to " + std::to_string(sum) + ", not " + std::to_string(m));
  auto [lo, hi] = std::minmax_element(entries.begin(), entries.end());
  return *hi - *lo <= 1;
}

}  // namespace truncweyl
