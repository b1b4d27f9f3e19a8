#pragma once

// Partitions and the constructions on them used by truncated Weyl,
// Demazure and CV modules.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "truncweyl/error.hpp"
#include "truncweyl/rootsys.hpp"

namespace truncweyl {

class Partition {
 public:
  Partition() = default;

  // Parts must be positive and non-increasing.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be non-increasing");
    }
  }

  // The partition associated to an arbitrary finite sequence: sort, drop zeros.
  static Partition from_sequence(std::vector<int> seq) {
    for (int v : seq)
      if (v < 0) throw InvalidArgument("negative entry in sequence");
    std::sort(seq.begin(), seq.end(), std::greater<>());
    while (!seq.empty() && seq.back() == 0) seq.pop_back();
    return Partition(std::move(seq));
  }

  // (k^(a)): a copies of k.
  static Partition rectangle(int k, int a) {
    if (k <= 0 || a <= 0) return {};
    return Partition(std::vector<int>(a, k));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

  // "(2,1,1,1)"; the empty partition is "()".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  // "(2,1^(3))"
  std::string to_exponent_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      if (i) s += ",";
      s += std::to_string(parts_[i]);
      if (j - i > 1) s += "^(" + std::to_string(j - i) + ")";
      i = j;
    }
    return s + ")";
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Dominance order on partitions of the same size: a <= b iff every prefix
// sum of a is at most the matching prefix sum of b.
inline bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0, sb = 0;
  for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
    sa += i < a.length() ? a[i] : 0;
    sb += i < b.length() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

// All partitions of n, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_part = -1) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (max_part < 0 || max_part > n) max_part = n;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

// N in Z_{>0} or infinity. Untruncated means q = 0 and p = a.
class TruncationIndex {
 public:
  static TruncationIndex finite(int n) {
    if (n <= 0) throw InvalidArgument("truncation index must be positive, got " + std::to_string(n));
    return TruncationIndex(n);
  }
  static TruncationIndex infinite() { return TruncationIndex(std::nullopt); }

  bool is_infinite() const { return !n_.has_value(); }
  int value() const {
    if (!n_) throw InvalidArgument("truncation index is infinite");
    return *n_;
  }
  std::string to_string() const { return n_ ? std::to_string(*n_) : "inf"; }

 private:
  explicit TruncationIndex(std::optional<int> n) : n_(n) {}
  std::optional<int> n_;
};

struct EuclideanSplit {
  int q;
  int p;
};

// a = N q + p with 0 <= p < N.
inline EuclideanSplit euclidean_split(int a, TruncationIndex n) {
  if (a < 0) throw InvalidArgument("negative coroot value");
  if (n.is_infinite()) return {0, a};
  return {a / n.value(), a % n.value()};
}

// ((q+1)^(p), q^(N-p)) with a = N q + p.
inline Partition xi_parts(int a, TruncationIndex n) {
  auto [q, p] = euclidean_split(a, n);
  std::vector<int> parts(p, q + 1);
  if (!n.is_infinite() && q > 0) parts.insert(parts.end(), n.value() - p, q);
  return Partition(std::move(parts));
}

inline Partition xi_parts(int a, int n) { return xi_parts(a, TruncationIndex::finite(n)); }

// alpha -> xi_parts(lambda(h_alpha), N), indexed like rs.positive_roots().
inline std::vector<Partition> xi_family(const RootSystem& rs, const DominantWeight& lambda,
                                        TruncationIndex n) {
  std::vector<Partition> out;
  for (std::size_t a = 0; a < rs.num_positive_roots(); ++a)
    out.push_back(xi_parts(rs.pair(lambda.coords(), a), n));
  return out;
}

// ((l r)^(s-1), m) with a = (s-1) l r + m, 0 < m <= l r; empty when a = 0.
inline Partition xi_demazure(int level, int a, int lacing = 1) {
  if (level <= 0) throw InvalidArgument("Demazure level must be positive");
  if (lacing < 1 || lacing > 3) throw InvalidArgument("lacing exponent must be 1, 2 or 3");
  if (a < 0) throw InvalidArgument("negative weight");
  if (a == 0) return {};
  const int block = level * lacing;
  const int s_minus_1 = (a - 1) / block;
  const int m = a - s_minus_1 * block;
  std::vector<int> parts(s_minus_1, block);
  parts.push_back(m);
  return Partition(std::move(parts));
}

// Partition of (xi_1, ..., xi_{l-2}, xi_{l-1}+1, xi_l-1).
inline Partition xi_plus(const Partition& xi) {
  if (xi.length() < 2) throw InvalidArgument("xi_plus needs at least two parts");
  std::vector<int> seq = xi.parts();
  const std::size_t l = seq.size();
  seq[l - 2] += 1;
  seq[l - 1] -= 1;
  return Partition::from_sequence(std::move(seq));
}

// (xi_1, ..., xi_{l-2}, xi_{l-1} - xi_l).
inline Partition xi_minus(const Partition& xi) {
  if (xi.length() < 2) throw InvalidArgument("xi_minus needs at least two parts");
  std::vector<int> seq(xi.parts().begin(), xi.parts().end() - 1);
  seq.back() -= xi.smallest();
  return Partition::from_sequence(std::move(seq));
}

// xi with its largest part removed.
inline Partition xi_star(const Partition& xi) {
  if (xi.empty()) throw InvalidArgument("xi_star of the empty partition");
  return Partition(std::vector<int>(xi.parts().begin() + 1, xi.parts().end()));
}

// xi^l_{a,b} = ((l+1)^(a), l^(b)).
inline Partition xi_ab(int a, int b, int level) {
  if (a < 0 || b < 0 || level < 0) throw InvalidArgument("xi_ab parameters must be non-negative");
  std::vector<int> parts(a, level + 1);
  if (level > 0) parts.insert(parts.end(), b, level);
  return Partition(std::move(parts));
}

inline int lambda_ab(int a, int b, int level) { return level * (a + b) + a; }

// xi == xi_demazure(level, |xi|): all parts but the last equal level, last in (0, level].
inline bool is_demazure_shape(const Partition& xi, int level) {
  if (level <= 0) throw InvalidArgument("Demazure level must be positive");
  return xi == xi_demazure(level, xi.size(), 1);
}

}  // namespace truncweyl
