#pragma once

// Finite-type root systems built by string closure from the Cartan matrix.
//
// Nodes follow Bourbaki numbering and are 1-based wherever an API takes a
// node number (so B2 has alpha_2 short and C_n has alpha_n long). Weights
// are written in fundamental-weight coordinates, roots in simple-root
// coordinates.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "truncweyl/error.hpp"
#include "truncweyl/weight.hpp"

namespace truncweyl {

using IntMatrix = std::vector<std::vector<int>>;

struct Root {
  std::vector<int> coords;  // a_i with root = sum_i a_i alpha_i
  bool is_long = true;
  bool is_short = true;

  int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }
  bool operator==(const Root& o) const { return coords == o.coords; }
};

class RootSystem;
RootSystem build_root_system(char series, int rank);

class RootSystem {
 public:
  char series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, series_) + std::to_string(rank_); }

  // cartan_matrix()[i][j] = alpha_j(h_i), i.e. <alpha_j, alpha_i^vee>.
  const IntMatrix& cartan_matrix() const { return cartan_; }
  // Gram matrix (alpha_i, alpha_j) normalised so short roots have length^2 2.
  const IntMatrix& gram_matrix() const { return gram_; }
  // d_i = (alpha_i, alpha_i)/2, relatively prime.
  const std::vector<int>& symmetrizer() const { return d_; }

  // Sorted by height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return roots_; }
  std::size_t num_positive_roots() const { return roots_.size(); }

  const Root& simple_root(int node) const { return roots_.at(index_of_simple(node)); }

  std::size_t index_of(const Root& r) const {
    auto it = index_.find(r.coords);
    if (it == index_.end()) throw InvalidArgument("not a positive root of " + name());
    return it->second;
  }
  bool contains(const std::vector<int>& coords) const { return index_.count(coords) != 0; }

  // omega_node(h_alpha) for the positive root with the given index.
  int coroot_eval(int node, std::size_t root_index) const {
    check_node(node);
    return coroot_eval_[root_index][node - 1];
  }
  const std::vector<int>& coroot_row(std::size_t root_index) const {
    return coroot_eval_[root_index];
  }

  // mu(h_alpha) for an arbitrary integral weight.
  int pair(const Weight& mu, std::size_t root_index) const {
    if (static_cast<int>(mu.size()) != rank_)
      throw InvalidArgument("weight has " + std::to_string(mu.size()) +
                            " coordinates, rank is " + std::to_string(rank_));
    const auto& row = coroot_eval_[root_index];
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += mu[i] * row[i];
    return s;
  }

  // Simple root alpha_node expressed in fundamental-weight coordinates.
  Weight simple_root_weight(int node) const {
    check_node(node);
    Weight w(rank_);
    for (int i = 0; i < rank_; ++i) w[i] = cartan_[i][node - 1];
    return w;
  }

  int lacing_number() const { return lacing_; }
  bool simply_laced() const { return lacing_ == 1; }

  const Root& highest_root() const { return roots_[highest_]; }
  const Root& highest_short_root() const { return roots_[highest_short_]; }

  void check_node(int node) const {
    if (node < 1 || node > rank_)
      throw InvalidArgument("node " + std::to_string(node) + " out of range 1.." +
                            std::to_string(rank_));
  }

 private:
  friend RootSystem build_root_system(char, int);

  std::size_t index_of_simple(int node) const {
    check_node(node);
    std::vector<int> c(rank_, 0);
    c[node - 1] = 1;
    return index_.at(c);
  }

  char series_ = 'A';
  int rank_ = 0;
  IntMatrix cartan_;
  IntMatrix gram_;
  std::vector<int> d_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::vector<int>> coroot_eval_;  // [root][node-1]
  int lacing_ = 1;
  std::size_t highest_ = 0;
  std::size_t highest_short_ = 0;
};

namespace detail {

inline bool valid_type(char s, int n) {
  switch (s) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

inline IntMatrix bourbaki_gram(char s, int n) {
  IntMatrix g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  for (int i = 0; i < n; ++i) g[i][i] = 2;
  switch (s) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) g[i][i] = 4;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      g[0][0] = g[1][1] = 4;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

}  // namespace detail

inline RootSystem build_root_system(char series, int rank) {
  if (!detail::valid_type(series, rank))
    throw InvalidType(std::string("unsupported Cartan type ") + series + std::to_string(rank));

  RootSystem rs;
  rs.series_ = series;
  rs.rank_ = rank;
  rs.gram_ = detail::bourbaki_gram(series, rank);
  rs.cartan_.assign(rank, std::vector<int>(rank));
  rs.d_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    rs.d_[i] = rs.gram_[i][i] / 2;
    for (int j = 0; j < rank; ++j) rs.cartan_[i][j] = 2 * rs.gram_[i][j] / rs.gram_[i][i];
  }

  // Closure: beta + alpha_i is a root iff the alpha_i-string through beta
  // extends upward, i.e. p - <beta, alpha_i^vee> > 0.
  std::vector<std::vector<int>> found;
  std::map<std::vector<int>, bool> seen;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    found.push_back(c);
    seen[c] = true;
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    const std::vector<int> beta = found[k];
    for (int i = 0; i < rank; ++i) {
      bool is_simple_i = beta[i] == 1 && std::accumulate(beta.begin(), beta.end(), 0) == 1;
      if (is_simple_i) continue;
      int p = 0;
      for (std::vector<int> down = beta;;) {
        down[i] -= 1;
        if (down[i] < 0 || !seen.count(down)) break;
        ++p;
      }
      int pairing = 0;
      for (int j = 0; j < rank; ++j) pairing += beta[j] * rs.cartan_[i][j];
      if (p - pairing > 0) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          seen[up] = true;
          found.push_back(up);
        }
      }
    }
  }

  auto length2 = [&](const std::vector<int>& c) {
    int s = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s += c[i] * c[j] * rs.gram_[i][j];
    return s;
  };
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a < b;
  });
  int max_len = 0, min_len = 1 << 30;
  for (const auto& c : found) {
    max_len = std::max(max_len, length2(c));
    min_len = std::min(min_len, length2(c));
  }
  rs.lacing_ = max_len / min_len;

  for (const auto& c : found) {
    Root r;
    r.coords = c;
    int len = length2(c);
    r.is_long = len == max_len;
    r.is_short = len == min_len;
    rs.index_[c] = rs.roots_.size();
    std::vector<int> row(rank);
    for (int i = 0; i < rank; ++i) {
      int num = 2 * c[i] * rs.d_[i];
      if (num % len != 0) throw Error("non-integral coroot evaluation");
      row[i] = num / len;
    }
    rs.coroot_eval_.push_back(std::move(row));
    rs.roots_.push_back(std::move(r));
  }
  rs.highest_ = rs.roots_.size() - 1;
  for (std::size_t k = 0; k < rs.roots_.size(); ++k)
    if (rs.roots_[k].is_short) rs.highest_short_ = k;
  return rs;
}

// ht_i(eta) = a_i for eta = sum a_i alpha_i; node is 1-based.
inline int ht_i(const RootSystem& rs, const Root& root, int node) {
  rs.check_node(node);
  rs.index_of(root);
  return root.coords[node - 1];
}

inline int ht(const Root& root) { return root.height(); }

inline const Root& highest_root(const RootSystem& rs) { return rs.highest_root(); }
inline const Root& highest_short_root(const RootSystem& rs) { return rs.highest_short_root(); }

// lambda(h_alpha)
inline int eval_on_coroot(const RootSystem& rs, const DominantWeight& lambda, const Root& alpha) {
  return rs.pair(lambda.coords(), rs.index_of(alpha));
}

// r^vee_alpha: 1 on long roots, the lacing number on short ones.
inline int lacing_exponent(const RootSystem& rs, const Root& alpha) {
  const Root& r = rs.positive_roots()[rs.index_of(alpha)];
  return r.is_long ? 1 : rs.lacing_number();
}

// Nodes i with ht_i(theta) = 1.
inline std::vector<int> small_nodes(const RootSystem& rs) {
  std::vector<int> out;
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.highest_root().coords[i - 1] == 1) out.push_back(i);
  return out;
}

}  // namespace truncweyl
