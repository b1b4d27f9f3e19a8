#pragma once

// Characters of finite-dimensional g-modules: Weyl dimension formula,
// Freudenthal multiplicities, tensor product decomposition and graded
// characters of graded g-modules.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "truncweyl/bigint.hpp"
#include "truncweyl/laurent.hpp"
#include "truncweyl/rootsys.hpp"
#include "truncweyl/weight.hpp"

namespace truncweyl {

// Weight -> multiplicity; only positive multiplicities are stored.
class FormalCharacter {
 public:
  const std::map<Weight, BigInt>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  BigInt multiplicity(const Weight& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  void add(const Weight& w, const BigInt& m) {
    if (m == 0) return;
    auto [it, inserted] = entries_.try_emplace(w, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) entries_.erase(it);
    }
  }

  BigInt dimension() const {
    BigInt s = 0;
    for (const auto& [w, m] : entries_) s += m;
    return s;
  }

  bool operator==(const FormalCharacter&) const = default;

 private:
  std::map<Weight, BigInt> entries_;
};

// Graded g-module as degree -> (highest weight -> isotypic multiplicity).
class GradedCharacter {
 public:
  using Piece = std::map<DominantWeight, BigInt>;

  const std::map<int, Piece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }

  void add(int degree, const DominantWeight& w, const BigInt& m) {
    if (m == 0) return;
    Piece& piece = pieces_[degree];
    auto [it, inserted] = piece.try_emplace(w, m);
    if (!inserted) it->second += m;
    if (it->second == 0) piece.erase(it);
    if (piece.empty()) pieces_.erase(degree);
  }

  BigInt multiplicity(int degree, const DominantWeight& w) const {
    auto p = pieces_.find(degree);
    if (p == pieces_.end()) return 0;
    auto it = p->second.find(w);
    return it == p->second.end() ? BigInt(0) : it->second;
  }

  // tau_m: (tau_m V)[k] = V[k - m]
  GradedCharacter shifted(int m) const {
    GradedCharacter r;
    for (const auto& [k, piece] : pieces_) r.pieces_.emplace(k + m, piece);
    return r;
  }

  GradedCharacter scaled(const BigInt& c) const {
    GradedCharacter r;
    for (const auto& [k, piece] : pieces_)
      for (const auto& [w, m] : piece) r.add(k, w, m * c);
    return r;
  }

  GradedCharacter& operator+=(const GradedCharacter& o) {
    for (const auto& [k, piece] : o.pieces_)
      for (const auto& [w, m] : piece) add(k, w, m);
    return *this;
  }
  friend GradedCharacter operator+(GradedCharacter a, const GradedCharacter& b) { return a += b; }

  bool nonnegative() const {
    for (const auto& [k, piece] : pieces_)
      for (const auto& [w, m] : piece)
        if (m < 0) return false;
    return true;
  }

  int min_degree() const { return empty() ? 0 : pieces_.begin()->first; }
  int max_degree() const { return empty() ? 0 : pieces_.rbegin()->first; }

  bool operator==(const GradedCharacter&) const = default;

 private:
  std::map<int, Piece> pieces_;
};

namespace detail {

inline Weight root_as_weight(const RootSystem& rs, const Root& r) {
  Weight w(rs.rank(), 0);
  for (int j = 1; j <= rs.rank(); ++j) {
    if (r.coords[j - 1] == 0) continue;
    Weight a = rs.simple_root_weight(j);
    for (int i = 0; i < rs.rank(); ++i) w[i] += r.coords[j - 1] * a[i];
  }
  return w;
}

// (nu, alpha) for nu in fundamental coordinates and alpha in root coordinates.
inline long form(const RootSystem& rs, const Weight& nu, const std::vector<int>& root_coords) {
  long s = 0;
  for (int j = 0; j < rs.rank(); ++j) s += long(root_coords[j]) * rs.symmetrizer()[j] * nu[j];
  return s;
}

inline Weight to_dominant(const RootSystem& rs, Weight nu) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (nu[i] >= 0) continue;
      int c = nu[i];
      for (int k = 0; k < rs.rank(); ++k) nu[k] -= c * rs.cartan_matrix()[k][i];
      changed = true;
    }
  }
  return nu;
}

}  // namespace detail

inline const RootSystem& sl2() {
  static const RootSystem rs = build_root_system('A', 1);
  return rs;
}

inline DominantWeight sl2_weight(int m) { return DominantWeight(std::vector<int>{m}); }

// prod_{alpha>0} (lambda+rho)(h_alpha) / rho(h_alpha)
inline BigInt weyl_dim(const RootSystem& rs, const DominantWeight& lambda) {
  if (lambda.rank() != rs.rank()) throw InvalidArgument("weight rank does not match root system");
  BigInt num = 1, den = 1;
  for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
    const auto& row = rs.coroot_row(a);
    long rho = 0, shifted = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      rho += row[i];
      shifted += long(row[i]) * (lambda[i] + 1);
    }
    num *= shifted;
    den *= rho;
  }
  return num / den;
}

// Dominant weights mu <= lambda with their multiplicities in V(lambda),
// via Freudenthal's formula. Orbit invariance supplies non-dominant values.
inline std::map<DominantWeight, BigInt> dominant_character(const RootSystem& rs,
                                                           const DominantWeight& lambda) {
  if (lambda.rank() != rs.rank()) throw InvalidArgument("weight rank does not match root system");
  const int n = rs.rank();
  const auto& roots = rs.positive_roots();
  std::vector<Weight> root_w;
  for (const auto& r : roots) root_w.push_back(detail::root_as_weight(rs, r));

  // Every dominant mu < lambda is reachable by subtracting positive roots
  // through dominant weights (Stembridge). depth = root coordinates of lambda - mu.
  std::map<Weight, std::vector<int>> depth;
  std::deque<Weight> queue{lambda.coords()};
  depth[lambda.coords()] = std::vector<int>(n, 0);
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < roots.size(); ++a) {
      Weight nu = mu;
      for (int i = 0; i < n; ++i) nu[i] -= root_w[a][i];
      if (!is_dominant(nu) || depth.count(nu)) continue;
      std::vector<int> c = depth[mu];
      for (int i = 0; i < n; ++i) c[i] += roots[a].coords[i];
      depth[nu] = c;
      queue.push_back(nu);
    }
  }

  std::vector<Weight> order;
  for (const auto& [w, c] : depth) order.push_back(w);
  auto height = [&](const Weight& w) {
    const auto& c = depth.at(w);
    return std::accumulate(c.begin(), c.end(), 0);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](const Weight& a, const Weight& b) { return height(a) < height(b); });

  std::map<Weight, BigInt> mult;
  auto lookup = [&](const Weight& nu) -> BigInt {
    auto it = mult.find(detail::to_dominant(rs, nu));
    return it == mult.end() ? BigInt(0) : it->second;
  };

  Weight lr(n);
  for (int i = 0; i < n; ++i) lr[i] = lambda[i];
  for (const Weight& mu : order) {
    if (mu == lambda.coords()) {
      mult[mu] = 1;
      continue;
    }
    // (lambda - mu, lambda + mu + 2 rho)
    Weight s(n);
    for (int i = 0; i < n; ++i) s[i] = lambda[i] + mu[i] + 2;
    long lhs = detail::form(rs, s, depth.at(mu));
    BigInt rhs = 0;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      Weight nu = mu;
      for (int k = 1;; ++k) {
        for (int i = 0; i < n; ++i) nu[i] += root_w[a][i];
        BigInt m = lookup(nu);
        if (m == 0) break;
        rhs += m * detail::form(rs, nu, roots[a].coords);
      }
    }
    rhs *= 2;
    if (lhs <= 0 || rhs % lhs != 0) throw IdentityFalsified("Freudenthal recursion is not integral");
    mult[mu] = rhs / lhs;
  }

  std::map<DominantWeight, BigInt> out;
  for (auto& [w, m] : mult)
    if (m != 0) out.emplace(DominantWeight(w), m);
  return out;
}

inline std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight nu = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      if (nu[i] == 0) continue;
      Weight r = nu;
      for (int k = 0; k < rs.rank(); ++k) r[k] -= nu[i] * rs.cartan_matrix()[k][i];
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

inline FormalCharacter irreducible_character(const RootSystem& rs, const DominantWeight& lambda) {
  FormalCharacter ch;
  for (const auto& [mu, m] : dominant_character(rs, lambda))
    for (const Weight& w : weyl_orbit(rs, mu.coords())) ch.add(w, m);
  return ch;
}

// Multiplicity is constant along simple reflections.
inline bool is_weyl_invariant(const RootSystem& rs, const FormalCharacter& ch) {
  for (const auto& [w, m] : ch.entries())
    for (int i = 0; i < rs.rank(); ++i) {
      Weight r = w;
      for (int k = 0; k < rs.rank(); ++k) r[k] -= w[i] * rs.cartan_matrix()[k][i];
      if (ch.multiplicity(r) != m) return false;
    }
  return true;
}

// Linear functional mu(2 rho^vee): strictly increases along every positive root.
inline long dominance_height(const RootSystem& rs, const Weight& w) {
  long s = 0;
  for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) s += rs.pair(w, a);
  return s;
}

// V(lambda) (x) V(mu) as highest weight -> multiplicity. Multiplies the
// dominant part of the product character, then peels off the highest
// remaining weight (ties broken lexicographically) until nothing is left.
inline std::map<DominantWeight, BigInt> tensor_decompose(const RootSystem& rs,
                                                         const DominantWeight& lambda,
                                                         const DominantWeight& mu) {
  FormalCharacter a = irreducible_character(rs, lambda);
  FormalCharacter b = irreducible_character(rs, mu);
  std::map<Weight, BigInt> residual;
  for (const auto& [wa, ma] : a.entries())
    for (const auto& [wb, mb] : b.entries()) {
      Weight s(wa);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += wb[i];
      if (is_dominant(s)) residual[s] += ma * mb;
    }

  std::map<DominantWeight, BigInt> out;
  while (!residual.empty()) {
    auto top = residual.begin();
    long best = dominance_height(rs, top->first);
    for (auto it = std::next(residual.begin()); it != residual.end(); ++it) {
      long h = dominance_height(rs, it->first);
      if (h > best || (h == best && it->first > top->first)) {
        best = h;
        top = it;
      }
    }
    BigInt c = top->second;
    if (c <= 0) throw IdentityFalsified("negative residual multiplicity in tensor decomposition");
    DominantWeight nu(top->first);
    out[nu] += c;
    for (const auto& [w, m] : dominant_character(rs, nu)) {
      auto it = residual.find(w.coords());
      if (it == residual.end()) throw IdentityFalsified("tensor residual is missing a weight");
      it->second -= c * m;
      if (it->second == 0) residual.erase(it);
    }
  }
  return out;
}

inline LaurentPoly graded_dim_series(const RootSystem& rs, const GradedCharacter& gc) {
  LaurentPoly p;
  for (const auto& [k, piece] : gc.pieces())
    for (const auto& [w, m] : piece) p.add_term(k, m * weyl_dim(rs, w));
  return p;
}

inline BigInt total_dim(const RootSystem& rs, const GradedCharacter& gc) {
  return graded_dim_series(rs, gc).eval_at_one();
}

// sl2 shorthands.
inline LaurentPoly graded_dim_series(const GradedCharacter& gc) { return graded_dim_series(sl2(), gc); }
inline BigInt total_dim(const GradedCharacter& gc) { return total_dim(sl2(), gc); }

}  // namespace truncweyl
