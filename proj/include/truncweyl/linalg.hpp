#pragma once

// Fraction-free row echelon bookkeeping over Z, used to track spans of
// integer vectors exactly.

#include <map>
#include <vector>

#include "truncweyl/bigint.hpp"

namespace truncweyl {

using IntVector = std::vector<BigInt>;

// Divide by the content; zero vectors are left alone.
inline void make_primitive(IntVector& v) {
  BigInt g = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : v)
    if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Rows keyed by pivot column; each row is zero left of its pivot.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width = 0) : width_(width) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

  // Reduces v against the basis in place; v ends up zero iff it was in the span.
  void reduce(IntVector& v) const {
    BigInt g, mv, mr;
    for (const auto& [piv, row] : rows_) {
      if (v[piv] == 0) continue;
      mpz_gcd(g.get_mpz_t(), v[piv].get_mpz_t(), row[piv].get_mpz_t());
      mpz_divexact(mv.get_mpz_t(), row[piv].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(mr.get_mpz_t(), v[piv].get_mpz_t(), g.get_mpz_t());
      // Entries left of the pivot only get rescaled.
      for (std::size_t j = 0; j < width_; ++j) {
        if (row[j] == 0) {
          if (mv != 1 && v[j] != 0) v[j] *= mv;
        } else {
          v[j] = v[j] * mv - row[j] * mr;
        }
      }
      make_primitive(v);
    }
  }

  bool contains(IntVector v) const {
    reduce(v);
    return is_zero(v);
  }

  // Adds v to the span; returns false if it was already there.
  bool insert(IntVector v) {
    reduce(v);
    std::size_t piv = 0;
    while (piv < width_ && v[piv] == 0) ++piv;
    if (piv == width_) return false;
    rows_.emplace(piv, std::move(v));
    return true;
  }

 private:
  std::size_t width_;
  std::map<std::size_t, IntVector> rows_;
};

}  // namespace truncweyl
