#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "truncweyl/error.hpp"

namespace truncweyl {

// Integral weight in fundamental-weight coordinates: entry i is mu(h_i).
using Weight = std::vector<int>;

class DominantWeight {
 public:
  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> coords) : coords_(std::move(coords)) {
    for (int c : coords_)
      if (c < 0) throw InvalidArgument("dominant weight has a negative coordinate");
  }

  static DominantWeight zero(int rank) { return DominantWeight(std::vector<int>(rank, 0)); }

  // m * omega_node, node numbered from 1.
  static DominantWeight fundamental_multiple(int rank, int node, int m) {
    if (node < 1 || node > rank) throw InvalidArgument("node out of range");
    std::vector<int> c(rank, 0);
    c[node - 1] = m;
    return DominantWeight(std::move(c));
  }

  int rank() const { return static_cast<int>(coords_.size()); }
  int operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  // |mu| = sum_i mu(h_i)
  int norm() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }
  bool is_zero() const { return norm() == 0; }

  DominantWeight operator+(const DominantWeight& o) const {
    if (o.rank() != rank()) throw InvalidArgument("weight rank mismatch");
    std::vector<int> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return DominantWeight(std::move(c));
  }

  std::string to_string() const {
    if (coords_.size() == 1) return std::to_string(coords_[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

  auto operator<=>(const DominantWeight&) const = default;

 private:
  std::vector<int> coords_;
};

inline bool is_dominant(const Weight& w) {
  for (int c : w)
    if (c < 0) return false;
  return true;
}

}  // namespace truncweyl
