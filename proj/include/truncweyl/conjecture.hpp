#pragma once

// sl2 instance of the fusion conjecture for truncated Weyl modules:
// W_N(m) is the fusion product of V(m_1), ..., V(m_N) for a maximal tuple
// (m_1, ..., m_N) of P^+(m, N), whenever N <= m.

#include <set>
#include <string>
#include <vector>

#include "truncweyl/cvengine.hpp"
#include "truncweyl/fusion.hpp"
#include "truncweyl/poset.hpp"

namespace truncweyl {

struct ConjectureReport {
  int m = 0, n = 0;
  WeightTuple maximal;    // orbit representative, decreasing
  Partition fused;        // its nonzero entries
  GradedCharacter oracle;     // fusion product
  GradedCharacter recursion;  // W_N(m) via the exact sequences
  bool equal = false;
  std::vector<std::string> diff;
};

inline std::vector<std::string> graded_diff(const GradedCharacter& a, const GradedCharacter& b,
                                            const std::string& name_a, const std::string& name_b) {
  std::set<std::pair<int, DominantWeight>> keys;
  for (const auto* gc : {&a, &b})
    for (const auto& [d, piece] : gc->pieces())
      for (const auto& [w, m] : piece) keys.emplace(d, w);
  std::vector<std::string> out;
  for (const auto& [d, w] : keys) {
    BigInt x = a.multiplicity(d, w), y = b.multiplicity(d, w);
    if (x != y)
      out.push_back("degree " + std::to_string(d) + ", V(" + w.to_string() + "): " + name_a + " " +
                    x.get_str() + ", " + name_b + " " + y.get_str());
  }
  return out;
}

inline ConjectureReport verify_conjecture_sl2(int m, int n, CvSession& s,
                                              unsigned long bound = kDefaultTupleBound) {
  if (n < 1 || m < n)
    throw InvalidArgument("out of regime: the conjecture is stated for 1 <= N <= m, got m=" +
                          std::to_string(m) + ", N=" + std::to_string(n));
  ConjectureReport r;
  r.m = m;
  r.n = n;
  auto orbits = maximal_elements(sl2(), sl2_weight(m), n, bound);
  if (orbits.size() != 1)
    throw IdentityFalsified("P^+(" + std::to_string(m) + "," + std::to_string(n) + ") has " +
                            std::to_string(orbits.size()) + " maximal orbits");
  r.maximal = orbits.front().representative;
  std::vector<int> parts;
  for (const auto& w : r.maximal.entries) parts.push_back(w[0]);
  r.fused = Partition::from_sequence(parts);
  r.oracle = fusion_graded_char(r.fused);
  r.recursion = s.graded_char(xi_parts(m, n));
  r.diff = graded_diff(r.oracle, r.recursion, "fusion", "W_N");
  r.equal = r.diff.empty();
  return r;
}

inline ConjectureReport verify_conjecture_sl2(int m, int n) {
  CvSession s;
  return verify_conjecture_sl2(m, n, s);
}

}  // namespace truncweyl
