#pragma once

// Brute-force sl2 fusion products. The tensor product of evaluation modules
// V_{a_1}(m_1) (x) ... (x) V_{a_l}(m_l) is built explicitly, the filtration
//   F^r = sum_{s <= r} U(g[t])[s] v
// by t-degree is computed with exact integer row reduction, and the graded
// character of gr is read off from weight-space dimensions.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "truncweyl/bigint.hpp"
#include "truncweyl/charring.hpp"
#include "truncweyl/error.hpp"
#include "truncweyl/linalg.hpp"
#include "truncweyl/partition.hpp"

namespace truncweyl {

enum class Generator { E, F, H };

inline const char* to_string(Generator g) {
  switch (g) {
    case Generator::E: return "e";
    case Generator::F: return "f";
    case Generator::H: return "h";
  }
  return "?";
}

struct EvalFactor {
  int m;       // highest weight
  Rational a;  // evaluation point
};

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Tensor product of evaluation modules in the basis v_{i_1} (x) ... (x) v_{i_l},
// where V(m) has basis v_0..v_m with
//   h v_i = (m-2i) v_i,  f v_i = v_{i+1},  e v_i = i(m-i+1) v_{i-1}.
// x (x) t^k acts by sum_j a_j^k x^{(j)}.
class MatrixModule {
 public:
  explicit MatrixModule(std::vector<EvalFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw InvalidArgument("tensor product of no factors");
    dim_ = 1;
    for (const auto& f : factors_) {
      if (f.m < 0) throw InvalidArgument("negative highest weight");
      strides_.push_back(dim_);
      dim_ *= f.m + 1;
    }
    digits_.assign(dim_, std::vector<int>(factors_.size()));
    weights_.assign(dim_, 0);
    for (int idx = 0; idx < dim_; ++idx) {
      int rest = idx, w = 0;
      for (std::size_t j = 0; j < factors_.size(); ++j) {
        digits_[idx][j] = rest % (factors_[j].m + 1);
        rest /= factors_[j].m + 1;
        w += factors_[j].m - 2 * digits_[idx][j];
      }
      weights_[idx] = w;
    }
  }

  int dim() const { return dim_; }
  const std::vector<EvalFactor>& factors() const { return factors_; }
  const std::vector<int>& weight_of_basis() const { return weights_; }
  const std::vector<int>& digits(int idx) const { return digits_[idx]; }
  int stride(std::size_t j) const { return strides_[j]; }

  int highest_weight() const {
    int s = 0;
    for (const auto& f : factors_) s += f.m;
    return s;
  }

  // v_0 (x) ... (x) v_0
  RationalVector cyclic_vector() const {
    RationalVector v(dim_, 0);
    v[0] = 1;
    return v;
  }

  bool distinct_parameters() const {
    std::set<Rational> seen;
    for (const auto& f : factors_)
      if (!seen.insert(f.a).second) return false;
    return true;
  }

  // Matrix coefficient of x on a single factor: x v_i = coeff * v_{target}.
  static bool factor_action(Generator x, int m, int i, int& target, long& coeff) {
    switch (x) {
      case Generator::H: target = i; coeff = m - 2 * i; return coeff != 0;
      case Generator::F: target = i + 1; coeff = 1; return i < m;
      case Generator::E: target = i - 1; coeff = long(i) * (m - i + 1); return i > 0;
    }
    return false;
  }

  RationalVector apply(Generator x, int k, const RationalVector& v) const {
    if (static_cast<int>(v.size()) != dim_) throw InvalidArgument("vector has wrong dimension");
    RationalVector out(dim_, 0);
    std::vector<Rational> power(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) power[j] = rational_power(factors_[j].a, k);
    for (int idx = 0; idx < dim_; ++idx) {
      if (v[idx] == 0) continue;
      for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (power[j] == 0) continue;
        int target;
        long c;
        if (!factor_action(x, factors_[j].m, digits_[idx][j], target, c)) continue;
        out[idx + (target - digits_[idx][j]) * strides_[j]] += v[idx] * power[j] * c;
      }
    }
    return out;
  }

  // Dense matrix of x (x) t^k; column c is the image of basis vector c.
  RationalMatrix action_matrix(Generator x, int k) const {
    RationalMatrix mat(dim_, RationalVector(dim_, 0));
    for (int c = 0; c < dim_; ++c) {
      RationalVector e(dim_, 0);
      e[c] = 1;
      RationalVector col = apply(x, k, e);
      for (int r = 0; r < dim_; ++r) mat[r][c] = col[r];
    }
    return mat;
  }

  // [x (x) t^a, y (x) t^b] = [x, y] (x) t^{a+b} on `samples` random basis vectors.
  bool check_commutation(int a, int b, int samples = 8, unsigned seed = 1) const {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, dim_ - 1);
    const Generator gens[] = {Generator::E, Generator::F, Generator::H};
    for (int s = 0; s < samples; ++s) {
      RationalVector v(dim_, 0);
      v[pick(rng)] = 1;
      for (Generator x : gens)
        for (Generator y : gens) {
          RationalVector lhs = apply(x, a, apply(y, b, v));
          RationalVector yx = apply(y, b, apply(x, a, v));
          for (int i = 0; i < dim_; ++i) lhs[i] -= yx[i];
          if (lhs != bracket(x, y, a + b, v)) return false;
        }
    }
    return true;
  }

  // h is diagonal with the recorded weights.
  bool h_is_diagonal() const {
    for (int c = 0; c < dim_; ++c) {
      RationalVector e(dim_, 0);
      e[c] = 1;
      RationalVector img = apply(Generator::H, 0, e);
      for (int r = 0; r < dim_; ++r)
        if (img[r] != (r == c ? Rational(weights_[c]) : Rational(0))) return false;
    }
    return true;
  }

 private:
  static Rational rational_power(const Rational& a, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= a;
    return r;
  }

  RationalVector bracket(Generator x, Generator y, int k, const RationalVector& v) const {
    using G = Generator;
    if (x == y) return RationalVector(dim_, 0);
    if (x == G::E && y == G::F) return apply(G::H, k, v);
    if (x == G::F && y == G::E) return negate(apply(G::H, k, v));
    if (x == G::H && y == G::E) return scale(apply(G::E, k, v), 2);
    if (x == G::E && y == G::H) return scale(apply(G::E, k, v), -2);
    if (x == G::H && y == G::F) return scale(apply(G::F, k, v), -2);
    return scale(apply(G::F, k, v), 2);  // [f, h] = 2f
  }
  static RationalVector scale(RationalVector v, int c) {
    for (auto& x : v) x *= c;
    return v;
  }
  static RationalVector negate(RationalVector v) { return scale(std::move(v), -1); }

  std::vector<EvalFactor> factors_;
  int dim_ = 0;
  std::vector<int> strides_;
  std::vector<std::vector<int>> digits_;
  std::vector<int> weights_;
};

inline MatrixModule evaluation_module(int m, const Rational& a) { return MatrixModule({{m, a}}); }

inline MatrixModule tensor_with_parameters(std::vector<EvalFactor> factors) {
  return MatrixModule(std::move(factors));
}

// The degree filtration of a MatrixModule generated from its cyclic vector.
class FusionFiltration {
 public:
  explicit FusionFiltration(MatrixModule module) : module_(std::move(module)) {
    // Spans are unchanged by rescaling x (x) t^k with D^k, so clear the
    // parameter denominators once and work over Z.
    BigInt lcm = 1;
    for (const auto& f : module_.factors()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), f.a.get_den_mpz_t());
    for (const auto& f : module_.factors()) scaled_params_.push_back(BigInt(f.a * lcm));
    std::set<BigInt> distinct(scaled_params_.begin(), scaled_params_.end());
    num_distinct_ = static_cast<int>(distinct.size());

    for (int idx = 0; idx < module_.dim(); ++idx) {
      int w = module_.weight_of_basis()[idx];
      position_.push_back(static_cast<int>(blocks_[w].size()));
      blocks_[w].push_back(idx);
    }
    run();
  }

  const MatrixModule& module() const { return module_; }
  const GradedCharacter& graded_character() const { return character_; }
  bool generated() const { return generated_; }
  int top_degree() const { return static_cast<int>(new_at_level_.size()) - 1; }

  // dim F^r, cumulative.
  std::vector<int> cumulative_dims() const {
    std::vector<int> out;
    int s = 0;
    for (const auto& level : new_at_level_) out.push_back(s += static_cast<int>(level.size()));
    return out;
  }

  // (x (x) t^k) v lies in F^{k-1}, i.e. vanishes in gr.
  bool kills_cyclic_vector(Generator x, int k) const {
    if (k < 1) throw InvalidArgument("degree must be positive");
    WeightVector v = apply({module_.highest_weight(), {BigInt(1)}}, x, k);
    if (v.coeffs.empty() || is_zero(v.coeffs)) return true;
    EchelonBasis basis(v.coeffs.size());
    for (int r = 0; r < k && r < static_cast<int>(new_at_level_.size()); ++r)
      for (const auto& u : new_at_level_[r])
        if (u.weight == v.weight) basis.insert(u.coeffs);
    return basis.contains(v.coeffs);
  }

 private:
  struct WeightVector {
    int weight;
    IntVector coeffs;  // dense on the weight block
  };

  WeightVector apply(const WeightVector& v, Generator x, int k) const {
    const int dw = x == Generator::E ? 2 : x == Generator::F ? -2 : 0;
    WeightVector out{v.weight + dw, {}};
    auto block = blocks_.find(out.weight);
    if (block == blocks_.end()) return out;
    out.coeffs.assign(block->second.size(), 0);
    const auto& src = blocks_.at(v.weight);
    const auto& factors = module_.factors();
    for (std::size_t p = 0; p < src.size(); ++p) {
      if (v.coeffs[p] == 0) continue;
      const int idx = src[p];
      const auto& dig = module_.digits(idx);
      for (std::size_t j = 0; j < factors.size(); ++j) {
        const BigInt& ak = power(j, k);
        if (ak == 0) continue;
        int target;
        long c;
        if (!MatrixModule::factor_action(x, factors[j].m, dig[j], target, c)) continue;
        const int dst = idx + (target - dig[j]) * module_.stride(j);
        out.coeffs[position_[dst]] += v.coeffs[p] * ak * c;
      }
    }
    make_primitive(out.coeffs);
    return out;
  }

  const BigInt& power(std::size_t j, int k) const {
    auto& row = powers_[j];
    if (row.empty()) row.push_back(1);
    while (static_cast<int>(row.size()) <= k) row.push_back(row.back() * scaled_params_[j]);
    return row[k];
  }

  bool try_add(WeightVector v, std::vector<WeightVector>& level) {
    if (v.coeffs.empty()) return false;
    auto it = spans_.find(v.weight);
    if (it == spans_.end()) it = spans_.emplace(v.weight, EchelonBasis(v.coeffs.size())).first;
    if (!it->second.insert(v.coeffs)) return false;
    level.push_back(std::move(v));
    ++rank_;
    return true;
  }

  // Close the vectors added at this level under e and f in degree 0.
  void close_under_g(std::vector<WeightVector>& level, std::size_t from) {
    for (std::size_t i = from; i < level.size(); ++i)
      for (Generator x : {Generator::E, Generator::F}) {
        WeightVector u = apply(level[i], x, 0);
        try_add(std::move(u), level);
      }
  }

  void run() {
    std::vector<WeightVector> level0;
    try_add({module_.highest_weight(), {BigInt(1)}}, level0);
    close_under_g(level0, 0);
    new_at_level_.push_back(std::move(level0));
    record_level();

    // F^r = F^{r-1} + sum_{k=1}^{r} (g (x) t^k) F^{r-k}, closed under g.
    // Applying t^k to F^{r-k-1} only reproduces F^{r-1}, so the new vectors
    // of F^{r-k} suffice. Operators with k >= #distinct parameters are
    // combinations of lower ones, so that many empty levels in a row means
    // the filtration has stopped.
    int empty_run = 0;
    while (rank_ < module_.dim()) {
      const int r = static_cast<int>(new_at_level_.size());
      std::vector<WeightVector> level;
      for (int k = 1; k <= std::min(r, num_distinct_ - 1); ++k)
        for (const auto& w : new_at_level_[r - k])
          for (Generator x : {Generator::E, Generator::F, Generator::H}) try_add(apply(w, x, k), level);
      close_under_g(level, 0);
      empty_run = level.empty() ? empty_run + 1 : 0;
      new_at_level_.push_back(std::move(level));
      record_level();
      if (empty_run >= std::max(1, num_distinct_ - 1)) break;
    }
    generated_ = rank_ == module_.dim();
    while (!new_at_level_.empty() && new_at_level_.back().empty() && new_at_level_.size() > 1)
      new_at_level_.pop_back();
  }

  // gr_r has weight dimensions d(mu); V(mu) occurs d(mu) - d(mu+2) times.
  void record_level() {
    const int r = static_cast<int>(new_at_level_.size()) - 1;
    std::map<int, int> d;
    for (const auto& v : new_at_level_[r]) ++d[v.weight];
    for (const auto& [w, c] : d) {
      auto neg = d.find(-w);
      if (neg == d.end() || neg->second != c)
        throw IdentityFalsified("filtration piece " + std::to_string(r) + " is not a g-module");
    }
    for (const auto& [w, c] : d) {
      if (w < 0) continue;
      auto above = d.find(w + 2);
      int mult = c - (above == d.end() ? 0 : above->second);
      if (mult < 0) throw IdentityFalsified("negative isotypic multiplicity in gr");
      character_.add(r, sl2_weight(w), mult);
    }
  }

  MatrixModule module_;
  std::vector<BigInt> scaled_params_;
  int num_distinct_ = 1;
  mutable std::vector<std::vector<BigInt>> powers_ = std::vector<std::vector<BigInt>>(module_.factors().size());
  std::map<int, std::vector<int>> blocks_;  // weight -> basis indices
  std::vector<int> position_;               // basis index -> position in its block
  std::map<int, EchelonBasis> spans_;
  std::vector<std::vector<WeightVector>> new_at_level_;
  int rank_ = 0;
  bool generated_ = false;
  GradedCharacter character_;
};

struct FusionResult {
  GradedCharacter character;
  bool distinct_parameters;
  bool generated;
};

inline std::vector<Rational> default_parameters(int count) {
  std::vector<Rational> out;
  for (int i = 0; i < count; ++i) out.emplace_back(i);
  return out;
}

inline std::vector<EvalFactor> factors_for(const Partition& xi, const std::vector<Rational>& params) {
  if (static_cast<int>(params.size()) != xi.length())
    throw InvalidArgument("need " + std::to_string(xi.length()) + " parameters, got " +
                          std::to_string(params.size()));
  std::vector<EvalFactor> out;
  for (int j = 0; j < xi.length(); ++j) out.push_back({xi[j], params[j]});
  return out;
}

inline FusionResult fusion_product(const std::vector<EvalFactor>& factors) {
  MatrixModule mod(factors);
  FusionFiltration filt(mod);
  return {filt.graded_character(), mod.distinct_parameters(), filt.generated()};
}

// Graded character of V_{a_1}(m_1) * ... * V_{a_l}(m_l).
inline GradedCharacter fusion_graded_char(const std::vector<EvalFactor>& factors) {
  return fusion_product(factors).character;
}

// Fusion of V(xi_1), ..., V(xi_l); the empty partition gives the trivial module.
inline GradedCharacter fusion_graded_char(const Partition& xi, const std::vector<Rational>& params) {
  if (xi.empty()) {
    GradedCharacter gc;
    gc.add(0, sl2_weight(0), 1);
    return gc;
  }
  return fusion_graded_char(factors_for(xi, params));
}

inline GradedCharacter fusion_graded_char(const Partition& xi) {
  return fusion_graded_char(xi, default_parameters(xi.length()));
}

// Every parameter choice yields the same graded character.
inline bool parameter_independence_check(const Partition& xi,
                                         const std::vector<std::vector<Rational>>& choices) {
  if (choices.empty()) throw InvalidArgument("no parameter choices");
  std::optional<GradedCharacter> first;
  for (const auto& params : choices) {
    if (static_cast<int>(params.size()) != xi.length())
      throw InvalidArgument("parameter tuple has the wrong length");
    if (std::set<Rational>(params.begin(), params.end()).size() != params.size())
      throw InvalidArgument("parameters in a tuple must be distinct");
    GradedCharacter gc = fusion_graded_char(xi, params);
    if (!first) first = gc;
    else if (!(gc == *first)) return false;
  }
  return true;
}

}  // namespace truncweyl
