#pragma once

#include <map>
#include <string>
#include <vector>

#include "truncweyl/bigint.hpp"
#include "truncweyl/error.hpp"

namespace truncweyl {

// Integer Laurent polynomial in the grading variable t. Zero coefficients
// are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const BigInt& c) { add_term(0, c); }  // NOLINT: constant polynomial
  LaurentPoly(int c) { add_term(0, BigInt(c)); }    // NOLINT

  static LaurentPoly monomial(long exponent, const BigInt& coeff = 1) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
  }

  const std::map<long, BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  long min_degree() const { return is_zero() ? 0 : coeffs_.begin()->first; }
  long max_degree() const { return is_zero() ? 0 : coeffs_.rbegin()->first; }

  BigInt eval_at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
  }

  bool nonnegative() const {
    for (const auto& [e, c] : coeffs_)
      if (c < 0) return false;
    return true;
  }

  void add_term(long e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  // Multiplication by t^m.
  LaurentPoly shifted(long m) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + m, c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

  // Human-readable form, ascending exponents: "1+t+2t^2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      BigInt a = abs(c);
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? "-" : "+";
      }
      first = false;
      if (e == 0) {
        s += a.get_str();
        continue;
      }
      if (a != 1) s += a.get_str();
      s += "t";
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::map<long, BigInt> coeffs_;
};

// Exact division of polynomials supported in non-negative degrees whose
// divisor has a unit leading coefficient. Throws if the remainder is nonzero.
inline LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const long dd = den.max_degree();
  const BigInt lead = den.coeff(dd);
  LaurentPoly rem = num, quot;
  while (!rem.is_zero() && rem.max_degree() >= dd) {
    long e = rem.max_degree();
    BigInt c = rem.coeff(e);
    if (c % lead != 0) throw IdentityFalsified("polynomial division is not exact");
    BigInt q = c / lead;
    LaurentPoly term = LaurentPoly::monomial(e - dd, q);
    quot += term;
    rem -= term * den;
  }
  if (!rem.is_zero()) throw IdentityFalsified("polynomial division leaves a remainder");
  return quot;
}

// Gaussian binomial via prod_{j<k} (1 - t^{m-j}) / (1 - t^{k-j}).
inline LaurentPoly qbinom_product(long m, long k) {
  if (k < 0 || k > m) return {};
  LaurentPoly num(1), den(1);
  for (long j = 0; j < k; ++j) {
    num = num * (LaurentPoly(1) - LaurentPoly::monomial(m - j));
    den = den * (LaurentPoly(1) - LaurentPoly::monomial(k - j));
  }
  return divide_exact(num, den);
}

// Gaussian binomial via [m,k] = [m-1,k-1] + t^k [m-1,k].
inline LaurentPoly qbinom_pascal(long m, long k) {
  if (k < 0 || k > m) return {};
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (long n = 1; n <= m; ++n) {
    std::vector<LaurentPoly> next(n + 1);
    next[0] = 1;
    next[n] = 1;
    for (long j = 1; j < n; ++j) next[j] = row[j - 1] + row[j].shifted(j);
    row = std::move(next);
  }
  return row[k];
}

inline bool qbinom_defined(long m, long k) { return 0 <= k && k <= m; }

// Zero outside 0 <= k <= m; check qbinom_defined to tell the cases apart.
inline LaurentPoly qbinom(long m, long k) {
  LaurentPoly p = qbinom_product(m, k);
  if (!(p == qbinom_pascal(m, k)))
    throw IdentityFalsified("q-binomial product and Pascal routes disagree");
  return p;
}

}  // namespace truncweyl
