#pragma once

// sl2 core: graded characters of CV, truncated Weyl and Demazure modules
// from the short exact sequence
//   0 -> tau_{(l-1) xi_l} CV(xi^-) -> CV(xi) -> CV(xi^+) -> 0,
// Demazure flag multiplicities, their closed forms, and the dimension
// identities for the truncation projections W_N(lambda) -> W_{N-1}(lambda).
//
// Weights are identified with lambda(h_1).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "truncweyl/charring.hpp"
#include "truncweyl/laurent.hpp"
#include "truncweyl/partition.hpp"

namespace truncweyl {

// [V : D(level, mu)](t) for every mu with a nonzero polynomial.
struct FlagMultiplicities {
  int level = 1;
  std::map<int, LaurentPoly> entries;

  LaurentPoly at(int mu) const {
    auto it = entries.find(mu);
    return it == entries.end() ? LaurentPoly() : it->second;
  }

  BigInt length() const {
    BigInt s = 0;
    for (const auto& [mu, p] : entries) s += p.eval_at_one();
    return s;
  }

  void add(int mu, const LaurentPoly& p) {
    if (p.is_zero()) return;
    LaurentPoly& slot = entries[mu];
    slot += p;
    if (slot.is_zero()) entries.erase(mu);
  }

  bool operator==(const FlagMultiplicities&) const = default;
};

enum class ModuleKind { CV, TruncatedWeyl, Weyl, Demazure };

struct ModuleLabel {
  ModuleKind kind = ModuleKind::CV;
  Partition xi;     // CV
  int lambda = 0;   // W_N, W, D
  int n = 1;        // W_N
  int level = 1;    // D
  int grade_shift = 0;

  static ModuleLabel cv(Partition xi) { return {ModuleKind::CV, std::move(xi)}; }
  static ModuleLabel truncated_weyl(int lambda, int n) {
    return {ModuleKind::TruncatedWeyl, {}, lambda, n};
  }
  static ModuleLabel weyl(int lambda) { return {ModuleKind::Weyl, {}, lambda}; }
  static ModuleLabel demazure(int level, int lambda) {
    return {ModuleKind::Demazure, {}, lambda, 1, level};
  }

  ModuleLabel shifted(int m) const {
    ModuleLabel l = *this;
    l.grade_shift += m;
    return l;
  }

  // W_N(lambda) = CV(xi_N^lambda), D(l, lambda) = CV(xi_{l,lambda}), W(lambda) = CV(1^lambda).
  Partition resolve() const {
    if (lambda < 0) throw InvalidArgument("negative highest weight");
    switch (kind) {
      case ModuleKind::CV: return xi;
      case ModuleKind::TruncatedWeyl: return xi_parts(lambda, n);
      case ModuleKind::Weyl: return xi_parts(lambda, TruncationIndex::infinite());
      case ModuleKind::Demazure: return xi_demazure(level, lambda, 1);
    }
    throw InvalidArgument("unknown module kind");
  }

  std::string to_string() const {
    std::string base;
    switch (kind) {
      case ModuleKind::CV: base = "CV" + xi.to_string(); break;
      case ModuleKind::TruncatedWeyl:
        base = "W_" + std::to_string(n) + "(" + std::to_string(lambda) + ")";
        break;
      case ModuleKind::Weyl: base = "W(" + std::to_string(lambda) + ")"; break;
      case ModuleKind::Demazure:
        base = "D(" + std::to_string(level) + "," + std::to_string(lambda) + ")";
        break;
    }
    return grade_shift ? "tau_" + std::to_string(grade_shift) + " " + base : base;
  }
};

// prod_j (xi_j + 1)
inline BigInt dim_cv(const Partition& xi) {
  BigInt d = 1;
  for (int p : xi.parts()) d *= p + 1;
  return d;
}

// delta_N(lambda) = (q+2)^p (q+1)^(N-p), lambda = N q + p.
inline BigInt dim_truncated(int lambda, int n) {
  auto [q, p] = euclidean_split(lambda, TruncationIndex::finite(n));
  return pow(BigInt(q + 2), p) * pow(BigInt(q + 1), n - p);
}

// (l-1) xi_l
inline int ses_shift(const Partition& xi) { return (xi.length() - 1) * xi.smallest(); }

// Memo tables for one evaluation session. Not shared between threads.
class CvSession {
 public:
  const GradedCharacter& graded_char(const Partition& xi) {
    if (auto it = chars_.find(xi); it != chars_.end()) return it->second;
    GradedCharacter gc;
    if (xi.length() <= 1) {
      gc.add(0, sl2_weight(xi.size()), 1);
    } else {
      const int shift = ses_shift(xi);
      if (shift < 0) throw IdentityFalsified("negative grade shift");
      gc = graded_char(xi_plus(xi));
      gc += graded_char(xi_minus(xi)).shifted(shift);
    }
    return chars_.emplace(xi, std::move(gc)).first->second;
  }

  const FlagMultiplicities& flags(const Partition& xi, int level) {
    if (level < xi.largest()) throw FlagInadmissible(level, xi.largest());
    auto key = std::make_pair(level, xi);
    if (auto it = flags_.find(key); it != flags_.end()) return it->second;
    FlagMultiplicities fm;
    fm.level = level;
    if (is_demazure_shape(xi, level)) {
      fm.add(xi.size(), LaurentPoly(1));
    } else {
      const Partition plus = xi_plus(xi), minus = xi_minus(xi);
      if (plus.largest() > level || minus.largest() > level)
        throw IdentityFalsified("flag recursion left the level-" + std::to_string(level) +
                                " admissible partitions at " + xi.to_string());
      const int shift = ses_shift(xi);
      for (const auto& [mu, p] : flags(plus, level).entries) fm.add(mu, p);
      for (const auto& [mu, p] : flags(minus, level).entries) fm.add(mu, p.shifted(shift));
    }
    return flags_.emplace(std::move(key), std::move(fm)).first->second;
  }

 private:
  std::map<Partition, GradedCharacter> chars_;
  std::map<std::pair<int, Partition>, FlagMultiplicities> flags_;
};

inline GradedCharacter graded_char_cv(const Partition& xi) {
  CvSession s;
  return s.graded_char(xi);
}

inline GradedCharacter graded_char_label(const ModuleLabel& label, CvSession& s) {
  if (label.grade_shift < 0) throw InvalidArgument("grade shift must be non-negative");
  return s.graded_char(label.resolve()).shifted(label.grade_shift);
}

inline GradedCharacter graded_char_label(const ModuleLabel& label) {
  CvSession s;
  return graded_char_label(label, s);
}

inline FlagMultiplicities flag_multiplicities(const Partition& xi, int level, CvSession& s) {
  return s.flags(xi, level);
}

inline FlagMultiplicities flag_multiplicities(const Partition& xi, int level) {
  CvSession s;
  return s.flags(xi, level);
}

inline BigInt flag_length(const Partition& xi, int level, CvSession& s) {
  return s.flags(xi, level).length();
}

inline BigInt flag_length(const Partition& xi, int level) {
  CvSession s;
  return flag_length(xi, level, s);
}

// sum_{mu, m} [coefficient of t^m] tau_m char D(level, mu)
inline GradedCharacter character_from_flag(const FlagMultiplicities& fm, CvSession& s) {
  GradedCharacter out;
  for (const auto& [mu, poly] : fm.entries)
    for (const auto& [m, c] : poly.coeffs())
      out += s.graded_char(xi_demazure(fm.level, mu, 1)).shifted(int(m)).scaled(c);
  return out;
}

// Level-2 closed forms.
//  finite N, N <= lambda < 2N: t^{k ceil(lambda/2)} [N - ceil(lambda/2), k]_t (zero past the top)
//  N = infinity:               t^{k ceil(lambda/2)} [floor(lambda/2), k]_t
inline LaurentPoly flag_mult_level2_closed(int lambda, TruncationIndex n, int k) {
  if (lambda < 0 || k < 0 || 2 * k > lambda)
    throw InvalidArgument("closed form needs 0 <= k <= lambda/2");
  const int up = (lambda + 1) / 2;
  if (n.is_infinite()) return qbinom(lambda / 2, k).shifted(long(k) * up);
  const int nn = n.value();
  if (nn < 2 || lambda < nn || lambda >= 2 * nn)
    throw InvalidArgument("closed form needs 1 < N <= lambda < 2N");
  if (k > nn - up) return {};
  return qbinom(nn - up, k).shifted(long(k) * up);
}

enum class DemazureVerdict { DemazureLevelQ, DemazureLevelQPlus1, NotDemazure };

struct DemazureClass {
  DemazureVerdict verdict;
  int level;           // Demazure level, or q+1 for the flag that witnesses "not Demazure"
  BigInt flag_length;  // length of the level-`level` flag of W_N(lambda)
};

inline const char* to_string(DemazureVerdict v) {
  switch (v) {
    case DemazureVerdict::DemazureLevelQ: return "Demazure at level q";
    case DemazureVerdict::DemazureLevelQPlus1: return "Demazure at level q+1";
    case DemazureVerdict::NotDemazure: return "not Demazure";
  }
  return "?";
}

// W_N(lambda) = D(q, lambda) if N | lambda, D(q+1, lambda) if p in {N-1, lambda};
// otherwise the level-(q+1) flag is computed and must have length > 1.
inline DemazureClass classify_demazure(int lambda, int n, CvSession& s) {
  auto [q, p] = euclidean_split(lambda, TruncationIndex::finite(n));
  const Partition xi = xi_parts(lambda, n);
  DemazureClass out{DemazureVerdict::NotDemazure, q + 1, 0};
  if (lambda > 0 && p == 0) {
    out = {DemazureVerdict::DemazureLevelQ, q, 0};
  } else if (p == n - 1 || p == lambda) {
    out = {DemazureVerdict::DemazureLevelQPlus1, q + 1, 0};
  }
  out.flag_length = flag_length(xi, out.level, s);
  if (out.verdict == DemazureVerdict::NotDemazure) {
    if (out.flag_length <= 1)
      throw IdentityFalsified("W_" + std::to_string(n) + "(" + std::to_string(lambda) +
                              ") has a length-1 flag but was classified as not Demazure");
  } else if (!is_demazure_shape(xi, out.level) || out.flag_length != 1) {
    throw IdentityFalsified(xi.to_string() + " is not of Demazure shape at level " +
                            std::to_string(out.level));
  }
  return out;
}

inline DemazureClass classify_demazure(int lambda, int n) {
  CvSession s;
  return classify_demazure(lambda, n, s);
}

struct KernelReport {
  bool holds;
  BigInt delta_n_lambda;          // delta_N(lambda)
  BigInt delta_n_lambda_minus_2;  // delta_N(lambda - 2)
  BigInt delta_n_minus_1_lambda;  // delta_{N-1}(lambda)
};

// tau_{N-1} W_N(lambda-2) -> ker(W_N(lambda) -> W_{N-1}(lambda)) is an
// isomorphism iff delta_N(lambda) - delta_N(lambda-2) = delta_{N-1}(lambda).
inline KernelReport kernel_is_truncated(int lambda, int n) {
  if (lambda < 2 || n < 2) throw InvalidArgument("kernel check needs lambda >= 2 and N >= 2");
  KernelReport r{false, dim_truncated(lambda, n), dim_truncated(lambda - 2, n),
                 dim_truncated(lambda, n - 1)};
  r.holds = r.delta_n_lambda - r.delta_n_lambda_minus_2 == r.delta_n_minus_1_lambda;
  return r;
}

struct SesReport {
  Partition xi, plus, minus;
  int shift = 0;
  BigInt dim, dim_plus, dim_minus;
  bool dims_ok = false;
  bool chars_ok = false;
  // Set when xi = xi_N^lambda with N <= lambda < 2N.
  std::optional<std::pair<int, int>> truncated;  // (lambda, N)
  bool truncated_ok = true;
  std::vector<std::string> diagnostics;

  bool ok() const { return dims_ok && chars_ok && truncated_ok; }
};

// Index M with xi^- = xi_M^{lambda-2} for xi = xi_N^lambda, N <= lambda < 2N.
inline int inc1_kernel_index(int lambda, int n) {
  const int p = lambda - n;
  return n - 2 + (p == n - 1 ? 1 : 0);
}

inline SesReport verify_ses(const Partition& xi, CvSession& s) {
  if (xi.length() < 2) throw InvalidArgument("exact sequence needs at least two parts");
  SesReport r;
  r.xi = xi;
  r.plus = xi_plus(xi);
  r.minus = xi_minus(xi);
  r.shift = ses_shift(xi);
  r.dim = dim_cv(xi);
  r.dim_plus = dim_cv(r.plus);
  r.dim_minus = dim_cv(r.minus);
  r.dims_ok = r.dim == r.dim_plus + r.dim_minus;
  if (!r.dims_ok)
    r.diagnostics.push_back("dim " + r.dim.get_str() + " != " + r.dim_plus.get_str() + " + " +
                            r.dim_minus.get_str());
  if (r.shift < 0) r.diagnostics.push_back("negative grade shift");

  const GradedCharacter& whole = s.graded_char(xi);
  GradedCharacter parts = s.graded_char(r.plus) + s.graded_char(r.minus).shifted(r.shift);
  r.chars_ok = whole == parts && total_dim(whole) == r.dim &&
               whole.multiplicity(0, sl2_weight(xi.size())) == 1;
  if (!r.chars_ok) r.diagnostics.push_back("graded characters are not additive");

  const int lambda = xi.size(), n = xi.length();
  if (xi == xi_parts(lambda, n) && n <= lambda && lambda < 2 * n) {
    r.truncated = std::make_pair(lambda, n);
    if (r.plus != xi_parts(lambda, n - 1)) {
      r.truncated_ok = false;
      r.diagnostics.push_back("xi^+ != xi_{N-1}^lambda");
    }
    const int m = inc1_kernel_index(lambda, n);
    Partition expected = lambda == 2 ? Partition() : xi_parts(lambda - 2, m);
    if (r.minus != expected) {
      r.truncated_ok = false;
      r.diagnostics.push_back("xi^- = " + r.minus.to_string() + " but W_" + std::to_string(m) +
                              "(" + std::to_string(lambda - 2) + ") has " + expected.to_string());
    }
    if (r.shift != n - 1) {
      r.truncated_ok = false;
      r.diagnostics.push_back("grade shift is not N-1");
    }
  }
  return r;
}

inline SesReport verify_ses(const Partition& xi) {
  CvSession s;
  return verify_ses(xi, s);
}

// gamma^l_{a,b}(mu, t) = [CV(xi^l_{a,b}) : D(l+1, mu)](t)
inline LaurentPoly gamma_ab(int a, int b, int level, int mu, CvSession& s) {
  if (mu < 0) return {};
  return s.flags(xi_ab(a, b, level), level + 1).at(mu);
}

// gamma^l_{a,b}(mu) = t^{(a/2)(lambda - mu)} gamma^l_{0,b}(mu - a(l+1)), lambda = lambda^l_{a,b};
// for b in {0,1} additionally gamma^l_{a,b}(mu) = delta_{lambda, mu}.
inline bool gamma_identity_check(int a, int b, int level, int mu, CvSession& s) {
  if (level < 1 || a < 0 || b < 0) throw InvalidArgument("gamma needs level >= 1 and a, b >= 0");
  const int lambda = lambda_ab(a, b, level);
  const LaurentPoly lhs = gamma_ab(a, b, level, mu, s);
  LaurentPoly rhs;
  const int rest = mu - a * (level + 1);
  if (rest >= 0 && (long(a) * (lambda - mu)) % 2 == 0)
    rhs = gamma_ab(0, b, level, rest, s).shifted(long(a) * (lambda - mu) / 2);
  bool ok = lhs == rhs;
  if (b <= 1 && a > 0) ok = ok && lhs == (mu == lambda ? LaurentPoly(1) : LaurentPoly());
  return ok;
}

inline bool gamma_identity_check(int a, int b, int level, int mu) {
  CvSession s;
  return gamma_identity_check(a, b, level, mu, s);
}

// [W_N(lambda) : D(q+1, mu)] = t^{(p/2)(lambda-mu)} [D(q, q(N-p)) : D(q+1, mu - p(q+1))], q >= 1.
inline bool truncated_flag_identity_check(int lambda, int n, int mu, CvSession& s) {
  auto [q, p] = euclidean_split(lambda, TruncationIndex::finite(n));
  if (q < 1) throw InvalidArgument("identity needs lambda >= N");
  const LaurentPoly lhs = mu < 0 ? LaurentPoly() : s.flags(xi_parts(lambda, n), q + 1).at(mu);
  LaurentPoly rhs;
  const int rest = mu - p * (q + 1);
  if (rest >= 0 && (long(p) * (lambda - mu)) % 2 == 0)
    rhs = s.flags(xi_demazure(q, q * (n - p), 1), q + 1).at(rest).shifted(long(p) * (lambda - mu) / 2);
  return lhs == rhs;
}

}  // namespace truncweyl
