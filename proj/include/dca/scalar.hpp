#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dca/rational.hpp"

namespace dca {

/// Monomial in the half-angle indeterminates: for every angle index p it
/// carries a power of c_p = cos(t_p/2) and of s_p = sin(t_p/2), plus an
/// optional factor of the square-zero infinitesimal eps.
///
/// Canonical form: s-exponents are 0 or 1 (s^2 is always rewritten to
/// 1 - c^2 by Scalar arithmetic), the eps exponent is 0 or 1, and trailing
/// angle slots with zero exponents are trimmed.
class TrigWord {
 public:
  TrigWord() = default;

  static TrigWord one() { return {}; }
  static TrigWord cos_half(int p);
  static TrigWord sin_half(int p);
  static TrigWord epsilon();

  bool is_one() const { return !eps_ && cos_.empty(); }
  bool has_epsilon() const { return eps_; }
  int angle_count() const { return static_cast<int>(cos_.size()); }
  std::uint32_t cos_exp(int p) const;  // p is 1-based
  std::uint32_t sin_exp(int p) const;

  friend bool operator==(const TrigWord& a, const TrigWord& b) = default;
  friend bool operator<(const TrigWord& a, const TrigWord& b);

  std::string str() const;

 private:
  friend class Scalar;
  std::vector<std::uint32_t> cos_;  // exponent of c_p at slot p-1
  std::vector<std::uint8_t> sin_;   // exponent of s_p, 0 or 1 in canonical form
  bool eps_ = false;
  void trim();
};

/// Element of the exact coefficient ring: a finite sum of TrigWord monomials
/// with GaussianRational coefficients. All arithmetic keeps terms canonical
/// (reductions s^2 -> 1 - c^2 and eps^2 -> 0 applied eagerly, zero terms
/// dropped), so operator== is exact ring equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n);  // NOLINT: implicit by design
  Scalar(GaussianRational q);
  Scalar(Rational q) : Scalar(GaussianRational(std::move(q))) {}

  static Scalar i() { return Scalar(GaussianRational::i()); }
  static Scalar cos_half(int p);
  static Scalar sin_half(int p);
  static Scalar epsilon();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the value lies in the Gaussian rationals (no trig, no eps).
  bool is_constant() const;
  GaussianRational constant_value() const;  // throws unless is_constant()
  bool has_epsilon() const;

  Scalar conj() const;  // complex conjugation of coefficients
  /// Splits x + eps*y into x (epsilon_free) and y (epsilon_coefficient).
  Scalar epsilon_free_part() const;
  Scalar epsilon_coefficient() const;

  /// Multiplicative inverse; defined only for nonzero constants.
  Scalar inverse() const;

  /// Numeric evaluation with c_p = cos(t_p/2), s_p = sin(t_p/2).
  /// Throws if the value carries an eps term or needs more angles than given.
  std::complex<double> eval(std::span<const double> angles) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  const std::map<TrigWord, GaussianRational>& terms() const { return terms_; }
  void add_term(const TrigWord& w, const GaussianRational& c);  // canonicalizing

  std::string str() const;

 private:
  static void mul_words(const TrigWord& a, const TrigWord& b, const GaussianRational& coeff,
                        Scalar& out);
  std::map<TrigWord, GaussianRational> terms_;
};

/// cos(t_p) = 2 c_p^2 - 1 and sin(t_p) = 2 c_p s_p, as ring elements.
Scalar cos_t(int p);
Scalar sin_t(int p);
/// exp(i k t_p) expanded in the half-angle indeterminates, any integer k.
Scalar exp_ikt(int k, int p);
/// exp(i t_p / 2) = c_p + i s_p, the half-integer companion.
Scalar exp_half_it(int p);
/// cos(k t_p) and sin(k t_p) as ring elements.
Scalar cos_kt(int k, int p);
Scalar sin_kt(int k, int p);

}  // namespace dca
