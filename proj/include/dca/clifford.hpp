#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dca/scalar.hpp"

namespace dca {

/// Basis blade of the split algebra on 2m generators, as a bitmask.
/// Generator order interleaves forward/backward per coordinate:
/// bit 2j is the forward generator of coordinate j+1, bit 2j+1 the backward
/// one. A set of bits stands for the product of its generators in ascending
/// bit order.
using BladeMask = std::uint32_t;

enum class Involution { Reversion, Conjugation, Main };

/// Element of the complex split Clifford algebra of dimension 2m: a sparse
/// combination of blades with Scalar coefficients. Same-coordinate forward/
/// backward generators pair to {f, b} = 1, so products of blades may split
/// into several terms; arithmetic keeps everything normal ordered.
class CliffordElement {
 public:
  CliffordElement() : m_(0) {}
  explicit CliffordElement(int m) : m_(m) { check_dim(m); }

  static CliffordElement zero(int m) { return CliffordElement(m); }
  static CliffordElement one(int m);
  static CliffordElement scalar(int m, Scalar s);
  /// Forward generator of coordinate j (1-based).
  static CliffordElement fwd(int j, int m);
  /// Backward generator of coordinate j.
  static CliffordElement bwd(int j, int m);
  /// e_j = fwd + bwd, squaring to +1.
  static CliffordElement e_vec(int j, int m);
  /// e_j^perp = fwd - bwd, squaring to -1.
  static CliffordElement e_perp(int j, int m);
  static CliffordElement blade(int m, BladeMask b, Scalar coeff = Scalar(1));

  int dim() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar scalar_part() const;  // coefficient of the empty blade
  CliffordElement grade_part(int k) const;

  CliffordElement involute(Involution kind) const;

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator*(const Scalar& s, const CliffordElement& a);
  friend CliffordElement operator-(const CliffordElement& a);

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  const std::map<BladeMask, Scalar>& terms() const { return terms_; }
  void add_term(BladeMask b, const Scalar& s);

  std::string str() const;

 private:
  static void check_dim(int m);
  int m_;
  std::map<BladeMask, Scalar> terms_;
};

/// Product of one blade with one generator (appended on the right), fully
/// normal ordered. Emits (blade, sign) pairs into out; a pair contraction
/// splits into two terms.
void blade_mul_generator(BladeMask a, int sign, int gen, int m,
                         std::vector<std::pair<BladeMask, int>>& out);

std::string blade_token(int gen);            // "1+", "1-", "2+", ...
int blade_token_parse(const std::string&);   // inverse of blade_token

}  // namespace dca
