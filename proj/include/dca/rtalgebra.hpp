#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dca/clifford.hpp"
#include "dca/scalar.hpp"

namespace dca {

/// The two families of vector-valued operators: the coordinate operators
/// squaring to +1 (R family) and the reflection-twisted ones squaring to -1
/// (T family). R and T generators of any indices anticommute.
enum class Family { R, T };

/// Word in the R/T operator subalgebra: an ascending product of distinct
/// R generators followed by distinct T generators, as bitmasks.
struct RtWord {
  std::uint32_t r = 0;
  std::uint32_t t = 0;
  friend auto operator<=>(const RtWord&, const RtWord&) = default;
};

/// Parity of the reorder sign when merging ascending word a with ascending
/// word b (counts pairs x in a, y in b with x > y).
bool reorder_parity(std::uint32_t a, std::uint32_t b);

/// Element of the 4^m-dimensional subalgebra generated by the R and T
/// operators, with exact Scalar coefficients.
class RtElement {
 public:
  RtElement() : m_(0) {}
  explicit RtElement(int m);

  static RtElement zero(int m) { return RtElement(m); }
  static RtElement one(int m);
  static RtElement scalar(int m, Scalar s);
  static RtElement generator(Family f, int j, int m);  // j is 1-based
  static RtElement word(int m, RtWord w, Scalar coeff = Scalar(1));

  int dim() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar scalar_part() const;
  bool is_scalar() const;

  /// Projection onto words of total generator count k within one family
  /// grading (R and T bits both count).
  RtElement grade_part(int k) const;

  RtElement involute(Involution kind) const;

  /// Coefficient sum of squares; equals the scalar part of x * reversion(x)
  /// for group elements of either family.
  Scalar norm2_by_coefficients() const;

  /// The Clifford constant this element produces on the ground state:
  /// every R_j folds to e_j and every T_j to e_j^perp, in word order.
  CliffordElement ground_constant() const;

  RtElement& operator+=(const RtElement& o);
  RtElement& operator-=(const RtElement& o);
  friend RtElement operator+(RtElement a, const RtElement& b) { return a += b; }
  friend RtElement operator-(RtElement a, const RtElement& b) { return a -= b; }
  friend RtElement operator*(const RtElement& a, const RtElement& b);
  friend RtElement operator*(const Scalar& s, const RtElement& a);
  friend RtElement operator-(const RtElement& a);

  friend bool operator==(const RtElement& a, const RtElement& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  const std::map<RtWord, Scalar>& terms() const { return terms_; }
  void add_term(RtWord w, const Scalar& s);

  std::string str() const;

 private:
  int m_;
  std::map<RtWord, Scalar> terms_;
};

/// Vector in one generator family: sum of coords[j] * R_{j+1} (or T_{j+1}).
struct RtVector {
  Family family = Family::R;
  std::vector<Scalar> coords;

  RtVector() = default;
  RtVector(Family f, std::vector<Scalar> c) : family(f), coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  RtElement to_element() const;
  /// Sum of squared coordinates.
  Scalar norm2() const;
};

/// Inner product of two operators: (XY + YX) / 2.
RtElement sym_product(const RtElement& a, const RtElement& b);

}  // namespace dca
