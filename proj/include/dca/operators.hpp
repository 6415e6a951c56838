#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dca/multiindex.hpp"
#include "dca/rtalgebra.hpp"
#include "dca/scalar.hpp"

namespace dca {

/// Normal-ordered word in the operator algebra: coordinate multiplication
/// operators first (ascending index, packed exponents), then coordinate
/// derivatives, then the R word, then the T word. R/T flags are single bits
/// since their squares fold to +1 / -1.
struct OpWord {
  std::uint64_t xi = 0;
  std::uint64_t del = 0;
  std::uint32_t r = 0;
  std::uint32_t t = 0;
  friend auto operator<=>(const OpWord&, const OpWord&) = default;
  bool is_identity() const { return xi == 0 && del == 0 && r == 0 && t == 0; }
};

/// Sparse combination of normal-ordered words with Scalar coefficients.
/// Multiplication rewrites products back to normal order using the exchange
/// relations: same-index derivative/coordinate pairs obey [d_j, x_j] = 1,
/// all distinct-index pairs among coordinates and derivatives anticommute,
/// R_j and T_j commute with the index-j coordinate operators and
/// anticommute with all others, R_j^2 = 1, T_j^2 = -1, and R/T generators
/// mutually anticommute.
class OperatorElement {
 public:
  OperatorElement() : m_(0) {}
  explicit OperatorElement(int m);

  static OperatorElement zero(int m) { return OperatorElement(m); }
  static OperatorElement identity(int m);
  static OperatorElement scalar(int m, Scalar s);
  static OperatorElement xi(int j, int m);   // coordinate operator, 1-based
  static OperatorElement del(int j, int m);  // coordinate derivative
  static OperatorElement r(int j, int m);
  static OperatorElement t(int j, int m);
  static OperatorElement dirac(int m);       // sum of all derivatives
  static OperatorElement vector_variable(int m);  // sum of all coordinates
  static OperatorElement from_rt(const RtElement& a);
  static OperatorElement word(int m, OpWord w, Scalar coeff = Scalar(1));

  int dim() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when no word carries R or T flags.
  bool is_scalar_operator() const;

  OperatorElement& operator+=(const OperatorElement& o);
  OperatorElement& operator-=(const OperatorElement& o);
  friend OperatorElement operator+(OperatorElement a, const OperatorElement& b) { return a += b; }
  friend OperatorElement operator-(OperatorElement a, const OperatorElement& b) { return a -= b; }
  friend OperatorElement operator*(const OperatorElement& a, const OperatorElement& b);
  friend OperatorElement operator*(const Scalar& s, const OperatorElement& a);
  friend OperatorElement operator-(const OperatorElement& a);

  OperatorElement pow(int k) const;

  friend bool operator==(const OperatorElement& a, const OperatorElement& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  const std::map<OpWord, Scalar>& terms() const { return terms_; }
  void add_term(const OpWord& w, const Scalar& s);

  std::string str() const;

 private:
  int m_;
  std::map<OpWord, Scalar> terms_;
};

/// Pushes one generator onto the right end of a normal-ordered word and
/// restores normal order. Emits up to two (word, integer coefficient)
/// branches: moving a coordinate operator through the matching derivative
/// power contributes the extra contraction term.
void word_push_xi(const OpWord& w, long c, int j, std::vector<std::pair<OpWord, long>>& out);
void word_push_del(const OpWord& w, long c, int j, std::vector<std::pair<OpWord, long>>& out);
void word_push_r(const OpWord& w, long c, int j, std::vector<std::pair<OpWord, long>>& out);
void word_push_t(const OpWord& w, long c, int j, std::vector<std::pair<OpWord, long>>& out);

/// Appends the whole word `right` after `left`; accumulates coeff * branch
/// into `acc`.
void word_append(std::map<OpWord, Scalar>& acc, const OpWord& left, const Scalar& coeff,
                 const OpWord& right, int m);

}  // namespace dca
