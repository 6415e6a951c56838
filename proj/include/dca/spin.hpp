#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dca/rtalgebra.hpp"

namespace dca {

/// Square matrix of exact Scalars; rotation matrices produced by the group
/// homomorphism live here.
using SMatrix = std::vector<std::vector<Scalar>>;

SMatrix smat_identity(int n);
SMatrix smat_mul(const SMatrix& a, const SMatrix& b);
SMatrix smat_transpose(const SMatrix& a);
/// Exact determinant by cofactor expansion (intended for n <= 6).
Scalar smat_det(const SMatrix& a);

/// Group element of the spin group of one family: an even product of unit
/// vectors. The factor list is kept as the membership witness; the value is
/// their product in the R/T subalgebra.
class SpinElement {
 public:
  SpinElement() = default;

  /// Builds the product of the given vectors; requires an even count and
  /// unit norm (norm2 == 1) for each factor, verified exactly.
  static SpinElement from_factors(Family f, std::vector<RtVector> factors, int m);
  /// Wraps an element without a factor witness (torus elements in the
  /// epsilon-extended ring use this); only unit norm is verified.
  static SpinElement unchecked(Family f, RtElement value);

  Family family() const { return family_; }
  int dim() const { return value_.dim(); }
  const RtElement& value() const { return value_; }
  const std::vector<RtVector>& factors() const { return factors_; }

  /// Conjugation of the value (complex-conjugated, reversed, generators
  /// negated); for unit even products this is the group inverse.
  RtElement conjugated() const { return value_.involute(Involution::Conjugation); }

  SpinElement operator*(const SpinElement& o) const;
  SpinElement operator-() const;

 private:
  Family family_ = Family::R;
  RtElement value_;
  std::vector<RtVector> factors_;
};

/// Twisted conjugation x -> a x (main(a))^{-1} of a group element on a
/// grade-1 vector; the result is checked to be grade 1.
/// Throws when a is not invertible or the product a * reversion(a) fails to
/// be scalar (which signals a is not a product of vectors).
RtVector twisted_conjugation(const RtElement& a, const RtVector& x);

/// The rotation matrix of a spin element: column j holds the coordinates of
/// the twisted conjugation of the j-th basis vector. Exact orthogonality and
/// determinant 1 are verified before returning.
SMatrix rotation_matrix(const SpinElement& s);

/// Closed-form exponential of commuting bivectors: the product over all
/// pairs of cos(t_p/2) + sin(t_p/2) * G_b G_a for generators of the chosen
/// family, where p is the angle index of the pair. Index pairs must be
/// disjoint.
SpinElement exp_bivector(Family f, const std::vector<std::pair<int, std::pair<int, int>>>& pairs,
                         int m);

/// The standard maximal commuting element with angle p on the coordinate
/// pair (2p-1, 2p): for the R family the bivector is R_{2p} R_{2p-1}, for
/// the T family T_{2p-1} T_{2p} (the orientation that makes the isotropic
/// weight vectors come out with positive frequency).
SpinElement torus_element(Family f, int m);

/// Truncated-series exponential of an arbitrary bivector combination,
/// evaluated numerically; exploration fallback for non-commuting input.
/// Returns coefficients indexed by R-subset mask. Terms beyond the given
/// order are dropped; no exactness is claimed.
std::vector<double> exp_bivector_numeric(
    const std::vector<std::pair<double, std::pair<int, int>>>& blades, int m, int terms = 20);

/// Unit-norm inverse of a vector in its family: w/|w|^2 for the R family,
/// -w/|w|^2 for the T family.
RtVector vector_inverse(const RtVector& w);

}  // namespace dca
