#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dca/actions.hpp"
#include "dca/linalg.hpp"
#include "dca/states.hpp"

namespace dca {

Integer binomial(int n, int k);

/// Basis state of the commuting-variable polynomial space: the product of
/// (x_j R_j)^{alpha_j} over j, applied to the ground state.
PolyState commuting_monomial(int m, std::uint64_t alpha);
/// All such states of total degree k, with their multi-indices, in
/// lexicographic order.
std::vector<std::pair<std::uint64_t, PolyState>> commuting_basis(int m, int k);

/// Coordinates of a homogeneous state in the degree-k commuting basis;
/// throws when the state lies outside that span.
QVector commuting_coords(const PolyState& f, int k);

/// Matrix of the Laplacian from the degree-k commuting basis to the
/// degree-(k-2) one.
QMatrix laplace_matrix(int m, int k);

/// Harmonic/radial splitting within the commuting space: returns (h, q)
/// with f = h + xi^2 q, h harmonic, q of degree k-2; exact and unique.
std::pair<PolyState, PolyState> fischer_split(const PolyState& f);

/// Harmonic/radial splitting of an arbitrary homogeneous state (no
/// commuting-basis restriction); coefficients ride along blade-wise.
std::pair<PolyState, PolyState> harmonic_split(const PolyState& f);

struct HarmonicDim {
  int formula;  // dim P_k - dim P_{k-2} of the commuting spaces
  int kernel_rank;
};

/// Dimension of the harmonic subspace of the degree-k commuting space, both
/// by the binomial formula and as the exact kernel dimension of the
/// Laplacian matrix. Throws if the two disagree.
HarmonicDim harmonic_dim(int m, int k);

/// Isotropic generator frame: f[j], fd[j] built from R pairs and g[j],
/// gd[j] from T pairs, n = floor(m/2) of each, with anticommutators
/// {f_j, fd_k} = {g_j, gd_k} = delta_jk and all other pairs zero.
struct IsotropicFrame {
  int m = 0;
  int n = 0;
  std::vector<RtElement> f, fd, g, gd;
};

IsotropicFrame isotropic_frame(int m);

/// Product of the frame projectors f_j fd_j g_j gd_j over all pairs; for
/// odd m the averaged factor (1 + R_m T_m)/2 is appended, which keeps the
/// result idempotent. I * I == I is verified.
RtElement primitive_idempotent(int m);

/// Rank of the left ideal of the R/T subalgebra generated by a, computed
/// over the full 4^m word basis.
int left_ideal_rank(const RtElement& a);

/// Highest-weight states: the k-th power of the isotropic combination
/// (x_1 R_1 - i x_2 R_2)/2 on the ground state, scaled by 1/k!; the spinor
/// variant multiplies the primitive idempotent in first (unscaled).
PolyState hw_state(int m, int k);
PolyState hw_half_state(int m, int k);
/// The perp-family analogue of hw_state, built from T generators.
PolyState hw_perp_state(int m, int k);

/// Applies the symbolic maximal-torus element of the appropriate family and
/// solves lambda * F = result for the scalar weight; throws when F is not
/// an exact eigenvector.
Scalar torus_weight(ActionKind kind, const PolyState& F);

}  // namespace dca
