#pragma once

#include <string>
#include <vector>

#include "dca/spin.hpp"
#include "dca/states.hpp"

namespace dca {

enum class ActionKind { H0, H1, L, H0Perp, H1Perp, LPerp };

ActionKind action_kind_from_string(const std::string& name);
std::string action_kind_name(ActionKind k);
bool action_is_perp(ActionKind k);

/// The conjugated coordinate system of a spin element: var[j] is the image
/// of the j-th coordinate operator under x -> conj(s) x s, and der[j] the
/// image of the j-th derivative. Components are extracted against the
/// family generators and satisfy the same exchange relations as the
/// originals; construction verifies this.
struct RotatedVariables {
  SpinElement s;
  std::vector<OperatorElement> var;
  std::vector<OperatorElement> der;
};

RotatedVariables rotated_variables(const SpinElement& s);

/// The six group actions on polynomial states. All three substitute the
/// conjugated coordinates monomial-wise in written order; L additionally
/// applies s on the left, and the H1 variants sandwich with the trailing
/// conjugate (which hits the ground state first, producing a constant).
PolyState act(ActionKind kind, const SpinElement& s, const PolyState& f);

/// Rotation generator in the (a,b) coordinate plane acting on polynomials;
/// zero when a == b.
OperatorElement rotation_generator(int a, int b, int m);
/// Spinor-level rotation generator: the polynomial generator minus half the
/// corresponding bivector.
OperatorElement spinor_rotation_generator(int a, int b, int m);

/// Closed-form exponential of the (1,2)-plane rotation generator with angle
/// index p, computed by exact eigendecomposition of the degree slices (the
/// mixing operator has integer spectrum -k..k on the degree-k slice).
/// Requires the state to be supported on coordinates 1 and 2.
PolyState exp_rotation_12(int p, const PolyState& f);

/// First derivative of the group actions at the identity in the direction
/// of the bivector G_j G_i (i < j), as verified against the square-zero
/// epsilon ring: H0 gives -2 times the rotation generator; L adds left
/// multiplication by the bivector; H1 adds its commutator instead.
PolyState infinitesimal_action(ActionKind kind, int j, int i, const PolyState& f);

/// Two-dimensional eigenstates of the coordinate mixing operator:
/// for even k and i in 0..k/2 the eigenvalue is sign*2i, for odd k and i in
/// 1..(k+1)/2 it is sign*(2i-1). sign is +1 or -1.
PolyState eigen_state(int k, int i, int sign);

}  // namespace dca
