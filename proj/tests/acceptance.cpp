// Acceptance suite: every check below is exact (Scalar equality in the
// half-angle ring) unless a numeric tolerance is named. One line per
// criterion; nonzero exit when anything fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dca/distributions.hpp"
#include "dca/json_io.hpp"
#include "dca/representations.hpp"
#include "dca/selfcheck.hpp"

using namespace dca;

namespace {

struct Criterion {
  std::string description;
  double budget_seconds;  // 0 = no budget
  std::function<bool()> run;
};

bool algebra_relation_tables() {
  for (int m = 1; m <= 4; ++m) {
    const auto zero = OperatorElement::zero(m);
    const auto one = OperatorElement::identity(m);
    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= m; ++k) {
        const auto fj = CliffordElement::fwd(j, m), fk = CliffordElement::fwd(k, m);
        const auto bj = CliffordElement::bwd(j, m), bk = CliffordElement::bwd(k, m);
        const auto cd = j == k ? CliffordElement::one(m) : CliffordElement::zero(m);
        if (!((fj * fk + fk * fj).is_zero())) return false;
        if (!((bj * bk + bk * bj).is_zero())) return false;
        if (!(fj * bk + bk * fj == cd)) return false;

        const auto xj = OperatorElement::xi(j, m), xk = OperatorElement::xi(k, m);
        const auto dj = OperatorElement::del(j, m), dk = OperatorElement::del(k, m);
        const auto rj = OperatorElement::r(j, m), rk = OperatorElement::r(k, m);
        const auto tj = OperatorElement::t(j, m), tk = OperatorElement::t(k, m);
        if (j == k) {
          if (!(dj * xj - xj * dj == one)) return false;
        } else {
          if (!(dj * xk + xk * dj == zero)) return false;
          if (!(xj * xk + xk * xj == zero)) return false;
          if (!(dj * dk + dk * dj == zero)) return false;
        }
        // frame anticommutators written in folded form
        const auto rx = rj * xk + xk * rj;
        if (!(rx == (j == k ? Scalar(2) * (rj * xj) : zero))) return false;
        const auto rd = rj * dk + dk * rj;
        if (!(rd == (j == k ? Scalar(2) * (rj * dj) : zero))) return false;
        if (!(rj * rk + rk * rj == (j == k ? Scalar(2) * one : zero))) return false;
        if (!(tj * tk + tk * tj == (j == k ? Scalar(-2) * one : zero))) return false;
        if (!(rj * tk + tk * rj == zero)) return false;
        const auto tx = tj * xk + xk * tj;
        if (!(tx == (j == k ? Scalar(2) * (tj * xj) : zero))) return false;
        const auto td = tj * dk + dk * tj;
        if (!(td == (j == k ? Scalar(2) * (tj * dj) : zero))) return false;
      }
    }
  }
  return true;
}

bool osp_triple() {
  for (int m = 2; m <= 3; ++m) {
    const auto D = OperatorElement::dirac(m);
    for (int k = 0; k <= 5; ++k) {
      for (std::uint64_t alpha : mi::of_degree(m, k)) {
        const auto f = PolyState::monomial(m, alpha, CliffordElement::one(m));
        if (!(apply(D, vec_xi(f)) + vec_xi(apply(D, f)) ==
              Scalar(2) * euler(f) + Scalar(m) * f))
          return false;
        if (!(apply(D, euler(f)) - euler(apply(D, f)) == apply(D, f))) return false;
        if (!(vec_xi(euler(f)) - euler(vec_xi(f)) == -vec_xi(f))) return false;
      }
    }
  }
  return true;
}

bool double_cover() {
  selfcheck::Rng rng(101);
  for (int m = 2; m <= 4; ++m) {
    for (int it = 0; it < 50; ++it) {
      const SpinElement s = rng.spin(Family::R, m, 2 * rng.uniform(1, 2));
      const SpinElement t = rng.spin(Family::R, m, 2);
      const SMatrix ms = rotation_matrix(s);  // verifies orthogonality, det 1
      if (!(ms == rotation_matrix(-s))) return false;
      if (!(rotation_matrix(s * t) == smat_mul(ms, rotation_matrix(t)))) return false;
    }
  }
  return true;
}

bool reflection_formula() {
  selfcheck::Rng rng(102);
  for (int m = 2; m <= 4; ++m) {
    for (int it = 0; it < 50; ++it) {
      const RtVector w = rng.unit_vector(Family::R, m);
      const RtVector x = rng.vector(Family::R, m);
      const RtVector img = twisted_conjugation(w.to_element(), x);
      Scalar inner;
      for (int j = 0; j < m; ++j) inner += x.coords[j] * w.coords[j];
      for (int j = 0; j < m; ++j)
        if (!(img.coords[j] == x.coords[j] - Scalar(2) * inner * w.coords[j])) return false;
    }
  }
  return true;
}

bool rotation_invariance() {
  selfcheck::Rng rng(103);
  for (int m = 2; m <= 3; ++m) {
    std::vector<SpinElement> spins{torus_element(Family::R, m), rng.spin(Family::R, m, 4)};
    for (const auto& s : spins) {
      for (int k = 0; k <= 4; ++k) {
        for (std::uint64_t alpha : mi::of_degree(m, k)) {
          const auto f = PolyState::monomial(m, alpha, CliffordElement::one(m));
          if (!(laplace(act(ActionKind::H0, s, f)) == act(ActionKind::H0, s, laplace(f))))
            return false;
        }
      }
      for (int k = 1; k <= 3; ++k) {
        const PolyState f = rng.monogenic_state(m, k);
        if (!dirac(act(ActionKind::L, s, f)).is_zero()) return false;
      }
    }
  }
  return true;
}

bool planar_examples() {
  const int m = 2;
  selfcheck::Rng rng(104);
  const SpinElement s = exp_bivector(Family::R, {{1, {2, 1}}}, m);
  const CliffordElement c = rng.clifford(m, 2);
  const CliffordElement e21 = CliffordElement::e_vec(2, m) * CliffordElement::e_vec(1, m);

  // degree-one state picks up cos / -sin coefficients
  const PolyState f1 = PolyState::monomial(m, mi::with(0, 0, 1), c);
  PolyState expect1 = cos_t(1) * f1;
  expect1 += PolyState::monomial(m, mi::with(0, 1, 1), -sin_t(1) * (e21 * c));
  if (!(act(ActionKind::H0, s, f1) == expect1)) return false;

  // the three degree-two eigenstates
  auto mono = [&](std::uint32_t a, std::uint32_t b) {
    return PolyState::monomial(m, mi::with(mi::with(0, 0, a), 1, b), CliffordElement::one(m));
  };
  const auto r21 = OperatorElement::r(2, m) * OperatorElement::r(1, m);
  const PolyState inv = mono(2, 0) + mono(0, 2);
  if (!(act(ActionKind::H0, s, inv) == inv)) return false;
  const PolyState fm = mono(0, 2) - Scalar(2) * mono(1, 1) - mono(2, 0);
  if (!(act(ActionKind::H0, s, fm) == cos_kt(2, 1) * fm - sin_kt(2, 1) * apply(r21, fm)))
    return false;
  const PolyState fp = mono(0, 2) + Scalar(2) * mono(1, 1) - mono(2, 0);
  if (!(act(ActionKind::H0, s, fp) == cos_kt(2, 1) * fp + sin_kt(2, 1) * apply(r21, fp)))
    return false;

  // spinor action rotates the degree-one eigenstate by three half-angles
  PolyState g(m);
  g += PolyState::monomial(m, mi::with(0, 1, 1), c);
  g -= PolyState::monomial(m, mi::with(0, 0, 1), c);
  const Scalar ch = Scalar::cos_half(1), sh = Scalar::sin_half(1);
  const Scalar cos32 = Scalar(4) * ch * ch * ch - Scalar(3) * ch;
  const Scalar sin32 = sh * (Scalar(4) * ch * ch - Scalar(1));
  PolyState expectg = cos32 * g;
  expectg += sin32 * insert_ground_constant(g, e21);
  return act(ActionKind::L, s, g) == expectg;
}

bool first_order_actions() {
  for (int m = 2; m <= 3; ++m) {
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        const RtElement biv =
            RtElement::generator(Family::R, j, m) * RtElement::generator(Family::R, i, m);
        const SpinElement s =
            SpinElement::unchecked(Family::R, RtElement::one(m) + Scalar::epsilon() * biv);
        for (int k = 0; k <= 3; ++k) {
          for (std::uint64_t alpha : mi::of_degree(m, k)) {
            const auto f = PolyState::monomial(m, alpha, CliffordElement::one(m));
            for (ActionKind kind : {ActionKind::H0, ActionKind::H1, ActionKind::L}) {
              if (!(act(kind, s, f) - f ==
                    Scalar::epsilon() * infinitesimal_action(kind, j, i, f)))
                return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool eigen_families() {
  const int m = 2;
  const OperatorElement mixer = OperatorElement::xi(1, m) * OperatorElement::del(2, m) +
                                OperatorElement::xi(2, m) * OperatorElement::del(1, m);
  for (int k = 0; k <= 4; ++k) {
    if (k % 2 == 0) {
      for (int i = 0; 2 * i <= k; ++i) {
        for (int sign : {1, -1}) {
          const PolyState f = eigen_state(k, i, sign);
          if (f.is_zero() || !(apply(mixer, f) == Scalar(sign * 2 * i) * f)) return false;
          const DistState b = eigen_dist(k, i, sign);
          if (b.is_zero() || !(dist_apply(mixer, b) == Scalar(sign * 2 * i) * b)) return false;
        }
      }
    } else {
      for (int i = 1; 2 * i - 1 <= k; ++i) {
        for (int sign : {1, -1}) {
          const PolyState f = eigen_state(k, i, sign);
          if (f.is_zero() || !(apply(mixer, f) == Scalar(sign * (2 * i - 1)) * f)) return false;
          const DistState b = eigen_dist(k, i, sign);
          if (b.is_zero() || !(dist_apply(mixer, b) == Scalar(sign * (2 * i - 1)) * b))
            return false;
        }
      }
    }
  }
  return true;
}

bool shifted_delta_rotation() {
  const int m = 2;
  const SpinElement s = exp_bivector(Family::R, {{1, {2, 1}}}, m);
  const CliffordElement e1 = CliffordElement::e_vec(1, m);
  const CliffordElement e2 = CliffordElement::e_vec(2, m);
  const CliffordElement e1p = CliffordElement::e_perp(1, m);
  const CliffordElement one = CliffordElement::one(m);
  const Scalar half(GaussianRational(1, 2));
  auto dmono = [&](std::uint32_t a, std::uint32_t b, const CliffordElement& c) {
    return DistState::monomial(m, mi::with(mi::with(0, 0, a), 1, b), c);
  };
  DistState expect = DistState::delta(m);
  expect += -cos_t(1) * dmono(1, 0, e1);
  expect += sin_t(1) * dmono(0, 1, e2);
  expect += (half * cos_t(1) * cos_t(1)) * dmono(2, 0, one + e1p * e1);
  expect += (half * sin_t(1) * sin_t(1)) * dmono(0, 2, one + e1p * e1);
  expect += (half * sin_kt(2, 1)) * dmono(1, 1, e1 * (e2 * (one + e1p * e1)));
  if (!(rotate_dist(s, delta_shift_1_0()) == expect)) return false;
  // eigendecomposition route agrees term by term
  return exp_rotation_12_dist(1, delta_shift_1_0()) == expect;
}

bool dimension_table() {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 5; ++k) {
      const HarmonicDim d = harmonic_dim(m, k);  // throws on mismatch
      if (d.formula != d.kernel_rank) return false;
    }
  return true;
}

bool weight_states() {
  for (int m : {2, 4}) {
    const int n = m / 2;
    for (int k = 0; k <= 4; ++k) {
      const PolyState f = hw_state(m, k);
      if (!laplace(f).is_zero()) return false;
      if (!(torus_weight(ActionKind::H0, f) == exp_ikt(k, 1))) return false;
      const PolyState g = hw_half_state(m, k);
      if (!dirac(g).is_zero()) return false;
      Scalar expect = exp_ikt(k, 1);
      for (int p = 1; p <= n; ++p) expect *= exp_half_it(p);
      if (!(torus_weight(ActionKind::L, g) == expect)) return false;
    }
  }
  return true;
}

bool projector_suite() {
  for (int m : {2, 4}) {
    const RtElement I = primitive_idempotent(m);
    if (!(I * I == I)) return false;
    const IsotropicFrame fr = isotropic_frame(m);
    for (int j = 0; j < fr.n; ++j) {
      if (!(fr.f[j] * I).is_zero()) return false;
      if (!(fr.g[j] * I).is_zero()) return false;
    }
  }
  const RtElement I3 = primitive_idempotent(3);
  if (!(I3 * I3 == I3)) return false;
  return left_ideal_rank(primitive_idempotent(2)) == 4;
}

bool closed_form_rotation() {
  const int m = 2;
  const SpinElement s = exp_bivector(Family::R, {{1, {2, 1}}}, m);
  for (int k = 0; k <= 4; ++k) {
    for (std::uint64_t alpha : mi::of_degree(m, k)) {
      const auto f = PolyState::monomial(m, alpha, CliffordElement::one(m));
      if (!(exp_rotation_12(1, f) == act(ActionKind::H0, s, f))) return false;
    }
  }
  selfcheck::Rng rng(105);
  for (int it = 0; it < 8; ++it) {
    const PolyState f = rng.state(m, rng.uniform(0, 4), 4);
    if (!(exp_rotation_12(1, f) == act(ActionKind::H0, s, f))) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"generator relation tables for all five operator families, m = 1..4", 5.0,
       algebra_relation_tables},
      {"triple intertwining relations on all monomials of degree <= 5, m = 2,3", 30.0, osp_triple},
      {"double cover: orthogonal, det 1, sign flip, homomorphism; 50 spins per m = 2..4", 30.0,
       double_cover},
      {"reflections: twisted conjugation equals x - 2<x,w>w on 50 unit vectors per m", 0.0,
       reflection_formula},
      {"laplace commutes with rotation; spinor action preserves monogenics; m = 2,3", 120.0,
       rotation_invariance},
      {"planar worked rotations reproduced symbol for symbol", 0.0, planar_examples},
      {"first-order actions match the generators in the square-zero ring, degrees <= 3", 0.0,
       first_order_actions},
      {"polynomial and distribution eigenfamilies carry eigenvalues up to degree 4", 0.0,
       eigen_families},
      {"rotated shifted delta matches the closed expansion term by term", 0.0,
       shifted_delta_rotation},
      {"harmonic dimension formula equals exact kernel rank, m = 2..4, k = 0..5", 60.0,
       dimension_table},
      {"weight states: harmonic/monogenic with the stated torus weights, k <= 4, m = 2,4", 0.0,
       weight_states},
      {"projector: idempotent, killed by the frame, averaged odd variant, ideal rank 4", 0.0,
       projector_suite},
      {"closed-form plane rotation equals the group action on all states of degree <= 4", 0.0,
       closed_form_rotation},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
      pass = criteria[i].run();
    } catch (const std::exception& e) {
      note = std::string(" [exception: ") + e.what() + "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].budget_seconds > 0 && secs > criteria[i].budget_seconds) {
      pass = false;
      note += " [over time budget]";
    }
    std::printf("[%s] criterion %2zu: %s (%.2f s)%s\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].description.c_str(), secs, note.c_str());
    all &= pass;
  }
  std::printf("%s\n", all ? "acceptance: all criteria hold" : "acceptance: FAILURES PRESENT");
  return all ? 0 : 1;
}
