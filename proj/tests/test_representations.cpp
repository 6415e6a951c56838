#include "doctest.h"

#include "dca/representations.hpp"
#include "dca/selfcheck.hpp"

using namespace dca;

TEST_CASE("commuting basis has the right size and structure") {
  CHECK(commuting_basis(2, 2).size() == 3);
  CHECK(commuting_basis(3, 2).size() == 6);
  CHECK(binomial(5, 2) == 10);
  // (x1 R1)^2 [1] = x1^2 [1]
  const PolyState b = commuting_monomial(2, mi::with(0, 0, 2));
  CHECK(b == PolyState::monomial(2, mi::with(0, 0, 2), CliffordElement::one(2)));
}

TEST_CASE("harmonic/radial splitting") {
  const int m = 2;
  // degree 1 is all harmonic
  const PolyState p1 = commuting_monomial(m, mi::with(0, 0, 1));
  const auto [h1, q1] = fischer_split(p1);
  CHECK(h1 == p1);
  CHECK(q1.is_zero());

  // (x1 R1)^2 [1]: harmonic part (x1^2 - x2^2)/2, radial part [1]/2
  const PolyState p2 = commuting_monomial(m, mi::with(0, 0, 2));
  const auto [h2, q2] = fischer_split(p2);
  const Scalar half(GaussianRational(1, 2));
  PolyState expect_h = half * PolyState::monomial(m, mi::with(0, 0, 2), CliffordElement::one(m));
  expect_h += -half * PolyState::monomial(m, mi::with(0, 1, 2), CliffordElement::one(m));
  CHECK(h2 == expect_h);
  CHECK(q2 == half * PolyState::ground(m));
  CHECK(laplace(h2).is_zero());
  CHECK(h2 + vec_xi(vec_xi(q2)) == p2);

  // an already harmonic input returns itself
  const auto [h3, q3] = fischer_split(h2);
  CHECK(h3 == h2);
  CHECK(q3.is_zero());

  // inputs outside the commuting span are rejected
  CHECK_THROWS_AS(fischer_split(PolyState::monomial(
                      m, mi::with(mi::with(0, 0, 1), 1, 1), CliffordElement::one(m))),
                  std::domain_error);
}

TEST_CASE("splitting reconstructs across dimensions and degrees") {
  for (int m = 2; m <= 3; ++m) {
    for (int k = 0; k <= 5; ++k) {
      for (const auto& [alpha, b] : commuting_basis(m, k)) {
        const auto [h, q] = fischer_split(b);
        CHECK(h + vec_xi(vec_xi(q)) == b);
        CHECK(laplace(h).is_zero());
      }
    }
  }
}

TEST_CASE("harmonic dimension table") {
  CHECK(harmonic_dim(2, 2).formula == 2);
  CHECK(harmonic_dim(2, 2).kernel_rank == 2);
  CHECK(harmonic_dim(3, 2).formula == 5);
  CHECK(harmonic_dim(2, 0).formula == 1);
  CHECK(harmonic_dim(3, 0).formula == 1);
  CHECK(harmonic_dim(4, 5).formula == 36);
  const int expect2[] = {1, 2, 2, 2, 2, 2};
  const int expect3[] = {1, 3, 5, 7, 9, 11};
  const int expect4[] = {1, 4, 9, 16, 25, 36};
  for (int k = 0; k <= 5; ++k) {
    CHECK(harmonic_dim(2, k).kernel_rank == expect2[k]);
    CHECK(harmonic_dim(3, k).kernel_rank == expect3[k]);
    CHECK(harmonic_dim(4, k).kernel_rank == expect4[k]);
  }
}

TEST_CASE("general harmonic splitting drives the random generators") {
  selfcheck::Rng rng(41);
  for (int m = 2; m <= 3; ++m) {
    for (int k = 2; k <= 4; ++k) {
      const PolyState h = rng.harmonic_state(m, k);
      CHECK(laplace(h).is_zero());
      const PolyState f = rng.monogenic_state(m, k - 1);
      CHECK(dirac(f).is_zero());
    }
  }
}

TEST_CASE("isotropic frame relations") {
  for (int m : {2, 3, 4}) {
    const IsotropicFrame fr = isotropic_frame(m);
    auto anti = [](const RtElement& a, const RtElement& b) { return a * b + b * a; };
    for (int j = 0; j < fr.n; ++j) {
      for (int k = 0; k < fr.n; ++k) {
        const RtElement d = j == k ? RtElement::one(m) : RtElement::zero(m);
        CHECK(anti(fr.f[j], fr.fd[k]) == d);
        CHECK(anti(fr.g[j], fr.gd[k]) == d);
        CHECK(anti(fr.f[j], fr.g[k]).is_zero());
        CHECK(anti(fr.f[j], fr.gd[k]).is_zero());
        CHECK(anti(fr.f[j], fr.f[k]).is_zero());
        CHECK(anti(fr.g[j], fr.g[k]).is_zero());
      }
    }
  }
}

TEST_CASE("exchange of coordinate sums with the isotropic vectors") {
  const int m = 2;
  const IsotropicFrame fr = isotropic_frame(m);
  const auto f1 = OperatorElement::from_rt(fr.f[0]);
  const auto f1d = OperatorElement::from_rt(fr.fd[0]);
  const auto x1 = OperatorElement::xi(1, m), x2 = OperatorElement::xi(2, m);
  CHECK((x1 + x2) * f1 == f1d * (x1 - x2));
  CHECK((x1 - x2) * f1 == f1d * (x1 + x2));
  CHECK((x1 + x2) * f1d == f1 * (x1 - x2));
  CHECK((x1 - x2) * f1d == f1 * (x1 + x2));
}

TEST_CASE("projector properties") {
  for (int m : {2, 3, 4}) {
    const RtElement I = primitive_idempotent(m);
    CHECK(I * I == I);
    const IsotropicFrame fr = isotropic_frame(m);
    for (int j = 0; j < fr.n; ++j) {
      CHECK((fr.f[j] * I).is_zero());
      CHECK((fr.g[j] * I).is_zero());
    }
  }
  CHECK(left_ideal_rank(primitive_idempotent(2)) == 4);
  // the unaveraged odd-dimension tail is not idempotent
  const int m = 3;
  const IsotropicFrame fr = isotropic_frame(m);
  RtElement raw = RtElement::one(m);
  for (int j = 0; j < fr.n; ++j) raw = raw * fr.f[j] * fr.fd[j] * fr.g[j] * fr.gd[j];
  const RtElement tail = RtElement::generator(Family::R, 3, m) *
                         RtElement::generator(Family::T, 3, m);
  const RtElement bad = raw * tail;
  CHECK(!(bad * bad == bad));
}

TEST_CASE("integer highest-weight states") {
  CHECK(hw_state(2, 0) == PolyState::ground(2));
  const int m = 2;
  const Scalar half(GaussianRational(1, 2));
  PolyState expect(m);
  expect += PolyState::monomial(m, mi::with(0, 0, 1), half * CliffordElement::e_vec(1, m));
  expect += PolyState::monomial(
      m, mi::with(0, 1, 1), -(half * Scalar::i()) * CliffordElement::e_vec(2, m));
  CHECK(hw_state(2, 1) == expect);
  CHECK(laplace(hw_state(2, 3)).is_zero());
  for (int k = 0; k <= 4; ++k) {
    CHECK(torus_weight(ActionKind::H0, hw_state(2, k)) == exp_ikt(k, 1));
    CHECK(torus_weight(ActionKind::H0, hw_state(4, k)) == exp_ikt(k, 1));
  }
  CHECK(torus_weight(ActionKind::H0, PolyState::ground(2)) == Scalar(1));
}

TEST_CASE("spinor highest-weight states") {
  for (int m : {2, 4}) {
    const int n = m / 2;
    for (int k = 0; k <= (m == 2 ? 4 : 3); ++k) {
      const PolyState f = hw_half_state(m, k);
      CHECK(dirac(f).is_zero());
      Scalar expect = exp_ikt(k, 1);
      for (int p = 1; p <= n; ++p) expect *= exp_half_it(p);
      CHECK(torus_weight(ActionKind::L, f) == expect);
    }
  }
  CHECK(dirac(hw_half_state(2, 5)).is_zero());
}

TEST_CASE("perp-frame highest-weight states") {
  for (int k = 0; k <= 3; ++k)
    CHECK(torus_weight(ActionKind::H0Perp, hw_perp_state(2, k)) == exp_ikt(k, 1));
}

TEST_CASE("non-eigenvectors are rejected") {
  const int m = 2;
  const PolyState f = PolyState::monomial(m, mi::with(0, 0, 1), CliffordElement::one(m));
  CHECK_THROWS_AS(torus_weight(ActionKind::H0, f), std::domain_error);
}
