#include "doctest.h"

#include "dca/distributions.hpp"
#include "dca/selfcheck.hpp"

using namespace dca;

namespace {
const int m = 2;
DistState dmono(std::vector<std::uint32_t> beta, const CliffordElement& c) {
  return DistState::monomial(m, mi::pack(beta), c);
}
}  // namespace

TEST_CASE("basic evaluation rules") {
  const OperatorElement mixer = OperatorElement::xi(1, m) * OperatorElement::del(2, m) +
                                OperatorElement::xi(2, m) * OperatorElement::del(1, m);
  const DistState b1 = dmono({1, 0}, CliffordElement::one(m)) +
                       dmono({0, 1}, CliffordElement::one(m));
  CHECK(dist_apply(mixer, b1) == b1);

  const auto r21 = OperatorElement::r(2, m) * OperatorElement::r(1, m);
  const CliffordElement e21 = CliffordElement::e_vec(2, m) * CliffordElement::e_vec(1, m);
  CHECK(dist_apply(r21, dmono({1, 1}, CliffordElement::one(m))) == dmono({1, 1}, e21));

  CHECK(dist_apply(OperatorElement::del(1, m), DistState::delta(m)) ==
        dmono({1, 0}, CliffordElement::one(m)));
  // a coordinate operator reaching delta annihilates the term
  CHECK(dist_apply(OperatorElement::xi(1, m), DistState::delta(m)).is_zero());
  CHECK_THROWS_AS(dist_apply(OperatorElement::t(1, m), DistState::delta(m)), std::domain_error);
}

TEST_CASE("bivector parity against derivative words") {
  const auto r21 = OperatorElement::r(2, m) * OperatorElement::r(1, m);
  const CliffordElement e21 = CliffordElement::e_vec(2, m) * CliffordElement::e_vec(1, m);
  for (int k = 0; k <= 5; ++k) {
    for (std::uint64_t beta : mi::of_degree(m, k)) {
      const DistState d = DistState::monomial(m, beta, CliffordElement::one(m));
      const Scalar sign = k % 2 == 0 ? Scalar(1) : Scalar(-1);
      CHECK(dist_apply(r21, d) == sign * DistState::monomial(m, beta, e21));
    }
  }
}

TEST_CASE("eigendistribution families") {
  const OperatorElement mixer = OperatorElement::xi(1, m) * OperatorElement::del(2, m) +
                                OperatorElement::xi(2, m) * OperatorElement::del(1, m);
  CHECK(eigen_dist(1, 1, +1) == dmono({1, 0}, CliffordElement::one(m)) +
                                    dmono({0, 1}, CliffordElement::one(m)));
  CHECK(eigen_dist(0, 0, +1) == DistState::delta(m));
  CHECK(dist_apply(mixer, eigen_dist(2, 1, -1)) == Scalar(-2) * eigen_dist(2, 1, -1));
  for (int k = 0; k <= 4; ++k) {
    if (k % 2 == 0) {
      for (int i = 0; 2 * i <= k; ++i)
        for (int sign : {1, -1}) {
          const DistState b = eigen_dist(k, i, sign);
          CHECK(!b.is_zero());
          CHECK(dist_apply(mixer, b) == Scalar(sign * 2 * i) * b);
        }
    } else {
      for (int i = 1; 2 * i - 1 <= k; ++i)
        for (int sign : {1, -1}) {
          const DistState b = eigen_dist(k, i, sign);
          CHECK(!b.is_zero());
          CHECK(dist_apply(mixer, b) == Scalar(sign * (2 * i - 1)) * b);
        }
    }
  }
  CHECK_THROWS_AS(eigen_dist(2, 3, 1), std::invalid_argument);
}

TEST_CASE("shifted delta expansion") {
  const DistState d = delta_shift_1_0();
  const CliffordElement e1 = CliffordElement::e_vec(1, m);
  const CliffordElement e1p = CliffordElement::e_perp(1, m);
  const Scalar half(GaussianRational(1, 2));
  auto it = d.terms().begin();
  CHECK(it->first == 0);
  CHECK(it->second == CliffordElement::one(m));
  ++it;
  CHECK(it->first == mi::with(0, 0, 1));
  CHECK(it->second == -e1);
  ++it;
  CHECK(it->first == mi::with(0, 0, 2));
  CHECK(it->second == half * (CliffordElement::one(m) + e1p * e1));
}

TEST_CASE("rotation of distributions") {
  // identity rotor leaves distributions alone
  const SpinElement id = exp_bivector(Family::R, {}, m);
  const DistState d = delta_shift_1_0();
  CHECK(rotate_dist(id, d) == d);

  // rotor cos(t/2) + sin(t/2) R1 R2: conjugated derivative in closed form
  const SpinElement s = exp_bivector(Family::R, {{1, {2, 1}}}, m);
  const RotatedVariables rv = rotated_variables(s);
  const auto r12 = OperatorElement::r(1, m) * OperatorElement::r(2, m);
  CHECK(rv.der[0] ==
        cos_t(1) * OperatorElement::del(1, m) + sin_t(1) * (OperatorElement::del(2, m) * r12));

  // full rotated expansion of the shifted delta
  const CliffordElement e1 = CliffordElement::e_vec(1, m);
  const CliffordElement e2 = CliffordElement::e_vec(2, m);
  const CliffordElement e1p = CliffordElement::e_perp(1, m);
  const CliffordElement one = CliffordElement::one(m);
  const Scalar half(GaussianRational(1, 2));
  DistState expect = DistState::delta(m);
  expect += -cos_t(1) * dmono({1, 0}, e1);
  expect += sin_t(1) * dmono({0, 1}, e2);
  expect += (half * cos_t(1) * cos_t(1)) * dmono({2, 0}, one + e1p * e1);
  expect += (half * sin_t(1) * sin_t(1)) * dmono({0, 2}, one + e1p * e1);
  expect += (half * sin_kt(2, 1)) * dmono({1, 1}, e1 * (e2 * (one + e1p * e1)));
  CHECK(rotate_dist(s, d) == expect);

  // the eigendecomposition route gives the same answer
  CHECK(exp_rotation_12_dist(1, d) == rotate_dist(s, d));
}

TEST_CASE("closed-form rotation of the eigenfamilies") {
  const CliffordElement e21 = CliffordElement::e_vec(2, m) * CliffordElement::e_vec(1, m);
  for (int k = 0; k <= 4; ++k) {
    std::vector<std::pair<DistState, int>> fam;
    if (k % 2 == 0) {
      for (int i = 0; 2 * i <= k; ++i)
        for (int sign : {1, -1}) fam.push_back({eigen_dist(k, i, sign), sign * 2 * i});
    } else {
      for (int i = 1; 2 * i - 1 <= k; ++i)
        for (int sign : {1, -1}) fam.push_back({eigen_dist(k, i, sign), sign * (2 * i - 1)});
    }
    for (const auto& [b, lam] : fam) {
      DistState tail(m);
      for (const auto& [beta, c] : b.terms()) tail.add_term(beta, e21 * c);
      const Scalar parity = k % 2 == 0 ? Scalar(1) : Scalar(-1);
      CHECK(exp_rotation_12_dist(1, b) == cos_kt(lam, 1) * b + (sin_kt(lam, 1) * parity) * tail);
    }
  }
}
