#include "doctest.h"

#include "dca/json_io.hpp"
#include "dca/selfcheck.hpp"

using namespace dca;

TEST_CASE("scalar serialization round trip is byte identical") {
  selfcheck::Rng rng(51);
  for (int it = 0; it < 30; ++it) {
    const Scalar s = rng.scalar(2, true);
    const std::string once = to_json(s).dump();
    const std::string twice = to_json(scalar_from_json(to_json(s))).dump();
    CHECK(once == twice);
    CHECK(scalar_from_json(to_json(s)) == s);
  }
}

TEST_CASE("state serialization round trips") {
  selfcheck::Rng rng(52);
  for (int it = 0; it < 20; ++it) {
    const int m = rng.uniform(1, 3);
    const CliffordElement c = rng.clifford(m, 4);
    CHECK(clifford_from_json(to_json(c)) == c);
    CHECK(to_json(clifford_from_json(to_json(c))).dump() == to_json(c).dump());

    const PolyState f = rng.state(m, rng.uniform(0, 3), 3);
    CHECK(poly_from_json(to_json(f)) == f);
    CHECK(to_json(poly_from_json(to_json(f))).dump() == to_json(f).dump());
  }
  const DistState d = delta_shift_1_0();
  CHECK(dist_from_json(to_json(d)) == d);
  CHECK(to_json(dist_from_json(to_json(d))).dump() == to_json(d).dump());
}

TEST_CASE("operator and spin serialization round trips") {
  const int m = 2;
  const OperatorElement op = rotation_generator(1, 2, m) + OperatorElement::t(1, m);
  CHECK(operator_from_json(to_json(op)) == op);
  CHECK(to_json(operator_from_json(to_json(op))).dump() == to_json(op).dump());

  selfcheck::Rng rng(53);
  const SpinElement s = rng.spin(Family::R, 3, 2);
  const SpinElement back = spin_from_json(to_json(s));
  CHECK(back.value() == s.value());
  CHECK(to_json(spin_from_json(to_json(s))).dump() == to_json(s).dump());

  const SpinElement torus = torus_element(Family::R, 4);
  CHECK(spin_from_json(to_json(torus)).value() == torus.value());
}

TEST_CASE("big numerators survive the trip") {
  // force numbers beyond 64 bits
  Scalar big(1);
  const Scalar base(GaussianRational(1000000007L));
  for (int i = 0; i < 4; ++i) big *= base;
  CHECK(scalar_from_json(to_json(big)) == big);
}

TEST_CASE("angle specifications") {
  CHECK(parse_angle_spec("sym").symbolic);
  CHECK(parse_angle_spec("1/3pi").multiple_of_pi == Rational(1, 3));
  CHECK(parse_angle_spec("-2/5 pi").multiple_of_pi == Rational(-2, 5));
  CHECK(parse_angle_spec("1pi").multiple_of_pi == Rational(1));
  CHECK(parse_angle_spec("pi").multiple_of_pi == Rational(1));
  CHECK_THROWS_AS(parse_angle_spec("fast"), std::invalid_argument);
}

TEST_CASE("numeric and symbolic rotation agree") {
  // evaluate the symbolic planar rotation at a concrete angle and compare
  // with evaluating the coefficients afterwards
  const int m = 2;
  const SpinElement s = exp_bivector(Family::R, {{1, {2, 1}}}, m);
  const PolyState f = PolyState::monomial(m, mi::with(0, 0, 1), CliffordElement::one(m));
  const PolyState sym = act(ActionKind::H0, s, f);
  const double theta = std::acos(-1.0) / 3;  // 1/3 pi
  std::vector<double> angles{theta};
  for (const auto& [alpha, c] : sym.terms()) {
    for (const auto& [blade, coeff] : c.terms()) {
      const auto z = coeff.eval(angles);
      // compare against cos/sin of the full angle
      if (alpha == mi::with(0, 0, 1))
        CHECK(std::abs(z.real() - std::cos(theta)) < 1e-10);
      else
        CHECK(std::abs(std::abs(z.real()) - std::sin(theta)) < 1e-10);
    }
  }
}
