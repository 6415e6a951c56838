#include "doctest.h"

#include <cmath>

#include "dca/scalar.hpp"
#include "dca/selfcheck.hpp"

using namespace dca;

TEST_CASE("additive identities and cancellation") {
  const Scalar x = Scalar::cos_half(1);
  CHECK(Scalar() + x == x);
  CHECK(Scalar(GaussianRational(1, 2)) + Scalar(GaussianRational(1, 2)) == Scalar(1));
  CHECK((x + (-x)).is_zero());
}

TEST_CASE("reduction rules") {
  const Scalar c = Scalar::cos_half(1), s = Scalar::sin_half(1);
  CHECK(s * s == Scalar(1) - c * c);
  CHECK((Scalar::epsilon() * Scalar::epsilon()).is_zero());
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
}

TEST_CASE("numeric evaluation") {
  const Scalar c = Scalar::cos_half(1), s = Scalar::sin_half(1);
  std::vector<double> zero{0.0};
  CHECK(c.eval(zero) == std::complex<double>(1.0, 0.0));

  std::vector<double> right{std::acos(-1.0) / 2};
  CHECK(std::abs((c * c - s * s).eval(right).real() - 0.0) < 1e-12);

  // doubling: 2 cos(t/2) sin(t/2) = sin(t)
  std::vector<double> third{std::acos(-1.0) / 3};
  const double expect = std::sin(std::acos(-1.0) / 3);
  CHECK(std::abs((Scalar(2) * c * s).eval(third).real() - expect) < 1e-12);

  CHECK_THROWS_AS(Scalar::epsilon().eval(zero), std::domain_error);
}

TEST_CASE("integer frequency exponentials") {
  CHECK(exp_ikt(0, 1) == Scalar(1));
  const Scalar c = Scalar::cos_half(1), s = Scalar::sin_half(1);
  const Scalar expect = Scalar(2) * c * c - Scalar(1) + Scalar::i() * (Scalar(2) * c * s);
  CHECK(exp_ikt(1, 1) == expect);
  CHECK(exp_ikt(-1, 1) == expect.conj());
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) CHECK(exp_ikt(a, 1) * exp_ikt(b, 1) == exp_ikt(a + b, 1));
}

TEST_CASE("ring axioms on random elements") {
  selfcheck::Rng rng(5);
  for (int it = 0; it < 40; ++it) {
    const Scalar a = rng.scalar(2, true), b = rng.scalar(2, true), c = rng.scalar(2, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("evaluation is multiplicative at random angles") {
  selfcheck::Rng rng(6);
  for (int it = 0; it < 20; ++it) {
    const Scalar a = rng.scalar(2, false), b = rng.scalar(2, false);
    std::vector<double> angles{rng.uniform(-300, 300) / 100.0, rng.uniform(-300, 300) / 100.0};
    CHECK(std::abs((a * b).eval(angles) - a.eval(angles) * b.eval(angles)) < 1e-10);
  }
}

TEST_CASE("epsilon split") {
  const Scalar x = Scalar::cos_half(1) + Scalar::epsilon() * Scalar::sin_half(1);
  CHECK(x.epsilon_free_part() == Scalar::cos_half(1));
  CHECK(x.epsilon_coefficient() == Scalar::sin_half(1));
  CHECK(x.has_epsilon());
  CHECK(!x.epsilon_free_part().has_epsilon());
}
