#include "doctest.h"

#include "dca/clifford.hpp"
#include "dca/selfcheck.hpp"

using namespace dca;

TEST_CASE("generator products") {
  const int m = 2;
  const auto f1 = CliffordElement::fwd(1, m), b1 = CliffordElement::bwd(1, m);
  CHECK((f1 * f1).is_zero());
  // b f = 1 - f b for the same coordinate
  const auto fb = f1 * b1;
  CHECK(b1 * f1 == CliffordElement::one(m) - fb);
  const auto e1 = CliffordElement::e_vec(1, m);
  CHECK(e1 * e1 == CliffordElement::one(m));
}

TEST_CASE("anticommutator tables for all generators") {
  for (int m = 1; m <= 4; ++m) {
    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= m; ++k) {
        const auto fj = CliffordElement::fwd(j, m), fk = CliffordElement::fwd(k, m);
        const auto bj = CliffordElement::bwd(j, m), bk = CliffordElement::bwd(k, m);
        CHECK((fj * fk + fk * fj).is_zero());
        CHECK((bj * bk + bk * bj).is_zero());
        const auto d = j == k ? CliffordElement::one(m) : CliffordElement::zero(m);
        CHECK(fj * bk + bk * fj == d);
        const auto ej = CliffordElement::e_vec(j, m), ek = CliffordElement::e_vec(k, m);
        const auto pj = CliffordElement::e_perp(j, m), pk = CliffordElement::e_perp(k, m);
        const Scalar two = j == k ? Scalar(2) : Scalar();
        CHECK(ej * ek + ek * ej == CliffordElement::scalar(m, two));
        CHECK(pj * pk + pk * pj == CliffordElement::scalar(m, -two));
      }
    }
  }
}

TEST_CASE("involution values on generators") {
  const int m = 2;
  const auto f1 = CliffordElement::fwd(1, m);
  const auto b2 = CliffordElement::bwd(2, m);
  // reversal of an anticommuting pair flips the sign
  CHECK((f1 * b2).involute(Involution::Reversion) == -(f1 * b2));
  CHECK(CliffordElement::e_vec(1, m).involute(Involution::Conjugation) ==
        -CliffordElement::e_vec(1, m));
  CHECK(f1.involute(Involution::Main) == -f1);
  // the paired-generator blade reverses into a split
  const auto fb = f1 * CliffordElement::bwd(1, m);
  CHECK(fb.involute(Involution::Reversion) == CliffordElement::one(m) - fb);
}

TEST_CASE("involutions are antimultiplicative and involutive") {
  selfcheck::Rng rng(7);
  for (int it = 0; it < 100; ++it) {
    const int m = rng.uniform(1, 3);
    const auto a = rng.clifford(m, 3), b = rng.clifford(m, 3);
    for (auto kind : {Involution::Reversion, Involution::Conjugation}) {
      CHECK((a * b).involute(kind) == b.involute(kind) * a.involute(kind));
      CHECK(a.involute(kind).involute(kind) == a);
    }
    CHECK((a * b).involute(Involution::Main) ==
          a.involute(Involution::Main) * b.involute(Involution::Main));
  }
}

TEST_CASE("product associativity") {
  selfcheck::Rng rng(8);
  for (int it = 0; it < 60; ++it) {
    const int m = rng.uniform(1, 3);
    const auto a = rng.clifford(m, 3), b = rng.clifford(m, 3), c = rng.clifford(m, 3);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("grade projection") {
  const int m = 2;
  const auto f1 = CliffordElement::fwd(1, m), b1 = CliffordElement::bwd(1, m);
  const auto x = CliffordElement::one(m) + f1 * b1;
  CHECK(x.grade_part(0) == CliffordElement::one(m) + (f1 * b1).grade_part(0));
  CHECK(f1.grade_part(0).is_zero());
  // b f = 1 - f b, so its grade-2 part is -f b
  CHECK((b1 * f1).grade_part(2) == -(f1 * b1));
}

TEST_CASE("blade token round trip") {
  for (int gen = 0; gen < 8; ++gen) CHECK(blade_token_parse(blade_token(gen)) == gen);
}
