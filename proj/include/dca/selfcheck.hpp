#pragma once

#include <random>
#include <string>
#include <vector>

#include "dca/distributions.hpp"
#include "dca/representations.hpp"

namespace dca::selfcheck {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Suite {
  std::string name;
  std::vector<Check> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::vector<std::string> suite_names();
Suite run_suite(const std::string& name);
std::vector<Suite> run_all();

/// Deterministic source of random test data.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int uniform(int lo, int hi);  // inclusive
  Rational rational(int max_abs_num, int max_den);
  GaussianRational gaussian_rational(int max_abs_num, int max_den);
  Scalar scalar(int angles, bool allow_eps);
  CliffordElement clifford(int m, int max_terms);
  /// Nonzero vector with small rational coordinates.
  RtVector vector(Family f, int m);
  /// Exact unit vector: a coordinate axis moved by random rational plane
  /// rotations built from Pythagorean triples.
  RtVector unit_vector(Family f, int m);
  SpinElement spin(Family f, int m, int factors);
  PolyState state(int m, int degree, int max_terms);
  PolyState harmonic_state(int m, int k);
  PolyState monogenic_state(int m, int k);

 private:
  std::mt19937_64 eng_;
};

}  // namespace dca::selfcheck
