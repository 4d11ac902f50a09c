#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "screwalg/statics.hpp"

#include <algorithm>

using namespace screwalg;
using namespace screwalg::testing;

namespace {

ForceSystemd triangle_of_forces() {
  ForceSystemd sys;
  sys.dim = 2;
  sys.forces = {{vec2(0, 0), vec2(1, 1)},
                {vec2(1, 0), vec2(0, -1)},
                {vec2(0, 1), vec2(-1, 0)}};
  return sys;
}

ForceSystemd lever() {
  ForceSystemd sys;
  sys.dim = 2;
  sys.forces = {{vec2(-2, 0), vec2(0, 1)},
                {vec2(1, 0), vec2(0, 2)},
                {vec2(0, 0), vec2(0, -3)}};
  return sys;
}

}  // namespace

TEST_CASE("resultant of the empty system is zero") {
  ForceSystemd sys;
  sys.dim = 3;
  CHECK(screw_norm(resultant(sys)) == 0.0);
  CHECK(is_equilibrium(sys));
}

TEST_CASE("triangle of forces is in equilibrium") {
  auto sys = triangle_of_forces();
  auto r = resultant(sys);
  CHECK(screw_norm(r) <= 1e-12);
  CHECK(is_equilibrium(sys));
  for (double x : {0.0, 1.0, -2.0, 0.5, 3.0})
    CHECK(magnitude_b(moment_at(r, vec2(x, x * 0.3 - 1.0))) <= 1e-12);
  CHECK(classify_planar(r) == PlanarKind::zero);
}

TEST_CASE("lever balances about the fulcrum") {
  auto sys = lever();
  CHECK(is_equilibrium(sys));
  auto r = resultant(sys);
  for (double x : {0.0, 1.0, -2.0, 0.5, 3.0})
    CHECK(magnitude_b(moment_at(r, vec2(x, 2 * x))) <= 1e-12);
}

TEST_CASE("opposite pair gives a couple") {
  ForceSystemd sys;
  sys.dim = 2;
  sys.forces = {{vec2(0, 0), vec2(0, 1)}, {vec2(1, 0), vec2(0, -1)}};
  auto r = resultant(sys);
  CHECK(r.u.norm() == 0.0);
  CHECK(r.m0.coeff(0, 1) == -1.0);
  CHECK(classify_planar(r) == PlanarKind::couple);
  CHECK_FALSE(is_equilibrium(sys));
}

TEST_CASE("single force is a sliding vector, not equilibrium") {
  ForceSystemd sys;
  sys.dim = 2;
  sys.forces = {{vec2(1, 2), vec2(3, 0)}};
  CHECK_FALSE(is_equilibrium(sys));
  CHECK(classify_planar(resultant(sys)) == PlanarKind::sliding);
}

TEST_CASE("couples given as pseudovectors enter the resultant") {
  ForceSystemd sys;
  sys.dim = 3;
  sys.couples = {pseudovector_to_bivector(vec3(0, 0, 2))};
  auto r = resultant(sys);
  CHECK(r.m0.coeff(0, 1) == 2.0);
}

TEST_CASE("resultant is permutation invariant") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    ForceSystemd sys;
    sys.dim = n;
    for (int k = 0; k < 5; ++k)
      sys.forces.push_back({rand_vec(rng, n), rand_vec(rng, n)});
    sys.couples.push_back(rand_bivector(rng, n));
    auto r1 = resultant(sys);
    std::shuffle(sys.forces.begin(), sys.forces.end(), rng);
    auto r2 = resultant(sys);
    CHECK(screw_norm(r1 - r2) <= 1e-12 * (1.0 + screw_norm(r1)));
  }
}

TEST_CASE("sum-zero systems have constant moment functions") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    ForceSystemd sys;
    sys.dim = n;
    Vectord total = Vectord::Zero(n);
    for (int k = 0; k < 4; ++k) {
      auto f = rand_vec(rng, n);
      total += f;
      sys.forces.push_back({rand_vec(rng, n), f});
    }
    sys.forces.push_back({rand_vec(rng, n), (-total).eval()});
    auto r = resultant(sys);
    auto ref = moment_at(r, Vectord(Vectord::Zero(n)));
    for (int k = 0; k < 5; ++k) {
      auto o = rand_vec(rng, n, 5.0);
      CHECK(magnitude_b(moment_at(r, o) - ref) <=
            1e-11 * (1.0 + magnitude_b(ref)));
    }
  }
}

TEST_CASE("concurrent sum-zero forces balance") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    ForceSystemd sys;
    sys.dim = n;
    auto s = rand_vec(rng, n, 3.0);  // common point of all force lines
    Vectord total = Vectord::Zero(n);
    for (int k = 0; k < 3; ++k) {
      auto f = rand_nonzero_vec(rng, n);
      total += f;
      double slide = std::uniform_real_distribution<double>(-2, 2)(rng);
      sys.forces.push_back({(s + slide * f).eval(), f});
    }
    auto f_last = (-total).eval();
    if (f_last.norm() < 1e-6) continue;
    sys.forces.push_back({(s + 0.5 * f_last).eval(), f_last});
    CHECK(is_equilibrium(sys, 1e-9));
  }
}

TEST_CASE("planar classification is exhaustive") {
  std::mt19937 rng(44);
  std::uniform_int_distribution<int> nforces(0, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    ForceSystemd sys;
    sys.dim = 2;
    const int k = nforces(rng);
    for (int i = 0; i < k; ++i)
      sys.forces.push_back({rand_vec(rng, 2, 3.0), rand_vec(rng, 2, 3.0)});
    if (trial % 3 == 0) sys.couples.push_back(rand_bivector(rng, 2));
    auto kind = classify_planar(resultant(sys));  // throws on "general"
    CHECK((kind == PlanarKind::zero || kind == PlanarKind::sliding ||
           kind == PlanarKind::couple));
  }
  CHECK_THROWS_AS(classify_planar(zero_screw<double>(3)), std::invalid_argument);
}
