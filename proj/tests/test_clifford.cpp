#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilfock/clifford.hpp"
#include "nilfock/sampling.hpp"

#include <array>

using namespace nilfock;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace
{

// Hamilton product from the multiplication table i^2 = j^2 = k^2 = ijk = -1
Eigen::Vector4d hamilton(const Eigen::Vector4d& p, const Eigen::Vector4d& q)
{
  Eigen::Vector4d r;
  r(0) = p(0) * q(0) - p(1) * q(1) - p(2) * q(2) - p(3) * q(3);
  r(1) = p(0) * q(1) + p(1) * q(0) + p(2) * q(3) - p(3) * q(2);
  r(2) = p(0) * q(2) - p(1) * q(3) + p(2) * q(0) + p(3) * q(1);
  r(3) = p(0) * q(3) + p(1) * q(2) - p(2) * q(1) + p(3) * q(0);
  return r;
}

} // namespace

TEST_CASE("irreducible module dimensions")
{
  const std::array<int, 9> expected{2, 4, 4, 8, 8, 8, 8, 16, 32};
  for (int m = 1; m <= 9; ++m)
  {
    CAPTURE(m);
    CHECK(clifford_irrep_dim(m) == expected[m - 1]);
  }
  CHECK(clifford_irrep_dim(16) == 16 * clifford_irrep_dim(8));
  CHECK_THROWS_AS(clifford_irrep_dim(0), InputError);
}

TEST_CASE("generators satisfy the Clifford relations and are orthogonal")
{
  for (int m = 1; m <= 12; ++m)
  {
    CAPTURE(m);
    const auto gens = clifford_generators(m);
    REQUIRE(static_cast<int>(gens.size()) == m);
    for (const auto& g : gens)
    {
      CHECK(g.rows() == clifford_irrep_dim(m));
      CHECK((g + g.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
    CHECK(clifford_relation_defect(gens) <= 1e-13);
  }
}

TEST_CASE("commutant dimension follows the period-8 table")
{
  for (int m = 1; m <= 9; ++m)
  {
    CAPTURE(m);
    CHECK(commutant_dimension(clifford_generators(m)) == irreducible_commutant_dimension(m));
  }
  CHECK(irreducible_commutant_dimension(3) == 4);
  CHECK(irreducible_commutant_dimension(7) == 1);
}

TEST_CASE("quaternion left multiplication matches the Hamilton table")
{
  Rng rng(1);
  for (int i = 1; i <= 3; ++i)
    for (int trial = 0; trial < 5; ++trial)
    {
      Eigen::Vector4d q;
      for (int c = 0; c < 4; ++c)
        q(c) = rng.uniform(-1.0, 1.0);
      const Eigen::Vector4d unit = Eigen::Vector4d::Unit(i);
      CHECK((quaternion_left_multiplication(i) * q - hamilton(unit, q)).norm() <= 1e-15);
    }
  const Eigen::Matrix4d ij = quaternion_left_multiplication(1) * quaternion_left_multiplication(2);
  CHECK((ij - quaternion_left_multiplication(3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("octonion multiplication is a composition")
{
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial)
  {
    VectorXd x(8), y(8);
    for (int c = 0; c < 8; ++c)
    {
      x(c) = rng.uniform(-1.0, 1.0);
      y(c) = rng.uniform(-1.0, 1.0);
    }
    MatrixXd lx = x(0) * MatrixXd::Identity(8, 8);
    for (int i = 1; i < 8; ++i)
      lx += x(i) * octonion_left_multiplication(i);
    CHECK((lx * y).norm() == doctest::Approx(x.norm() * y.norm()).epsilon(1e-13));
  }
}

TEST_CASE("a non-Clifford family has positive defect")
{
  auto gens = clifford_generators(2);
  gens[1] = gens[0];
  CHECK(clifford_relation_defect(gens) >= 1.0);
}
