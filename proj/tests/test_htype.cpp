#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilfock/clifford.hpp"
#include "nilfock/htype.hpp"
#include "nilfock/regularity.hpp"

using namespace nilfock;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST_CASE("catalog classes")
{
  CHECK(classify_htype(make_heisenberg(1)) == HTypeClass{1, 2, 1});
  CHECK(classify_htype(make_heisenberg(3)) == HTypeClass{1, 6, 3});
  CHECK(classify_htype(make_quaternionic_heisenberg(1)) == HTypeClass{3, 4, 1});
  CHECK(classify_htype(make_quaternionic_heisenberg(2)) == HTypeClass{3, 8, 2});
  CHECK(classify_htype(make_complexified_heisenberg(1)) == HTypeClass{2, 4, 1});
  for (int m = 1; m <= 8; ++m)
  {
    CAPTURE(m);
    const auto c = classify_htype(make_htype_from_clifford(m, 2));
    CHECK(c == HTypeClass{m, 2 * clifford_irrep_dim(m), 2});
  }
}

TEST_CASE("catalog Clifford defects")
{
  for (const auto& a :
       {make_heisenberg(1), make_heisenberg(2), make_heisenberg(3), make_quaternionic_heisenberg(1),
        make_quaternionic_heisenberg(2), make_complexified_heisenberg(2)})
  {
    const auto v = is_htype(a);
    CHECK(v.is_htype);
    CHECK(v.clifford_defect <= 1e-12);
    CHECK(v.orthogonality_defect <= 1e-12);
    REQUIRE(v.class_pair.has_value());
    CHECK(v.class_pair->first == a.n2());
    CHECK(v.class_pair->second == a.n1());
  }
}

TEST_CASE("structure maps satisfy the defining pairing")
{
  Rng rng(6);
  const Step2Algebrad q = make_quaternionic_heisenberg(2);
  for (int trial = 0; trial < 10; ++trial)
  {
    const VectorXd z = random_sphere_points(3, 1, rng).front();
    const VectorXd x = random_sphere_points(8, 1, rng).front();
    const VectorXd y = random_sphere_points(8, 1, rng).front();
    const MatrixXd jz = structure_map(q, z);
    CHECK(std::abs((jz * x).dot(y) - z.dot(bracket(q, x, y))) <= 1e-14);
    // [x, J_z x] = |x|^2 z under this sign convention
    CHECK((bracket(q, x, VectorXd(jz * x)) - x.squaredNorm() * z).norm() <= 1e-14);
  }
}

TEST_CASE("weighted metrics enter the structure map")
{
  const Step2Algebrad h = make_heisenberg(1);
  MatrixXd g2(1, 1);
  g2 << 4.0;
  const Step2Algebrad weighted(h.brackets(), MatrixXd(), g2);
  // the g2-unit vector is z / 2, whose structure map is -2 Omega_z, so 2 J^2 + 2 I = -6 I
  const auto v = is_htype(weighted);
  CHECK_FALSE(v.is_htype);
  CHECK(v.clifford_defect == doctest::Approx(6.0));

  MatrixXd g1 = MatrixXd::Identity(2, 2) * 2.0;
  const Step2Algebrad rescaled(h.brackets(), g1, g2);
  CHECK(is_htype(rescaled).is_htype);
}

TEST_CASE("non-H-type algebras")
{
  Rng rng(10);
  const Step2Algebrad a = random_algebra(4, 2, rng);
  CHECK_FALSE(is_htype(a).is_htype);
  CHECK_THROWS_AS(classify_htype(a), PreconditionError);
}

TEST_CASE("perturbed quaternionic fixture is regular but not H-type")
{
  const Step2Algebrad base = make_quaternionic_heisenberg(1);
  const Perturbation p = regular_perturbation(base, 0.5, 1);
  CHECK(p.clifford_defect >= 1e-3);
  double total = 0.0;
  for (const auto& c : p.direction)
  {
    CHECK((c + c.transpose()).cwiseAbs().maxCoeff() == 0.0);
    Eigen::JacobiSVD<MatrixXd> svd(c);
    total += std::pow(svd.singularValues()(0), 2);
  }
  CHECK(std::sqrt(total) == doctest::Approx(0.5).epsilon(1e-12));

  const Step2Algebrad fixture = make_perturbed_quaternionic();
  CHECK(fixture == perturbed(base, p.direction, 1.0));
  const auto v = is_htype(fixture);
  CHECK_FALSE(v.is_htype);
  CHECK(v.clifford_defect >= 1e-3);
  for (double t : {0.25, 0.5, 1.0})
  {
    const auto r = is_regular(perturbed(base, p.direction, t));
    CHECK(r.regular);
    CHECK(r.min_sigma >= 1.0 - 0.5 * t - 1e-12);
  }
}
