#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilfock/htype.hpp"
#include "nilfock/step2_algebra.hpp"

using namespace nilfock;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace
{

VectorXd bracket_by_loops(const Step2Algebrad& a, const VectorXd& x, const VectorXd& y)
{
  VectorXd out = VectorXd::Zero(a.n2());
  for (Eigen::Index k = 0; k < a.n2(); ++k)
    for (Eigen::Index i = 0; i < a.n1(); ++i)
      for (Eigen::Index j = 0; j < a.n1(); ++j)
        out(k) += x(i) * a.bracket_matrix(k)(i, j) * y(j);
  return out;
}

VectorXd random_vector(Rng& rng, Eigen::Index n)
{
  VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i)
    v(i) = rng.uniform(-1.0, 1.0);
  return v;
}

} // namespace

TEST_CASE("constructor rejects malformed tensors")
{
  MatrixXd b(2, 2);
  b << 0, 1, -1, 0;
  CHECK_NOTHROW(Step2Algebrad({b}));
  CHECK_THROWS_AS(Step2Algebrad(std::vector<MatrixXd>{}), InputError);

  MatrixXd not_skew = b;
  not_skew(0, 1) = 2.0;
  CHECK_THROWS_AS(Step2Algebrad({not_skew}), InputError);

  MatrixXd diagonal = b;
  diagonal(0, 0) = 1e-300;
  CHECK_THROWS_AS(Step2Algebrad({diagonal}), InputError);

  CHECK_THROWS_AS(Step2Algebrad({b, MatrixXd::Zero(3, 3)}), InputError);

  MatrixXd indefinite = MatrixXd::Identity(2, 2);
  indefinite(1, 1) = -1.0;
  CHECK_THROWS_AS(Step2Algebrad({b}, indefinite, MatrixXd()), InputError);
  CHECK_THROWS_AS(Step2Algebrad({b}, MatrixXd::Identity(3, 3), MatrixXd()), InputError);
}

TEST_CASE("bracket matches the structure-constant sum")
{
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial)
  {
    const Step2Algebrad a = random_algebra(4, 3, rng);
    const VectorXd x = random_vector(rng, 4);
    const VectorXd y = random_vector(rng, 4);
    const VectorXd expected = bracket_by_loops(a, x, y);
    CHECK((bracket(a, x, y) - expected).norm() <= 1e-14);
    CHECK((bracket(a, x, y) + bracket(a, y, x)).norm() <= 1e-15);
    CHECK((ad_matrix(a, x) * y - expected).norm() <= 1e-14);
  }
}

TEST_CASE("heisenberg bracket of the Darboux pair")
{
  const Step2Algebrad h = make_heisenberg(1);
  const VectorXd e1 = VectorXd::Unit(2, 0);
  const VectorXd e2 = VectorXd::Unit(2, 1);
  CHECK(bracket(h, e1, e2)(0) == 1.0);
  CHECK(bracket(h, e2, e1)(0) == -1.0);
  CHECK(bracket(h, e1, e1)(0) == 0.0);
}

TEST_CASE("omega is linear in theta and pairs with the bracket")
{
  Rng rng(5);
  const Step2Algebrad a = random_algebra(6, 2, rng);
  const VectorXd t1 = random_vector(rng, 2);
  const VectorXd t2 = random_vector(rng, 2);
  const MatrixXd lhs = omega_matrix(a, VectorXd(2.0 * t1 - 3.0 * t2));
  const MatrixXd rhs = 2.0 * omega_matrix(a, t1) - 3.0 * omega_matrix(a, t2);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-14);

  const VectorXd x = random_vector(rng, 6);
  const VectorXd y = random_vector(rng, 6);
  CHECK(std::abs(x.dot(omega_matrix(a, t1) * y) - t1.dot(bracket(a, x, y))) <= 1e-14);
}

TEST_CASE("dilations are Lie algebra automorphisms")
{
  Rng rng(8);
  const Step2Algebrad a = random_algebra(4, 2, rng);
  const double lambda = 1.7;
  GradedElement<double> u{random_vector(rng, 4), random_vector(rng, 2)};
  GradedElement<double> v{random_vector(rng, 4), random_vector(rng, 2)};
  const auto du = dilate(a, lambda, u);
  const auto dv = dilate(a, lambda, v);
  CHECK((du.g1 - lambda * u.g1).norm() == 0.0);
  CHECK((du.g2 - lambda * lambda * u.g2).norm() == 0.0);
  CHECK((bracket(a, du.g1, dv.g1) - lambda * lambda * bracket(a, u.g1, v.g1)).norm() <= 1e-14);
  CHECK_THROWS_AS(dilate(a, 0.0, u), InputError);
}

TEST_CASE("bracket span rank")
{
  CHECK(bracket_span_rank(make_heisenberg(2)) == 1);
  CHECK(bracket_span_rank(make_quaternionic_heisenberg(1)) == 3);
  MatrixXd b(2, 2);
  b << 0, 1, -1, 0;
  CHECK(bracket_span_rank(Step2Algebrad({b, b})) == 1);
  CHECK(bracket_span_rank(Step2Algebrad({MatrixXd::Zero(2, 2)})) == 0);
}

TEST_CASE("scalar cast round-trips")
{
  Rng rng(3);
  const Step2Algebrad a = random_algebra(4, 2, rng);
  const auto wide = a.cast<long double>();
  CHECK(wide.n1() == 4);
  CHECK(wide.cast<double>() == a);
}
