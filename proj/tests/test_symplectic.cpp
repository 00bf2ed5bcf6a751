#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilfock/sampling.hpp"
#include "nilfock/symplectic.hpp"

using namespace nilfock;
using Eigen::MatrixXd;

namespace
{

MatrixXd random_matrix(Rng& rng, int n)
{
  MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = rng.uniform(-1.0, 1.0);
  return m;
}

MatrixXd random_skew(Rng& rng, int n)
{
  const MatrixXd m = random_matrix(rng, n);
  return m - m.transpose();
}

MatrixXd random_spd(Rng& rng, int n)
{
  const MatrixXd m = random_matrix(rng, n);
  return m * m.transpose() + 0.5 * MatrixXd::Identity(n, n);
}

double max_abs(const MatrixXd& m)
{
  return m.cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("standard form is its own complex structure")
{
  const MatrixXd omega = standard_symplectic(2);
  const auto t = compatible_J(omega, MatrixXd::Identity(4, 4));
  CHECK(max_abs(t.J - omega) <= 1e-15);
  CHECK(max_abs(t.positive_form - MatrixXd::Identity(4, 4)) <= 1e-15);
  const auto basis = darboux_basis(t);
  CHECK(max_abs(basis.matrix() - MatrixXd::Identity(4, 4)) <= 1e-15);
}

TEST_CASE("compatible triple invariants on random forms and metrics")
{
  Rng rng(31);
  for (int n : {2, 4, 6, 8})
    for (int trial = 0; trial < 5; ++trial)
    {
      const MatrixXd omega = random_skew(rng, n);
      const MatrixXd metric = random_spd(rng, n);
      const auto t = compatible_J(omega, metric);
      const auto [square, invariance] = triple_residuals(t);
      CHECK(square <= 1e-11);
      CHECK(invariance <= 1e-11);
      // J is an isometry of the metric
      CHECK(max_abs(t.J.transpose() * metric * t.J - metric) <= 1e-10);
      Eigen::SelfAdjointEigenSolver<MatrixXd> eig(t.positive_form);
      CHECK(eig.eigenvalues().minCoeff() > 0.0);

      const auto basis = darboux_basis(t);
      CHECK(darboux_residual(omega, t.J, basis) <= 1e-10);
      const MatrixXd p = basis.matrix();
      CHECK(max_abs(p.transpose() * omega * p - standard_symplectic(n / 2)) <= 1e-10);
      // the Darboux basis is orthonormal for the positive form
      CHECK(max_abs(p.transpose() * t.positive_form * p - MatrixXd::Identity(n, n)) <= 1e-10);
    }
}

TEST_CASE("complex structure is homogeneous of degree zero")
{
  Rng rng(4);
  const MatrixXd omega = random_skew(rng, 6);
  const MatrixXd metric = random_spd(rng, 6);
  const auto t1 = compatible_J(omega, metric);
  const auto t2 = compatible_J(MatrixXd(7.5 * omega), metric);
  CHECK(max_abs(t1.J - t2.J) <= 1e-12);
  const auto t3 = compatible_J(MatrixXd(-omega), metric);
  CHECK(max_abs(t1.J + t3.J) <= 1e-12);
}

TEST_CASE("rescaled Darboux basis for a rescaled form")
{
  Rng rng(12);
  const MatrixXd omega = random_skew(rng, 4);
  const auto t = compatible_J(omega, MatrixXd::Identity(4, 4));
  const auto basis = darboux_basis(t);
  const double lambda = 2.0;
  const MatrixXd omega4 = lambda * lambda * omega;
  CHECK(darboux_residual(omega4, t.J, scaled(basis, 1.0 / lambda)) <= 1e-12);
  // scaling the vectors by lambda multiplies the form by lambda^4, not lambda^2
  const MatrixXd p = scaled(basis, lambda).matrix();
  CHECK(max_abs(p.transpose() * omega4 * p - std::pow(lambda, 4) * standard_symplectic(2)) <= 1e-10);
}

TEST_CASE("degenerate forms are rejected")
{
  MatrixXd omega = MatrixXd::Zero(4, 4);
  omega(0, 1) = 1;
  omega(1, 0) = -1;
  CHECK_THROWS_AS(compatible_J(omega, MatrixXd::Identity(4, 4)), NumericalError);
  CHECK_THROWS_AS(compatible_J(MatrixXd(MatrixXd::Zero(3, 3)), MatrixXd::Identity(3, 3)), NumericalError);
  CHECK_THROWS_AS(compatible_J(standard_symplectic(1), MatrixXd::Identity(3, 3)), InputError);
  try
  {
    compatible_J(omega, MatrixXd::Identity(4, 4));
  }
  catch (const NumericalError& e)
  {
    CHECK(e.residual() <= 1e-15);
  }
}
