#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilfock/htype.hpp"
#include "nilfock/kirillov.hpp"

#include <numbers>

using namespace nilfock;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace
{

const Complex I(0.0, 1.0);

VectorXd vec(std::initializer_list<double> v)
{
  VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v)
    out(i++) = x;
  return out;
}

// position-like operator i(a^* + a)/sqrt(2) on one mode, built entry by entry
MatrixXcd single_mode_position(int K)
{
  MatrixXcd m = MatrixXcd::Zero(K + 1, K + 1);
  for (int k = 0; k < K; ++k)
  {
    m(k + 1, k) = I * std::sqrt(k + 1.0) / std::numbers::sqrt2;
    m(k, k + 1) = I * std::sqrt(k + 1.0) / std::numbers::sqrt2;
  }
  return m;
}

} // namespace

TEST_CASE("heisenberg images match the explicit ladder matrices")
{
  const KirillovRep r = build_rep(make_heisenberg(1), vec({1.0}), 8);
  CHECK((r.g1_images[0].dense() - single_mode_position(8)).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(r.g2_characters[0] == I);
}

TEST_CASE("canonical commutator of the Darboux pair")
{
  const KirillovRep r = build_rep(make_heisenberg(1), vec({1.0}), 12);
  FockOperator c = commutator(r.rho_X(1), r.rho_Y(1));
  c -= I * identity(r.truncation);
  CHECK(banded_norm_bound(compress(c, 0, 10)) <= 1e-10);
  CHECK(verify_homomorphism(r) <= 1e-10);
}

TEST_CASE("central character")
{
  const KirillovRep r = build_rep(make_complexified_heisenberg(1), vec({0.0, 1.0}), 6);
  const FockOperator z2 = r.rho_basis(r.algebra.n1() + 1);
  CHECK((z2.dense() - I * MatrixXcd::Identity(z2.dense().rows(), z2.dense().rows())).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK(r.g2_characters[0] == Complex(0.0));
}

TEST_CASE("homomorphism across the catalog")
{
  Rng rng(42);
  for (const auto& a : {make_heisenberg(2), make_quaternionic_heisenberg(1), make_complexified_heisenberg(1)})
  {
    for (int trial = 0; trial < 3; ++trial)
    {
      const VectorXd theta = random_sphere_points(static_cast<int>(a.n2()), 1, rng).front() * 1.7;
      const KirillovRep r = build_rep(a, theta, 10);
      CHECK(verify_homomorphism(r) <= 1e-10);
      CHECK(anti_hermitian_defect(r) <= 1e-12);
    }
  }
  const KirillovRep q = build_rep(make_quaternionic_heisenberg(1), vec({0.0, 0.0, 1.0}), 10);
  CHECK(verify_homomorphism(q) <= 1e-10);
}

TEST_CASE("homomorphism on a non-H-type regular algebra")
{
  const Step2Algebrad a = make_perturbed_quaternionic();
  const KirillovRep r = build_rep(a, vec({0.3, -0.5, 0.8}), 10);
  CHECK(verify_homomorphism(r) <= 1e-10);
  CHECK(anti_hermitian_defect(r) <= 1e-12);
}

TEST_CASE("a sign error is detected")
{
  KirillovRep r = build_rep(make_heisenberg(1), vec({1.0}), 12);
  r.g1_images[1] *= -1.0;
  CHECK(verify_homomorphism(r) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("degenerate directions are rejected")
{
  MatrixXd j(2, 2);
  j << 0, 1, -1, 0;
  MatrixXd b1 = MatrixXd::Zero(4, 4), b2 = MatrixXd::Zero(4, 4);
  b1.topLeftCorner(2, 2) = j;
  b2.bottomRightCorner(2, 2) = j;
  const Step2Algebrad split({b1, b2});
  CHECK_THROWS_AS(build_rep(split, vec({1.0, 0.0}), 4), PreconditionError);
  CHECK_NOTHROW(build_rep(split, vec({1.0, 1.0}), 4));
  CHECK_THROWS_AS(build_rep(make_heisenberg(1), vec({0.0}), 4), PreconditionError);
}

TEST_CASE("weyl shift identity")
{
  const KirillovRep h = build_rep(make_heisenberg(1), vec({1.0}), 8);
  CHECK(weyl_shift_identity(h).shift <= 1e-14);
  CHECK(weyl_shift_identity(h).adjoint <= 1e-14);
  const KirillovRep h2 = build_rep(make_heisenberg(2), vec({-1.0}), 12);
  CHECK(weyl_shift_identity(h2).max() <= 1e-12);
  const KirillovRep q = build_rep(make_quaternionic_heisenberg(1), vec({0.6, 0.0, -0.8}), 12);
  CHECK(weyl_shift_identity(q).max() <= 1e-12);
}

TEST_CASE("dilation homogeneity")
{
  const VectorXd theta = vec({0.6, 0.8, 0.0});
  const auto trivial = homogeneity_check(make_quaternionic_heisenberg(1), theta, 1.0, 6);
  CHECK(trivial.scaled_darboux_residual <= 1e-12);
  CHECK(trivial.literal_scaling_residual <= 1e-12);
  CHECK(trivial.pullback_residual == 0.0);

  const auto h = homogeneity_check(make_heisenberg(1), vec({1.0}), 2.0, 10);
  CHECK(h.scaled_darboux_residual <= 1e-12);
  CHECK(h.literal_scaling_residual == doctest::Approx(15.0));
  CHECK(h.central_character_residual <= 1e-15);
  CHECK(h.pullback_residual <= 1e-12);
  CHECK(h.rebuild_residual <= 1e-12);

  const auto p = homogeneity_check(make_perturbed_quaternionic(), theta, 0.7, 8);
  CHECK(p.scaled_darboux_residual <= 1e-12);
  CHECK(p.pullback_residual <= 1e-12);
  CHECK(p.rebuild_residual <= 1e-10);
}
