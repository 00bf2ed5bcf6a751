#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilfock/fock.hpp"
#include "nilfock/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

using namespace nilfock;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace
{

// Symmetric tensors realized inside the full tensor power (C^n)^{(x)k}.
struct TensorOracle
{
  int n;

  static long power(int n, int k)
  {
    long p = 1;
    for (int i = 0; i < k; ++i)
      p *= n;
    return p;
  }

  // average over permutations of the tensor factors
  VectorXcd symmetrize(const VectorXcd& v, int k) const
  {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    VectorXcd out = VectorXcd::Zero(v.size());
    int count = 0;
    do
    {
      for (long idx = 0; idx < v.size(); ++idx)
      {
        std::vector<int> digits(k);
        long rest = idx;
        for (int f = k - 1; f >= 0; --f)
        {
          digits[f] = static_cast<int>(rest % n);
          rest /= n;
        }
        long target = 0;
        for (int f = 0; f < k; ++f)
          target = target * n + digits[perm[f]];
        out(target) += v(idx);
      }
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out / static_cast<double>(count);
  }

  VectorXcd occupation_state(const MultiIndex& alpha) const
  {
    const int k = std::accumulate(alpha.begin(), alpha.end(), 0);
    long idx = 0;
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < alpha[j]; ++c)
        idx = idx * n + j;
    VectorXcd v = VectorXcd::Zero(power(n, k));
    v(idx) = 1.0;
    const VectorXcd s = symmetrize(v, k);
    return s / s.norm();
  }

  VectorXcd shift(const VectorXcd& w, const VectorXcd& v, int k) const
  {
    VectorXcd t(power(n, k + 1));
    for (int a = 0; a < n; ++a)
      t.segment(a * v.size(), v.size()) = w(a) * v;
    return symmetrize(t, k + 1);
  }
};

double max_abs(const MatrixXcd& m)
{
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

MatrixXcd interior(const FockOperator& op, int top_level)
{
  const auto& t = op.truncation();
  const Eigen::Index size = t->level_offset(top_level + 1);
  return op.dense().topLeftCorner(size, size);
}

} // namespace

TEST_CASE("basis sizes and order")
{
  auto t = enumerate_basis(1, 3);
  CHECK(t->dimension() == 4);
  for (int k = 0; k <= 3; ++k)
    CHECK(t->level_size(k) == 1);

  t = enumerate_basis(2, 2);
  CHECK(t->dimension() == 6);
  CHECK(t->level_size(2) == 3);
  CHECK(t->state(3) == MultiIndex{2, 0});
  CHECK(t->state(4) == MultiIndex{1, 1});
  CHECK(t->state(5) == MultiIndex{0, 2});
  CHECK(t->index_of({1, 1}) == 4);
  CHECK_FALSE(t->index_of({3, 0}).has_value());

  CHECK(enumerate_basis(3, 4)->level_size(4) == 15);
  CHECK(enumerate_basis(2, 64)->dimension() == 2145);
  CHECK_THROWS_AS(enumerate_basis(8, 20), InputError);
  CHECK_THROWS_AS(FockTruncation(2, 10, 10), InputError);
}

TEST_CASE("creation and annihilation")
{
  const auto t = enumerate_basis(1, 3);
  const MatrixXcd a_star = creation(t, 1).dense();
  CHECK(std::abs(a_star(3, 2) - std::sqrt(3.0)) <= 1e-15);
  CHECK(max_abs(a_star.col(3)) == 0.0);

  const auto t2 = enumerate_basis(2, 6);
  for (int j = 1; j <= 2; ++j)
  {
    const FockOperator c = creation(t2, j);
    const FockOperator a = annihilation(t2, j);
    CHECK(max_abs(a.dense() - c.dense().adjoint()) == 0.0);
    CHECK(max_abs(a.dense().col(0)) == 0.0);
    CHECK(c.level_shift() == 1);
    CHECK(a.level_shift() == -1);
  }
  CHECK_THROWS_AS(creation(t2, 3), InputError);
  CHECK_THROWS_AS(creation(t2, 0), InputError);
}

TEST_CASE("interior canonical commutation relations")
{
  const auto t = enumerate_basis(3, 7);
  const FockOperator id = identity(t);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
    {
      FockOperator c = commutator(annihilation(t, i), creation(t, j));
      if (i == j)
        c -= id;
      CHECK(interior_norm(c, t->top_level() - 1) <= 1e-12);
      CHECK(interior_norm(commutator(creation(t, i), creation(t, j)), t->top_level()) <= 1e-12);
    }
}

TEST_CASE("shift matches brute-force symmetrization")
{
  const TensorOracle oracle{2};
  const auto t = enumerate_basis(2, 3);
  VectorXcd w(2);
  w << Complex(0.3, -0.4), Complex(-1.1, 0.2);
  const MatrixXcd s = shift(t, w).dense();
  for (Eigen::Index col = 0; col < t->level_offset(3); ++col)
  {
    const MultiIndex& alpha = t->state(col);
    const int k = t->level_of(col);
    const VectorXcd image = oracle.shift(w, oracle.occupation_state(alpha), k);
    for (Eigen::Index row = t->level_offset(k + 1); row < t->level_offset(k + 2); ++row)
    {
      const Complex expected = oracle.occupation_state(t->state(row)).dot(image);
      CHECK(std::abs(s(row, col) - expected) <= 1e-14);
    }
  }
  const auto e1 = shift(t, 1).dense();
  CHECK(std::abs(e1(*t->index_of({2, 1}), *t->index_of({1, 1})) - std::sqrt(2.0 / 3.0)) <= 1e-15);
}

TEST_CASE("single-mode shift is the unilateral shift")
{
  const auto t = enumerate_basis(1, 10);
  const MatrixXcd s = shift(t, 1).dense();
  MatrixXcd expected = MatrixXcd::Zero(11, 11);
  for (int k = 0; k < 10; ++k)
    expected(k + 1, k) = 1.0;
  CHECK(max_abs(s - expected) == 0.0);
}

TEST_CASE("shift diagonal sum and norm")
{
  const auto t = enumerate_basis(2, 10);
  const FockOperator s1 = shift(t, 1);
  const FockOperator s2 = shift(t, 2);
  const FockOperator sum = s1.adjoint() * s1 + s2.adjoint() * s2;
  const MatrixXcd d = interior(sum, 9);
  for (Eigen::Index i = 0; i < d.rows(); ++i)
  {
    const double k = t->level_of(i);
    CHECK(std::abs(d(i, i) - (k + 2.0) / (k + 1.0)) <= 1e-14);
  }
  CHECK(max_abs(d - MatrixXcd(d.diagonal().asDiagonal())) <= 1e-15);

  VectorXcd w(2);
  w << Complex(0.6, 0.0), Complex(0.0, 0.8);
  double previous = 0.0;
  for (int k : {8, 16, 32})
  {
    const double norm = operator_norm(shift(enumerate_basis(2, k), w));
    CHECK(norm <= 1.0 + 1e-12);
    CHECK(norm >= previous);
    previous = norm;
  }
  CHECK(previous >= 0.97);
}

TEST_CASE("number operator and flow")
{
  const auto t = enumerate_basis(2, 5);
  const MatrixXcd n = number_operator(t).dense();
  CHECK(n(0, 0) == Complex(0.0));
  CHECK(n(5, 5) == Complex(2.0));
  CHECK(max_abs(flow_unitary(t, 0.0).dense() - MatrixXcd::Identity(21, 21)) == 0.0);
  const MatrixXcd u = flow_unitary(t, 1.3).dense();
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    CHECK(std::abs(std::abs(u(i, i)) - 1.0) <= 1e-15);
  CHECK(max_abs(u * u.adjoint() - MatrixXcd::Identity(21, 21)) <= 1e-15);
}

TEST_CASE("level-shift bookkeeping")
{
  const auto t = enumerate_basis(2, 8);
  const FockOperator a = creation(t, 1) * creation(t, 2);
  CHECK(a.level_shift() == 2);
  CHECK(a.respects_band());
  const FockOperator b = a * annihilation(t, 1);
  CHECK(b.level_shift() == 1);
  CHECK(b.respects_band());
  const FockOperator mixed = creation(t, 1) + annihilation(t, 2);
  CHECK_FALSE(mixed.level_shift().has_value());
  CHECK(mixed.band() == ShiftBand{-1, 1});
  CHECK(mixed.respects_band());
  const FockOperator lying(t, creation(t, 1).matrix(), ShiftBand{0, 0});
  CHECK_FALSE(lying.respects_band());
  CHECK_THROWS_AS(creation(t, 1) + creation(enumerate_basis(2, 7), 1), PreconditionError);
}

TEST_CASE("block norm agrees with a dense SVD")
{
  const auto t = enumerate_basis(2, 9);
  VectorXcd w(2);
  w << Complex(0.2, 0.5), Complex(-0.7, 0.1);
  const FockOperator s = shift(t, w) * creation(t, 2);
  Eigen::JacobiSVD<MatrixXcd> svd(s.dense());
  CHECK(operator_norm(s) == doctest::Approx(svd.singularValues()(0)).epsilon(1e-12));
  const FockOperator mixed = s + s.adjoint();
  Eigen::JacobiSVD<MatrixXcd> svd2(mixed.dense());
  CHECK(operator_norm(mixed) == doctest::Approx(svd2.singularValues()(0)).epsilon(1e-12));
}

TEST_CASE("block bound dominates the norm")
{
  const auto t = enumerate_basis(3, 6);
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial)
  {
    VectorXcd w(3);
    for (int j = 0; j < 3; ++j)
      w(j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const FockOperator s = shift(t, w) * annihilation(t, 1 + trial % 3);
    Eigen::JacobiSVD<MatrixXcd> svd(s.dense());
    CHECK(block_norm_bound(s) >= svd.singularValues()(0) * (1.0 - 1e-14));
    CHECK(operator_norm(s) == doctest::Approx(svd.singularValues()(0)).epsilon(1e-12));
  }
  const FockOperator n = number_operator(t);
  CHECK(block_norm_bound(n) == 6.0);
  CHECK_THROWS_AS(block_norm_bound(creation(t, 1) + annihilation(t, 1)), InputError);
}

TEST_CASE("compactness defect")
{
  const auto t = enumerate_basis(2, 64);
  const FockOperator id = identity(t);
  for (int level : {0, 8, 63, 64})
    CHECK(compactness_defect(id, level) == doctest::Approx(1.0));

  const FockOperator s1 = shift(t, 1);
  const FockOperator c = commutator(s1.adjoint(), s1);
  const double d8 = compactness_defect(c, 8, 1);
  const double d16 = compactness_defect(c, 16, 1);
  const double d32 = compactness_defect(c, 32, 1);
  CHECK(d16 <= 0.6 * d8);
  CHECK(d32 <= 0.6 * d16);
  CHECK(d8 == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  // the top level keeps an order-one truncation artifact
  CHECK(compactness_defect(c, 8, 0) >= 0.5);

  const FockOperator s2 = shift(t, 2);
  CHECK(compactness_defect(commutator(s1, s2), 0) <= 1e-12);
  CHECK(compactness_defect(commutator(s2.adjoint(), s1), 16, 1) <=
        0.6 * compactness_defect(commutator(s2.adjoint(), s1), 8, 1));
}

TEST_CASE("operator dump round trip")
{
  const auto t = enumerate_basis(2, 4);
  VectorXcd w(2);
  w << Complex(1.0 / 3.0, 0.1), Complex(-0.25, 2.0 / 7.0);
  for (const FockOperator& op : {shift(t, w), FockOperator(shift(t, w) + shift(t, w).adjoint())})
  {
    std::stringstream ss;
    write_dump(ss, op);
    const FockOperator back = read_dump(ss);
    CHECK(back.band() == op.band());
    CHECK(max_abs(back.dense() - op.dense()) == 0.0);
  }
  std::stringstream header;
  write_dump(header, shift(t, w) + shift(t, w).adjoint());
  CHECK(header.str().rfind("fockop 2 4 -1:1\n", 0) == 0);

  std::stringstream bad("fockop 2 4 1\nentry 0 0 1 0\n");
  CHECK_THROWS_AS(read_dump(bad), InputError);
  std::stringstream range("fockop 2 4 1\nentry 99 0 1 0\n");
  CHECK_THROWS_AS(read_dump(range), InputError);
  std::stringstream missing("entry 1 0 1 0\n");
  CHECK_THROWS_AS(read_dump(missing), InputError);
}
