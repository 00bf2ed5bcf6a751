#ifndef NILFOCK_SYMPLECTIC_HPP
#define NILFOCK_SYMPLECTIC_HPP

#include "nilfock/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace nilfock
{

/// Skew form omega, compatible complex structure J and the positive form
/// (x, y) -> omega(Jx, y), all as matrices in the same basis.
template <typename Scalar>
struct CompatibleTriple
{
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix omega;
  Matrix J;
  Matrix positive_form;
};

/// Columns X_1..X_n and Y_1..Y_n with omega(X_i, Y_j) = delta_ij and J X_j = -Y_j.
template <typename Scalar>
struct DarbouxBasis
{
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix X;
  Matrix Y;

  Eigen::Index n() const { return X.cols(); }
  /// Change-of-basis matrix [X_1 .. X_n Y_1 .. Y_n].
  Matrix matrix() const
  {
    Matrix p(X.rows(), 2 * n());
    p << X, Y;
    return p;
  }
};

/// [[0, I], [-I, 0]] of size 2n.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> standard_symplectic(Eigen::Index n)
{
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  m.topRightCorner(n, n).setIdentity();
  m.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
  return m;
}

/// Complex structure compatible with omega, as the polar factor of the metric-skew
/// operator A = metric^{-1} Omega: J = A (-A^2)^{-1/2}. Degree-0 homogeneous in omega.
template <typename DerivedO, typename DerivedM>
CompatibleTriple<typename DerivedO::Scalar> compatible_J(const Eigen::MatrixBase<DerivedO>& omega_expr,
                                                         const Eigen::MatrixBase<DerivedM>& metric_expr,
                                                         typename DerivedO::Scalar rank_tolerance = 1e-10)
{
  using Scalar = typename DerivedO::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Matrix omega = omega_expr;
  const Matrix metric = metric_expr;
  const Eigen::Index n = omega.rows();
  if (omega.cols() != n || metric.rows() != n || metric.cols() != n)
    throw InputError("compatible_J: shape mismatch");
  if (n % 2 != 0)
    throw NumericalError("compatible_J: skew form on an odd-dimensional space is degenerate", 0.0);

  // work in metric-orthonormal coordinates, where A becomes an ordinary skew matrix
  Eigen::SelfAdjointEigenSolver<Matrix> metric_eig(metric);
  if (metric_eig.info() != Eigen::Success || metric_eig.eigenvalues().minCoeff() <= Scalar(0))
    throw InputError("compatible_J: metric is not positive definite");
  const Matrix sqrt_metric = metric_eig.eigenvectors() * metric_eig.eigenvalues().cwiseSqrt().asDiagonal() *
                             metric_eig.eigenvectors().transpose();
  const Matrix inv_sqrt_metric = metric_eig.eigenvectors() *
                                 metric_eig.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                                 metric_eig.eigenvectors().transpose();
  Matrix a = inv_sqrt_metric * omega * inv_sqrt_metric;
  a = Scalar(0.5) * (a - a.transpose());

  Eigen::SelfAdjointEigenSolver<Matrix> eig(Matrix(a.transpose() * a));
  const auto& lambda = eig.eigenvalues();
  const Scalar sigma_max = std::sqrt(std::max(lambda.maxCoeff(), Scalar(0)));
  const Scalar sigma_min = std::sqrt(std::max(lambda.minCoeff(), Scalar(0)));
  if (!(sigma_min > rank_tolerance * sigma_max))
    throw NumericalError("compatible_J: omega is degenerate, sigma_min", static_cast<double>(sigma_min));

  Matrix j = a * eig.eigenvectors() * lambda.cwiseSqrt().cwiseInverse().asDiagonal() *
             eig.eigenvectors().transpose();
  // Newton steps for the orthogonal polar factor clean up rounding from the eigensolver
  for (int it = 0; it < 2; ++it)
  {
    j = Scalar(0.5) * (j + Matrix(j.inverse().transpose()));
    j = Scalar(0.5) * (j - j.transpose());
  }

  CompatibleTriple<Scalar> out;
  out.omega = omega;
  out.J = inv_sqrt_metric * j * sqrt_metric;
  out.positive_form = out.J.transpose() * omega;
  out.positive_form = Scalar(0.5) * (out.positive_form + out.positive_form.transpose());
  return out;
}

/// Max-norm residuals of the triple invariants: |J^2 + I|, |J^T Omega J - Omega|.
template <typename Scalar>
std::pair<Scalar, Scalar> triple_residuals(const CompatibleTriple<Scalar>& t)
{
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = t.J.rows();
  const Scalar square = (t.J * t.J + Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  const Scalar invariance = (t.J.transpose() * t.omega * t.J - t.omega).cwiseAbs().maxCoeff();
  return {square, invariance};
}

/// Largest deviation of P^T Omega P from the standard symplectic matrix, and of
/// J X_j + Y_j, J Y_j - X_j from zero.
template <typename Scalar>
Scalar darboux_residual(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& omega,
                        const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& J,
                        const DarbouxBasis<Scalar>& basis)
{
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Matrix p = basis.matrix();
  Scalar r = (p.transpose() * omega * p - standard_symplectic<Scalar>(basis.n())).cwiseAbs().maxCoeff();
  if (J.size() > 0)
  {
    r = std::max(r, (J * basis.X + basis.Y).cwiseAbs().maxCoeff());
    r = std::max(r, (J * basis.Y - basis.X).cwiseAbs().maxCoeff());
  }
  return r;
}

/// Greedy J-compatible Darboux basis: normalize a seed in the positive form, pair it with
/// Y = -J X, and recurse on the omega-complement, which for a compatible J coincides with
/// the positive-form orthogonal complement. Seeds are the standard basis vectors in order.
template <typename Scalar>
DarbouxBasis<Scalar> darboux_basis(const CompatibleTriple<Scalar>& t, Scalar check_tolerance = Scalar(1e-8))
{
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Eigen::Index dim = t.omega.rows();
  const Eigen::Index n = dim / 2;
  const Matrix& p = t.positive_form;

  DarbouxBasis<Scalar> out{Matrix::Zero(dim, n), Matrix::Zero(dim, n)};
  Eigen::Index found = 0;
  for (Eigen::Index seed = 0; seed < dim && found < n; ++seed)
  {
    Vector v = Vector::Unit(dim, seed);
    // two Gram-Schmidt passes against the chosen (positive-form orthonormal) vectors
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index k = 0; k < found; ++k)
      {
        v -= out.X.col(k).dot(p * v) * out.X.col(k);
        v -= out.Y.col(k).dot(p * v) * out.Y.col(k);
      }
    const Scalar norm2 = v.dot(p * v);
    if (!(norm2 > Scalar(1e-8) * p(seed, seed)))
      continue;
    const Vector x = v / std::sqrt(norm2);
    out.X.col(found) = x;
    out.Y.col(found) = -t.J * x;
    ++found;
  }
  if (found != n)
    throw NumericalError("darboux_basis: could not complete the basis", static_cast<double>(n - found));

  const Scalar residual = darboux_residual(t.omega, t.J, out);
  if (!(residual <= check_tolerance))
    throw NumericalError("darboux_basis: invariants violated", static_cast<double>(residual));
  return out;
}

/// Rescales every basis vector by `factor`.
template <typename Scalar>
DarbouxBasis<Scalar> scaled(const DarbouxBasis<Scalar>& basis, Scalar factor)
{
  return {factor * basis.X, factor * basis.Y};
}

} // namespace nilfock

#endif // NILFOCK_SYMPLECTIC_HPP
