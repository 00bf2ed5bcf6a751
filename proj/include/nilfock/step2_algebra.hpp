#ifndef NILFOCK_STEP2_ALGEBRA_HPP
#define NILFOCK_STEP2_ALGEBRA_HPP

#include "nilfock/errors.hpp"
#include "nilfock/sampling.hpp"

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

namespace nilfock
{

/// Graded step-2 nilpotent Lie algebra g = g1 + g2 given by structure constants.
///
/// The bracket of two elements of g1 has k-th coordinate x^T B[k] y, so B[k](i,j)
/// is the z_k coordinate of [e_i, e_j]. All brackets involving g2 vanish. Each layer
/// carries a symmetric positive-definite metric (identity unless given).
template <typename Scalar>
class Step2Algebra
{
public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit Step2Algebra(std::vector<Matrix> brackets) : Step2Algebra(std::move(brackets), Matrix(), Matrix())
  {
  }

  Step2Algebra(std::vector<Matrix> brackets, Matrix g1_metric, Matrix g2_metric)
      : m_brackets(std::move(brackets)), m_g1_metric(std::move(g1_metric)), m_g2_metric(std::move(g2_metric))
  {
    if (m_brackets.empty())
      throw InputError("Step2Algebra: g2 must have positive dimension");
    const Eigen::Index n1 = m_brackets.front().rows();
    if (n1 < 1)
      throw InputError("Step2Algebra: g1 must have positive dimension");
    for (std::size_t k = 0; k < m_brackets.size(); ++k)
    {
      const Matrix& b = m_brackets[k];
      if (b.rows() != n1 || b.cols() != n1)
        throw InputError("Step2Algebra: bracket matrix " + std::to_string(k + 1) + " has wrong shape");
      if (b != Matrix(-b.transpose()))
        throw InputError("Step2Algebra: bracket matrix " + std::to_string(k + 1) + " is not skew-symmetric");
    }
    if (m_g1_metric.size() == 0)
      m_g1_metric = Matrix::Identity(n1, n1);
    if (m_g2_metric.size() == 0)
      m_g2_metric = Matrix::Identity(n2(), n2());
    check_metric(m_g1_metric, n1, "g1");
    check_metric(m_g2_metric, n2(), "g2");
  }

  Eigen::Index n1() const { return m_brackets.front().rows(); }
  Eigen::Index n2() const { return static_cast<Eigen::Index>(m_brackets.size()); }

  const std::vector<Matrix>& brackets() const { return m_brackets; }
  const Matrix& bracket_matrix(Eigen::Index k) const { return m_brackets.at(k); }
  const Matrix& g1_metric() const { return m_g1_metric; }
  const Matrix& g2_metric() const { return m_g2_metric; }

  /// Largest spectral norm among the bracket matrices; the scale for relative tolerances.
  Scalar bracket_scale() const
  {
    Scalar scale(0);
    for (const Matrix& b : m_brackets)
    {
      Eigen::JacobiSVD<Matrix> svd(b);
      scale = std::max(scale, svd.singularValues()(0));
    }
    return scale;
  }

  template <typename NewScalar>
  Step2Algebra<NewScalar> cast() const
  {
    std::vector<typename Step2Algebra<NewScalar>::Matrix> out;
    for (const Matrix& b : m_brackets)
      out.push_back(b.template cast<NewScalar>());
    return Step2Algebra<NewScalar>(std::move(out), m_g1_metric.template cast<NewScalar>(),
                                   m_g2_metric.template cast<NewScalar>());
  }

  bool operator==(const Step2Algebra& other) const
  {
    if (n1() != other.n1() || n2() != other.n2())
      return false;
    for (Eigen::Index k = 0; k < n2(); ++k)
      if (m_brackets[k] != other.m_brackets[k])
        return false;
    return m_g1_metric == other.m_g1_metric && m_g2_metric == other.m_g2_metric;
  }

private:
  static void check_metric(const Matrix& m, Eigen::Index n, const char* name)
  {
    if (m.rows() != n || m.cols() != n)
      throw InputError(std::string("Step2Algebra: ") + name + " metric has wrong shape");
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-12) * (Scalar(1) + m.cwiseAbs().maxCoeff()))
      throw InputError(std::string("Step2Algebra: ") + name + " metric is not symmetric");
    Eigen::LLT<Matrix> llt(m);
    if (llt.info() != Eigen::Success)
      throw InputError(std::string("Step2Algebra: ") + name + " metric is not positive definite");
  }

  std::vector<Matrix> m_brackets;
  Matrix m_g1_metric;
  Matrix m_g2_metric;
};

using Step2Algebrad = Step2Algebra<double>;

/// Element of g = g1 + g2 in graded coordinates.
template <typename Scalar>
struct GradedElement
{
  typename Step2Algebra<Scalar>::Vector g1;
  typename Step2Algebra<Scalar>::Vector g2;
};

/// [x, y] in g2 coordinates for x, y in g1.
template <typename Scalar, typename DerivedX, typename DerivedY>
typename Step2Algebra<Scalar>::Vector bracket(const Step2Algebra<Scalar>& a,
                                              const Eigen::MatrixBase<DerivedX>& x,
                                              const Eigen::MatrixBase<DerivedY>& y)
{
  if (x.size() != a.n1() || y.size() != a.n1())
    throw InputError("bracket: vectors must have length n1");
  typename Step2Algebra<Scalar>::Vector out(a.n2());
  for (Eigen::Index k = 0; k < a.n2(); ++k)
    out(k) = x.dot(a.bracket_matrix(k) * y);
  return out;
}

/// Matrix of the skew form (u, v) -> theta([u, v]), i.e. sum_k theta_k B[k].
template <typename Scalar, typename Derived>
typename Step2Algebra<Scalar>::Matrix omega_matrix(const Step2Algebra<Scalar>& a,
                                                   const Eigen::MatrixBase<Derived>& theta)
{
  if (theta.size() != a.n2())
    throw InputError("omega_matrix: theta must have length n2");
  typename Step2Algebra<Scalar>::Matrix out = Step2Algebra<Scalar>::Matrix::Zero(a.n1(), a.n1());
  for (Eigen::Index k = 0; k < a.n2(); ++k)
    out += theta(k) * a.bracket_matrix(k);
  return out;
}

/// n2 x n1 matrix of ad_x : g1 -> g2; row k is (B[k] x)^T.
template <typename Scalar, typename Derived>
typename Step2Algebra<Scalar>::Matrix ad_matrix(const Step2Algebra<Scalar>& a,
                                                const Eigen::MatrixBase<Derived>& x)
{
  if (x.size() != a.n1())
    throw InputError("ad_matrix: x must have length n1");
  typename Step2Algebra<Scalar>::Matrix out(a.n2(), a.n1());
  for (Eigen::Index k = 0; k < a.n2(); ++k)
    out.row(k) = -(a.bracket_matrix(k) * x).transpose();
  return out;
}

/// Inhomogeneous dilation: (x1, x2) -> (lambda x1, lambda^2 x2).
template <typename Scalar>
GradedElement<Scalar> dilate(const Step2Algebra<Scalar>& a, Scalar lambda, const GradedElement<Scalar>& v)
{
  if (!(lambda > Scalar(0)))
    throw InputError("dilate: lambda must be positive");
  if (v.g1.size() != a.n1() || v.g2.size() != a.n2())
    throw InputError("dilate: element has wrong dimensions");
  return {lambda * v.g1, lambda * lambda * v.g2};
}

/// Rank of the span of all brackets [e_i, e_j], i < j, inside g2.
template <typename Scalar>
Eigen::Index bracket_span_rank(const Step2Algebra<Scalar>& a, Scalar relative_tolerance = Scalar(1e-10))
{
  const Eigen::Index n1 = a.n1();
  const Eigen::Index pairs = n1 * (n1 - 1) / 2;
  if (pairs == 0)
    return 0;
  typename Step2Algebra<Scalar>::Matrix span(a.n2(), pairs);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < n1; ++i)
    for (Eigen::Index j = i + 1; j < n1; ++j, ++col)
      for (Eigen::Index k = 0; k < a.n2(); ++k)
        span(k, col) = a.bracket_matrix(k)(i, j);
  Eigen::JacobiSVD<typename Step2Algebra<Scalar>::Matrix> svd(span);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == Scalar(0))
    return 0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > relative_tolerance * s(0))
      ++rank;
  return rank;
}

/// Random algebra with independent uniform entries in [-1, 1], skew-symmetrized.
inline Step2Algebrad random_algebra(int n1, int n2, Rng& rng)
{
  std::vector<Eigen::MatrixXd> b;
  for (int k = 0; k < n2; ++k)
  {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n1, n1);
    for (int i = 0; i < n1; ++i)
      for (int j = i + 1; j < n1; ++j)
      {
        m(i, j) = rng.uniform(-1.0, 1.0);
        m(j, i) = -m(i, j);
      }
    b.push_back(std::move(m));
  }
  return Step2Algebrad(std::move(b));
}

} // namespace nilfock

#endif // NILFOCK_STEP2_ALGEBRA_HPP
