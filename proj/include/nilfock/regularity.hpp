#ifndef NILFOCK_REGULARITY_HPP
#define NILFOCK_REGULARITY_HPP

#include "nilfock/sampling.hpp"
#include "nilfock/step2_algebra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

namespace nilfock
{

struct RegularityOptions
{
  int grid_points = 4096;
  /// Regularity threshold on sigma_min(Omega_theta), relative to max_k |B[k]|.
  double relative_tolerance = 1e-8;
  /// Singular values below rank_tolerance * sigma_max count as zero.
  double rank_tolerance = 1e-10;
  /// Number of best grid points refined by local descent.
  int refine_starts = 3;
};

enum class RegularityFailure
{
  None,
  OddDimension,
  DegenerateForm,
  NotGenerated
};

template <typename Scalar>
struct RegularityVerdict
{
  using Vector = typename Step2Algebra<Scalar>::Vector;

  bool regular = false;
  RegularityFailure failure = RegularityFailure::None;
  /// Minimum of sigma_min(Omega_theta) found on the theta-sphere.
  Scalar min_sigma = Scalar(0);
  Scalar tolerance = Scalar(0);
  /// Minimizer on the unit sphere of g2^*; the witness when the form degenerates.
  Vector theta_witness;
  /// Null vector of Omega_theta at the witness: ad_x fails to be surjective there.
  Vector x_witness;
  bool generated = false;
  Eigen::Index generation_rank = 0;
};

namespace detail
{

template <typename Matrix>
typename Matrix::Scalar smallest_singular_value(const Matrix& m)
{
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  using Scalar = typename Matrix::Scalar;
  if (m.rows() < m.cols())
    return s.size() == 0 ? Scalar(0) : s(s.size() - 1);
  // more rows than columns: the map R^cols -> R^rows can never be onto
  if (m.rows() > m.cols())
    return Scalar(0);
  return s(s.size() - 1);
}

/// Orthonormal basis of the tangent space of the unit sphere at p (columns).
template <typename Vector>
Eigen::Matrix<typename Vector::Scalar, Eigen::Dynamic, Eigen::Dynamic> tangent_basis(const Vector& p)
{
  using Matrix = Eigen::Matrix<typename Vector::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = p.size();
  const Matrix column = p;
  Eigen::HouseholderQR<Matrix> qr(column);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return q.rightCols(n - 1);
}

/// Compass search for a local minimum of f on the unit sphere. Stops once the value drops
/// below stop_value, or once the step is below 1e-7 while the value still exceeds
/// positive_floor (a minimum that far above zero cannot be a degenerate direction).
template <typename Vector, typename Scalar>
std::pair<Vector, Scalar> sphere_compass_search(const std::function<Scalar(const Vector&)>& f, Vector start,
                                                Scalar step, Scalar stop_value, Scalar positive_floor,
                                                int max_iterations = 4000)
{
  Vector best = start.normalized();
  Scalar best_value = f(best);
  if (best.size() < 2)
    return {best, best_value};
  for (int it = 0; it < max_iterations && step > Scalar(1e-14) && best_value > stop_value; ++it)
  {
    if (step < Scalar(1e-7) && best_value > positive_floor)
      break;
    const auto basis = tangent_basis(best);
    bool improved = false;
    for (Eigen::Index d = 0; d < basis.cols() && !improved; ++d)
      for (int sign : {1, -1})
      {
        Vector trial = (best + Scalar(sign) * step * basis.col(d)).normalized();
        const Scalar value = f(trial);
        if (value < best_value)
        {
          best = trial;
          best_value = value;
          improved = true;
          break;
        }
      }
    if (!improved)
      step /= Scalar(2);
  }
  return {best, best_value};
}

} // namespace detail

/// True iff ad_x : g1 -> g2 has rank n2.
template <typename Scalar, typename Derived>
bool is_adx_surjective(const Step2Algebra<Scalar>& a, const Eigen::MatrixBase<Derived>& x,
                       Scalar rank_tolerance = Scalar(1e-10))
{
  if (x.size() != a.n1())
    throw InputError("is_adx_surjective: x must have length n1");
  if (x.norm() == Scalar(0))
    throw InputError("is_adx_surjective: x must be nonzero");
  const typename Step2Algebra<Scalar>::Matrix m = ad_matrix(a, x);
  Eigen::JacobiSVD<typename Step2Algebra<Scalar>::Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() < a.n2() || s(0) == Scalar(0))
    return false;
  return s(a.n2() - 1) > rank_tolerance * s(0);
}

/// Numerical rank of Omega_theta.
template <typename Scalar, typename Derived>
Eigen::Index omega_rank(const Step2Algebra<Scalar>& a, const Eigen::MatrixBase<Derived>& theta,
                        Scalar rank_tolerance = Scalar(1e-10))
{
  Eigen::JacobiSVD<typename Step2Algebra<Scalar>::Matrix> svd(omega_matrix(a, theta));
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == Scalar(0))
    return 0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rank_tolerance * s(0))
      ++rank;
  return rank;
}

/// Maps a Euclidean unit vector to the unit sphere of g2^* for the dual metric.
template <typename Scalar>
typename Step2Algebra<Scalar>::Matrix dual_sphere_map(const Step2Algebra<Scalar>& a)
{
  Eigen::LLT<typename Step2Algebra<Scalar>::Matrix> llt(a.g2_metric());
  return llt.matrixL();
}

template <typename Scalar>
struct SphereMinimum
{
  typename Step2Algebra<Scalar>::Vector theta;
  Scalar sigma = Scalar(0);
};

/// Minimum of sigma_min(Omega_theta) over the unit sphere of g2^*: deterministic grid
/// followed by compass-search refinement of the best grid points.
template <typename Scalar>
SphereMinimum<Scalar> omega_sphere_minimum(const Step2Algebra<Scalar>& a,
                                           const RegularityOptions& options = {})
{
  using Vector = typename Step2Algebra<Scalar>::Vector;
  using Matrix = typename Step2Algebra<Scalar>::Matrix;
  const Matrix to_dual = dual_sphere_map(a);
  const Scalar tol = Scalar(options.relative_tolerance) * a.bracket_scale();

  const std::function<Scalar(const Vector&)> f = [&](const Vector& s)
  { return detail::smallest_singular_value(Matrix(omega_matrix(a, Vector(to_dual * s)))); };

  const auto grid = sphere_samples(static_cast<int>(a.n2()), options.grid_points);
  std::vector<std::pair<Scalar, std::size_t>> values;
  values.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    values.emplace_back(f(grid[i].template cast<Scalar>()), i);
  // stable: ties keep grid order
  std::stable_sort(values.begin(), values.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });

  Vector best = grid[values.front().second].template cast<Scalar>();
  Scalar best_value = values.front().first;
  if (best_value > tol && a.n2() > 1)
  {
    const Scalar step =
        Scalar(std::numbers::pi) / std::pow(Scalar(grid.size()), Scalar(1) / Scalar(a.n2() - 1));
    const std::size_t starts = std::min<std::size_t>(options.refine_starts, values.size());
    for (std::size_t s = 0; s < starts; ++s)
    {
      auto [point, value] = detail::sphere_compass_search<Vector, Scalar>(
          f, grid[values[s].second].template cast<Scalar>(), step, tol * Scalar(1e-3), tol * Scalar(1e4));
      if (value < best_value)
      {
        best = point;
        best_value = value;
      }
    }
  }
  return {Vector(to_dual * best), best_value};
}

/// Decides whether every Omega_theta, theta != 0, is nondegenerate.
template <typename Scalar>
RegularityVerdict<Scalar> is_regular(const Step2Algebra<Scalar>& a, const RegularityOptions& options = {})
{
  using Vector = typename Step2Algebra<Scalar>::Vector;
  using Matrix = typename Step2Algebra<Scalar>::Matrix;
  RegularityVerdict<Scalar> verdict;
  verdict.tolerance = Scalar(options.relative_tolerance) * a.bracket_scale();
  verdict.generation_rank = bracket_span_rank(a, Scalar(options.rank_tolerance));
  verdict.generated = verdict.generation_rank == a.n2();

  if (a.n1() % 2 != 0)
  {
    verdict.failure = RegularityFailure::OddDimension;
    verdict.theta_witness = dual_sphere_map(a).col(0);
    Eigen::JacobiSVD<Matrix> svd(omega_matrix(a, verdict.theta_witness), Eigen::ComputeFullV);
    verdict.x_witness = svd.matrixV().col(a.n1() - 1);
    return verdict;
  }

  const SphereMinimum<Scalar> minimum = omega_sphere_minimum(a, options);
  verdict.min_sigma = minimum.sigma;
  verdict.theta_witness = minimum.theta;
  if (minimum.sigma <= verdict.tolerance)
  {
    verdict.failure = RegularityFailure::DegenerateForm;
    Eigen::JacobiSVD<Matrix> svd(omega_matrix(a, minimum.theta), Eigen::ComputeFullV);
    verdict.x_witness = svd.matrixV().col(a.n1() - 1);
    return verdict;
  }
  if (!verdict.generated)
  {
    verdict.failure = RegularityFailure::NotGenerated;
    return verdict;
  }
  verdict.regular = true;
  verdict.x_witness = Vector();
  return verdict;
}

template <typename Scalar>
struct AdSamplerResult
{
  bool all_surjective = true;
  /// Smallest sigma_{n2}(ad_x) after refinement, over all starts.
  Scalar min_sigma = Scalar(0);
  typename Step2Algebra<Scalar>::Vector witness;
};

/// Independent regularity route through ad_x. Each random start on the unit sphere of g1
/// is refined by compass search on sigma_{n2}(ad_x), since non-surjective directions form
/// a measure-zero set that raw sampling would miss. A start is non-surjective when the
/// refined value falls below the same relative tolerance as the omega route.
template <typename Scalar>
AdSamplerResult<Scalar> ad_surjectivity_sample(const Step2Algebra<Scalar>& a, int starts, Rng& rng,
                                               const RegularityOptions& options = {})
{
  using Vector = typename Step2Algebra<Scalar>::Vector;
  using Matrix = typename Step2Algebra<Scalar>::Matrix;
  const Scalar tol = Scalar(options.relative_tolerance) * a.bracket_scale();
  const std::function<Scalar(const Vector&)> f = [&](const Vector& x)
  { return detail::smallest_singular_value(Matrix(ad_matrix(a, x))); };

  AdSamplerResult<Scalar> result;
  result.min_sigma = std::numeric_limits<Scalar>::infinity();
  const auto points = random_sphere_points(static_cast<int>(a.n1()), starts, rng);
  for (const auto& p : points)
  {
    auto [x, value] = detail::sphere_compass_search<Vector, Scalar>(
        f, p.template cast<Scalar>(), Scalar(0.25), tol * Scalar(1e-3), tol * Scalar(1e4));
    if (value < result.min_sigma)
    {
      result.min_sigma = value;
      result.witness = x;
    }
    if (result.min_sigma <= tol)
      break;
  }
  result.all_surjective = result.min_sigma > tol;
  return result;
}

enum class OrbitKind
{
  Point,
  FlatAffine
};

template <typename Scalar>
struct OrbitDescriptor
{
  OrbitKind kind = OrbitKind::Point;
  typename Step2Algebra<Scalar>::Vector eta;
  typename Step2Algebra<Scalar>::Vector theta;
  Eigen::Index orbit_dimension = 0;
};

/// Coadjoint orbit through (eta, theta) for a regular algebra: characters for theta = 0,
/// flat affine orbits g1^* + {theta} otherwise. The infinitesimal action is
/// ad*_x(eta, theta) = (theta o ad_x, 0), so the orbit through theta != 0 sweeps the
/// image of Omega_theta.
template <typename Scalar>
OrbitDescriptor<Scalar> coadjoint_orbit(const Step2Algebra<Scalar>& a,
                                        const RegularityVerdict<Scalar>& verdict,
                                        const typename Step2Algebra<Scalar>::Vector& eta,
                                        const typename Step2Algebra<Scalar>::Vector& theta)
{
  if (eta.size() != a.n1() || theta.size() != a.n2())
    throw InputError("coadjoint_orbit: covectors have wrong dimensions");
  if (!verdict.regular)
    throw UnsupportedError("coadjoint_orbit: orbit classification requires a regular algebra");
  OrbitDescriptor<Scalar> out{OrbitKind::Point, eta, theta, 0};
  if (theta.isZero(Scalar(0)))
    return out;
  out.kind = OrbitKind::FlatAffine;
  out.orbit_dimension = omega_rank(a, theta);
  if (out.orbit_dimension != a.n1())
    throw NumericalError("coadjoint_orbit: flat orbit of a regular algebra lost rank",
                         static_cast<double>(a.n1() - out.orbit_dimension));
  return out;
}

template <typename Scalar>
OrbitDescriptor<Scalar> coadjoint_orbit(const Step2Algebra<Scalar>& a,
                                        const typename Step2Algebra<Scalar>::Vector& eta,
                                        const typename Step2Algebra<Scalar>::Vector& theta)
{
  return coadjoint_orbit(a, is_regular(a), eta, theta);
}

} // namespace nilfock

#endif // NILFOCK_REGULARITY_HPP
