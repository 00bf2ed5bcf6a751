#include "nilfock/sampling.hpp"

#include "nilfock/errors.hpp"

#include <cmath>
#include <numbers>

namespace nilfock
{

double Rng::uniform()
{
  return static_cast<double>(m_engine() >> 11) * 0x1.0p-53;
}

double Rng::normal()
{
  if (m_has_spare)
  {
    m_has_spare = false;
    return m_spare;
  }
  double u1 = uniform();
  while (u1 <= 0.0)
    u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  m_spare = radius * std::sin(angle);
  m_has_spare = true;
  return radius * std::cos(angle);
}

std::vector<Eigen::VectorXd> circle_points(int count)
{
  std::vector<Eigen::VectorXd> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
  {
    const double angle = 2.0 * std::numbers::pi * i / count;
    Eigen::VectorXd p(2);
    p << std::cos(angle), std::sin(angle);
    out.push_back(p);
  }
  return out;
}

std::vector<Eigen::VectorXd> fibonacci_sphere(int count)
{
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Eigen::VectorXd> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
  {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    Eigen::VectorXd p(3);
    p << r * std::cos(phi), r * std::sin(phi), z;
    out.push_back(p);
  }
  return out;
}

std::vector<Eigen::VectorXd> hyperspherical_grid(int dim, int count)
{
  if (dim < 2)
    throw InputError("hyperspherical_grid: dimension must be at least 2");
  const int angles = dim - 1;
  const int per_angle = std::max(2, static_cast<int>(std::ceil(std::pow(count, 1.0 / angles))));

  std::vector<Eigen::VectorXd> out;
  std::vector<int> idx(angles, 0);
  while (true)
  {
    // polar angles in (0, pi) at cell midpoints, last angle over [0, 2 pi)
    Eigen::VectorXd p(dim);
    double sin_prod = 1.0;
    for (int a = 0; a < angles; ++a)
    {
      double phi;
      if (a + 1 < angles)
        phi = std::numbers::pi * (idx[a] + 0.5) / per_angle;
      else
        phi = 2.0 * std::numbers::pi * idx[a] / per_angle;
      p(a) = sin_prod * std::cos(phi);
      sin_prod *= std::sin(phi);
      if (a + 1 == angles)
        p(a + 1) = sin_prod;
    }
    out.push_back(p.normalized());

    int a = angles - 1;
    while (a >= 0 && ++idx[a] == per_angle)
      idx[a--] = 0;
    if (a < 0)
      break;
  }
  return out;
}

std::vector<Eigen::VectorXd> sphere_samples(int dim, int count)
{
  if (dim < 1)
    throw InputError("sphere_samples: dimension must be positive");
  if (dim == 1)
    return {Eigen::VectorXd::Constant(1, 1.0), Eigen::VectorXd::Constant(1, -1.0)};
  if (dim == 2)
    return circle_points(count);
  if (dim == 3)
    return fibonacci_sphere(count);
  return hyperspherical_grid(dim, count);
}

std::vector<Eigen::VectorXd> random_sphere_points(int dim, int count, Rng& rng)
{
  std::vector<Eigen::VectorXd> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count)
  {
    Eigen::VectorXd p(dim);
    for (int i = 0; i < dim; ++i)
      p(i) = rng.normal();
    const double norm = p.norm();
    if (norm > 1e-12)
      out.push_back(p / norm);
  }
  return out;
}

} // namespace nilfock
