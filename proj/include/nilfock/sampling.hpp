#ifndef NILFOCK_SAMPLING_HPP
#define NILFOCK_SAMPLING_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

namespace nilfock
{

/// Portable pseudo-random source. Only the raw mt19937_64 stream is used, so
/// sequences are identical across standard library implementations.
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : m_engine(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal();
  std::uint64_t raw() { return m_engine(); }

private:
  std::mt19937_64 m_engine;
  bool m_has_spare = false;
  double m_spare = 0.0;
};

/// Evenly spaced points on the unit circle, the first one at angle 0.
std::vector<Eigen::VectorXd> circle_points(int count);

/// Golden-angle (Fibonacci) points on the unit 2-sphere.
std::vector<Eigen::VectorXd> fibonacci_sphere(int count);

/// Product-angle grid on S^{dim-1} with roughly `count` points.
std::vector<Eigen::VectorXd> hyperspherical_grid(int dim, int count);

/// Deterministic quasi-uniform sample of the unit sphere in R^dim:
/// {+1,-1} for dim 1, circle for dim 2, Fibonacci for dim 3, angle grid above.
std::vector<Eigen::VectorXd> sphere_samples(int dim, int count);

/// Normalized Gaussian vectors.
std::vector<Eigen::VectorXd> random_sphere_points(int dim, int count, Rng& rng);

} // namespace nilfock

#endif // NILFOCK_SAMPLING_HPP
