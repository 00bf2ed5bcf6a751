#include "nilfock/clifford.hpp"

#include "nilfock/errors.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <array>

namespace nilfock
{

namespace
{

using Quaternion = std::array<double, 4>;
using Octonion = std::array<double, 8>;

Quaternion quaternion_product(const Quaternion& p, const Quaternion& q)
{
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Quaternion conjugate(const Quaternion& q)
{
  return {q[0], -q[1], -q[2], -q[3]};
}

Quaternion add(const Quaternion& p, const Quaternion& q, double sign = 1.0)
{
  return {p[0] + sign * q[0], p[1] + sign * q[1], p[2] + sign * q[2], p[3] + sign * q[3]};
}

// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
Octonion octonion_product(const Octonion& x, const Octonion& y)
{
  const Quaternion a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  const Quaternion c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  const Quaternion first = add(quaternion_product(a, c), quaternion_product(conjugate(d), b), -1.0);
  const Quaternion second = add(quaternion_product(d, a), quaternion_product(b, conjugate(c)));
  return {first[0], first[1], first[2], first[3], second[0], second[1], second[2], second[3]};
}

std::vector<Eigen::MatrixXd> base_generators(int m)
{
  std::vector<Eigen::MatrixXd> out;
  if (m == 1)
  {
    Eigen::MatrixXd e(2, 2);
    e << 0, -1, 1, 0;
    out.push_back(e);
  }
  else if (m <= 3)
  {
    for (int a = 1; a <= m; ++a)
      out.emplace_back(quaternion_left_multiplication(a));
  }
  else if (m <= 7)
  {
    for (int a = 1; a <= m; ++a)
      out.push_back(octonion_left_multiplication(a));
  }
  else
  {
    // m == 8: diag(L_a, -L_a) for the seven octonion units, plus the block rotation
    const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(8, 8);
    for (int a = 1; a <= 7; ++a)
    {
      const Eigen::MatrixXd l = octonion_left_multiplication(a);
      Eigen::MatrixXd e(16, 16);
      e << l, zero, zero, -l;
      out.push_back(e);
    }
    Eigen::MatrixXd e(16, 16);
    e << zero, -Eigen::MatrixXd::Identity(8, 8), Eigen::MatrixXd::Identity(8, 8), zero;
    out.push_back(e);
  }
  return out;
}

} // namespace

Eigen::Matrix4d quaternion_left_multiplication(int i)
{
  if (i < 0 || i > 3)
    throw InputError("quaternion_left_multiplication: index out of range");
  Eigen::Matrix4d l;
  Quaternion u{0, 0, 0, 0};
  u[i] = 1.0;
  for (int k = 0; k < 4; ++k)
  {
    Quaternion e{0, 0, 0, 0};
    e[k] = 1.0;
    const Quaternion col = quaternion_product(u, e);
    for (int r = 0; r < 4; ++r)
      l(r, k) = col[r];
  }
  return l;
}

Eigen::MatrixXd octonion_left_multiplication(int i)
{
  if (i < 0 || i > 7)
    throw InputError("octonion_left_multiplication: index out of range");
  Eigen::MatrixXd l(8, 8);
  Octonion u{};
  u[i] = 1.0;
  for (int k = 0; k < 8; ++k)
  {
    Octonion e{};
    e[k] = 1.0;
    const Octonion col = octonion_product(u, e);
    for (int r = 0; r < 8; ++r)
      l(r, k) = col[r];
  }
  return l;
}

std::vector<Eigen::MatrixXd> clifford_generators(int m)
{
  if (m < 1)
    throw InputError("clifford_generators: m must be positive");
  if (m <= 8)
    return base_generators(m);

  const std::vector<Eigen::MatrixXd> inner = clifford_generators(m - 8);
  const std::vector<Eigen::MatrixXd> outer = base_generators(8);
  Eigen::MatrixXd volume = Eigen::MatrixXd::Identity(16, 16);
  for (const auto& f : outer)
    volume = volume * f;

  const Eigen::Index d = inner.front().rows();
  std::vector<Eigen::MatrixXd> out;
  for (const auto& e : inner)
    out.push_back(Eigen::kroneckerProduct(e, volume).eval());
  for (const auto& f : outer)
    out.push_back(Eigen::kroneckerProduct(Eigen::MatrixXd::Identity(d, d), f).eval());
  return out;
}

int clifford_irrep_dim(int m)
{
  return static_cast<int>(clifford_generators(m).front().rows());
}

double clifford_relation_defect(const std::vector<Eigen::MatrixXd>& generators)
{
  double defect = 0.0;
  for (std::size_t a = 0; a < generators.size(); ++a)
    for (std::size_t b = a; b < generators.size(); ++b)
    {
      const Eigen::Index d = generators[a].rows();
      Eigen::MatrixXd r = generators[a] * generators[b] + generators[b] * generators[a];
      if (a == b)
        r += 2.0 * Eigen::MatrixXd::Identity(d, d);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(r);
      defect = std::max(defect, svd.singularValues()(0));
    }
  return defect;
}

int commutant_dimension(const std::vector<Eigen::MatrixXd>& generators, double tolerance)
{
  const Eigen::Index d = generators.front().rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  // vec(C e - e C) = (e^T (x) I - I (x) e) vec(C); sum the normal equations
  Eigen::MatrixXd normal = Eigen::MatrixXd::Zero(d * d, d * d);
  for (const auto& e : generators)
  {
    const Eigen::MatrixXd k = Eigen::kroneckerProduct(e.transpose(), id) - Eigen::kroneckerProduct(id, e);
    normal.noalias() += k.transpose() * k;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(normal, Eigen::EigenvaluesOnly);
  int dim = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    if (eig.eigenvalues()(i) < tolerance)
      ++dim;
  return dim;
}

int irreducible_commutant_dimension(int m)
{
  // real, complex or quaternionic type of the irreducible module, periodic mod 8
  static constexpr std::array<int, 8> table{1, 2, 4, 4, 4, 2, 1, 1};
  return table[static_cast<std::size_t>(m % 8)];
}

} // namespace nilfock
