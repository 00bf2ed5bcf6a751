#include "nilfock/htype.hpp"

#include "nilfock/clifford.hpp"
#include "nilfock/symplectic.hpp"

#include <cmath>
#include <string>

namespace nilfock
{

namespace
{

double spectral_norm(const Eigen::MatrixXd& m)
{
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

} // namespace

Eigen::MatrixXd structure_map(const Step2Algebrad& a, const Eigen::VectorXd& z)
{
  if (z.size() != a.n2())
    throw InputError("structure_map: z must have length n2");
  const Eigen::MatrixXd omega = omega_matrix(a, Eigen::VectorXd(a.g2_metric() * z));
  return -a.g1_metric().llt().solve(omega);
}

HTypeVerdict is_htype(const Step2Algebrad& a)
{
  HTypeVerdict verdict;
  const Eigen::Index n1 = a.n1();
  verdict.tolerance = 1e-8 * static_cast<double>(n1);

  // g2-orthonormal basis: columns of L^{-T} where g2_metric = L L^T
  Eigen::LLT<Eigen::MatrixXd> llt(a.g2_metric());
  const Eigen::MatrixXd basis = llt.matrixU().solve(Eigen::MatrixXd::Identity(a.n2(), a.n2()));

  std::vector<Eigen::MatrixXd> maps;
  for (Eigen::Index k = 0; k < a.n2(); ++k)
    maps.push_back(structure_map(a, basis.col(k)));

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n1, n1);
  for (std::size_t i = 0; i < maps.size(); ++i)
  {
    for (std::size_t j = i; j < maps.size(); ++j)
    {
      Eigen::MatrixXd r = maps[i] * maps[j] + maps[j] * maps[i];
      if (i == j)
        r += 2.0 * id;
      verdict.clifford_defect = std::max(verdict.clifford_defect, spectral_norm(r));
    }
    verdict.orthogonality_defect =
        std::max(verdict.orthogonality_defect,
                 spectral_norm(maps[i].transpose() * a.g1_metric() * maps[i] - a.g1_metric()));
  }
  verdict.is_htype = verdict.clifford_defect <= verdict.tolerance;
  if (verdict.is_htype)
    verdict.class_pair = std::make_pair(static_cast<int>(a.n2()), static_cast<int>(n1));
  return verdict;
}

HTypeClass classify_htype(const Step2Algebrad& a)
{
  if (!is_htype(a).is_htype)
    throw PreconditionError("classify_htype: algebra is not of H-type");
  const int m = static_cast<int>(a.n2());
  const int n1 = static_cast<int>(a.n1());
  const int d = clifford_irrep_dim(m);
  if (n1 % d != 0)
    throw DataCorruptionError("classify_htype: irreducible Cl(0," + std::to_string(m) + ") dimension " +
                              std::to_string(d) + " does not divide dim g1 = " + std::to_string(n1));
  return {m, n1, n1 / d};
}

Step2Algebrad make_heisenberg(int n)
{
  if (n < 1)
    throw InputError("make_heisenberg: n must be positive");
  return Step2Algebrad({standard_symplectic<double>(n)});
}

Step2Algebrad make_htype_from_clifford(int m, int multiplicity)
{
  if (m < 1 || multiplicity < 1)
    throw InputError("make_htype_from_clifford: m and multiplicity must be positive");
  const std::vector<Eigen::MatrixXd> gens = clifford_generators(m);
  const Eigen::Index d = gens.front().rows();
  std::vector<Eigen::MatrixXd> brackets;
  for (const auto& e : gens)
  {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(d * multiplicity, d * multiplicity);
    for (int c = 0; c < multiplicity; ++c)
      b.block(c * d, c * d, d, d) = e.transpose();
    brackets.push_back(std::move(b));
  }
  return Step2Algebrad(std::move(brackets));
}

Step2Algebrad make_quaternionic_heisenberg(int n)
{
  return make_htype_from_clifford(3, n);
}

Step2Algebrad make_complexified_heisenberg(int n)
{
  if (n < 1)
    throw InputError("make_complexified_heisenberg: n must be positive");
  const Eigen::MatrixXd omega = standard_symplectic<double>(n);
  const Eigen::Index m = 2 * n;
  const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(m, m);
  // omega_C(a + ib, c + id) = omega(a,c) - omega(b,d) + i (omega(a,d) + omega(b,c))
  Eigen::MatrixXd re(2 * m, 2 * m), im(2 * m, 2 * m);
  re << omega, zero, zero, -omega;
  im << zero, omega, omega, zero;
  return Step2Algebrad({re, im});
}

Perturbation regular_perturbation(const Step2Algebrad& base, double bound, std::uint64_t seed,
                                  double min_defect, int max_tries)
{
  if (!(bound > 0.0))
    throw InputError("regular_perturbation: bound must be positive");
  const Eigen::Index n1 = base.n1();
  for (int attempt = 0; attempt < max_tries; ++attempt)
  {
    Rng rng(seed + static_cast<std::uint64_t>(attempt));
    std::vector<Eigen::MatrixXd> c;
    double total = 0.0;
    for (Eigen::Index k = 0; k < base.n2(); ++k)
    {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n1, n1);
      for (Eigen::Index i = 0; i < n1; ++i)
        for (Eigen::Index j = i + 1; j < n1; ++j)
        {
          m(i, j) = rng.uniform(-1.0, 1.0);
          m(j, i) = -m(i, j);
        }
      const double norm = spectral_norm(m);
      total += norm * norm;
      c.push_back(std::move(m));
    }
    const double factor = bound / std::sqrt(total);
    for (auto& m : c)
      m *= factor;
    const double defect = is_htype(perturbed(base, c, 1.0)).clifford_defect;
    if (defect >= min_defect)
      return {std::move(c), bound, defect, seed + static_cast<std::uint64_t>(attempt)};
  }
  throw NumericalError("regular_perturbation: no direction breaks the Clifford relations", min_defect);
}

Step2Algebrad perturbed(const Step2Algebrad& base, const std::vector<Eigen::MatrixXd>& direction, double t)
{
  if (static_cast<Eigen::Index>(direction.size()) != base.n2())
    throw InputError("perturbed: direction has the wrong number of matrices");
  std::vector<Eigen::MatrixXd> b;
  for (Eigen::Index k = 0; k < base.n2(); ++k)
  {
    b.push_back(base.bracket_matrix(k) + t * direction[k]);
  }
  return Step2Algebrad(std::move(b), base.g1_metric(), base.g2_metric());
}

Step2Algebrad make_perturbed_quaternionic()
{
  const Step2Algebrad base = make_quaternionic_heisenberg(1);
  return perturbed(base, regular_perturbation(base, 0.5, 1).direction, 1.0);
}

} // namespace nilfock
