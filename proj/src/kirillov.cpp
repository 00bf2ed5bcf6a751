#include "nilfock/kirillov.hpp"

#include "nilfock/errors.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace nilfock
{

namespace
{

const Complex I(0.0, 1.0);

FockOperator scalar_operator(const FockTruncationPtr& t, Complex c)
{
  return level_diagonal(t, [c](int) { return c; });
}

FockOperator combine(const FockTruncationPtr& t, const std::vector<FockOperator>& ops,
                     const Eigen::VectorXd& coeffs)
{
  FockOperator::Sparse m(t->dimension(), t->dimension());
  ShiftBand band{0, 0};
  bool first = true;
  for (std::size_t i = 0; i < ops.size(); ++i)
  {
    if (coeffs(static_cast<Eigen::Index>(i)) == 0.0)
      continue;
    m += coeffs(static_cast<Eigen::Index>(i)) * ops[i].matrix();
    band = first ? ops[i].band()
                 : ShiftBand{std::min(band.lo, ops[i].band().lo), std::max(band.hi, ops[i].band().hi)};
    first = false;
  }
  return FockOperator(t, std::move(m), band);
}

} // namespace

FockOperator KirillovRep::rho_g1(const Eigen::VectorXd& x) const
{
  if (x.size() != algebra.n1())
    throw InputError("rho: g1 vector has the wrong length");
  return combine(truncation, g1_images, x);
}

FockOperator KirillovRep::rho(const GradedElement<double>& u) const
{
  if (u.g2.size() != algebra.n2())
    throw InputError("rho: g2 vector has the wrong length");
  Complex c(0.0);
  for (Eigen::Index k = 0; k < algebra.n2(); ++k)
    c += u.g2(k) * g2_characters[static_cast<std::size_t>(k)];
  return rho_g1(u.g1) + scalar_operator(truncation, c);
}

FockOperator KirillovRep::rho_basis(Eigen::Index index) const
{
  const Eigen::Index n1 = algebra.n1();
  if (index < 0 || index >= n1 + algebra.n2())
    throw InputError("rho_basis: index out of range");
  if (index < n1)
    return g1_images[static_cast<std::size_t>(index)];
  return scalar_operator(truncation, g2_characters[static_cast<std::size_t>(index - n1)]);
}

FockOperator KirillovRep::rho_X(int j) const
{
  return rho_g1(darboux.X.col(j - 1));
}
FockOperator KirillovRep::rho_Y(int j) const
{
  return rho_g1(darboux.Y.col(j - 1));
}

FockOperator KirillovRep::rho_W(int j) const
{
  return std::numbers::sqrt2 / 2.0 * (rho_X(j) + I * rho_Y(j));
}

FockOperator KirillovRep::rho_Wbar(int j) const
{
  return std::numbers::sqrt2 / 2.0 * (rho_X(j) - I * rho_Y(j));
}

KirillovRep build_rep(const Step2Algebrad& a, const Eigen::VectorXd& theta, int K)
{
  if (theta.size() != a.n2())
    throw InputError("build_rep: theta has the wrong length");
  if (theta.isZero(0.0))
    throw PreconditionError("build_rep: theta must be nonzero");
  CompatibleTriple<double> triple;
  try
  {
    triple = compatible_J(omega_matrix(a, theta), a.g1_metric());
  }
  catch (const NumericalError& e)
  {
    throw PreconditionError(std::string("build_rep: omega_theta is degenerate: ") + e.what());
  }
  return build_rep_with_frame(a, theta, triple, darboux_basis(triple), K);
}

KirillovRep build_rep_with_frame(const Step2Algebrad& a, const Eigen::VectorXd& theta,
                                 const CompatibleTriple<double>& triple, const DarbouxBasis<double>& darboux,
                                 int K)
{
  if (a.n1() % 2 != 0)
    throw PreconditionError("build_rep: g1 must be even-dimensional");
  if (theta.size() != a.n2())
    throw InputError("build_rep: theta has the wrong length");
  const Eigen::MatrixXd omega = omega_matrix(a, theta);
  const double residual = darboux_residual(omega, triple.J, darboux);
  const double scale = omega.cwiseAbs().maxCoeff();
  if (!(residual <= 1e-8 * std::max(1.0, scale)))
    throw NumericalError("build_rep: frame is not a Darboux basis for omega_theta", residual);

  const int n = static_cast<int>(a.n1() / 2);
  KirillovRep r{a, theta, triple, darboux, enumerate_basis(n, K), {}, {}};
  const auto& t = r.truncation;

  std::vector<FockOperator> rx, ry;
  for (int j = 1; j <= n; ++j)
  {
    const FockOperator up = creation(t, j);
    const FockOperator down = annihilation(t, j);
    rx.push_back(std::numbers::sqrt2 / 2.0 * (I * (up + down)));
    ry.push_back(std::numbers::sqrt2 / 2.0 * (up - down));
  }
  // Darboux coordinates of e_i: columns of P^{-1}
  const Eigen::MatrixXd coords = darboux.matrix().partialPivLu().inverse();
  for (Eigen::Index i = 0; i < a.n1(); ++i)
  {
    FockOperator::Sparse m(t->dimension(), t->dimension());
    for (int j = 0; j < n; ++j)
    {
      m += coords(j, i) * rx[static_cast<std::size_t>(j)].matrix();
      m += coords(n + j, i) * ry[static_cast<std::size_t>(j)].matrix();
    }
    r.g1_images.emplace_back(t, std::move(m), ShiftBand{-1, 1});
  }
  for (Eigen::Index k = 0; k < a.n2(); ++k)
    r.g2_characters.push_back(I * theta(k));
  return r;
}

double banded_norm_bound(const FockOperator& op)
{
  if (op.band().homogeneous())
    return block_norm_bound(op);
  const auto& t = op.truncation();
  std::map<int, std::vector<Eigen::Triplet<Complex>>> parts;
  const auto& m = op.matrix();
  for (Eigen::Index c = 0; c < m.outerSize(); ++c)
    for (FockOperator::Sparse::InnerIterator it(m, c); it; ++it)
      parts[t->level_of(it.row()) - t->level_of(c)].emplace_back(it.row(), c, it.value());
  double total = 0.0;
  for (const auto& [s, triplets] : parts)
  {
    FockOperator::Sparse part(t->dimension(), t->dimension());
    part.setFromTriplets(triplets.begin(), triplets.end());
    total += block_norm_bound(FockOperator(t, std::move(part), ShiftBand{s, s}));
  }
  return total;
}

double verify_homomorphism(const KirillovRep& r, int interior_margin)
{
  const Eigen::Index n1 = r.algebra.n1();
  const Eigen::Index dim = n1 + r.algebra.n2();
  const int top = r.truncation->top_level() - interior_margin;
  std::vector<FockOperator> images;
  for (Eigen::Index u = 0; u < dim; ++u)
    images.push_back(r.rho_basis(u));
  double defect = 0.0;
  for (Eigen::Index u = 0; u < dim; ++u)
    for (Eigen::Index v = u + 1; v < dim; ++v)
    {
      FockOperator c = commutator(images[static_cast<std::size_t>(u)], images[static_cast<std::size_t>(v)]);
      if (u < n1 && v < n1)
      {
        Eigen::VectorXd z(r.algebra.n2());
        for (Eigen::Index k = 0; k < r.algebra.n2(); ++k)
          z(k) = r.algebra.bracket_matrix(k)(u, v);
        c -= r.rho(GradedElement<double>{Eigen::VectorXd::Zero(n1), z});
      }
      defect = std::max(defect, banded_norm_bound(compress(c, 0, top)));
    }
  return defect;
}

double anti_hermitian_defect(const KirillovRep& r, int interior_margin)
{
  const int top = r.truncation->top_level() - interior_margin;
  double defect = 0.0;
  for (Eigen::Index u = 0; u < r.algebra.n1() + r.algebra.n2(); ++u)
  {
    const FockOperator x = r.rho_basis(u);
    defect = std::max(defect, banded_norm_bound(compress(x + x.adjoint(), 0, top)));
  }
  return defect;
}

HomogeneityReport homogeneity_check(const Step2Algebrad& a, const Eigen::VectorXd& theta, double lambda,
                                    int K)
{
  if (!(lambda > 0.0))
    throw InputError("homogeneity_check: lambda must be positive");
  HomogeneityReport report;
  report.lambda = lambda;
  const KirillovRep base = build_rep(a, theta, K);
  const Eigen::VectorXd theta2 = lambda * lambda * theta;
  const Eigen::MatrixXd omega2 = omega_matrix(a, theta2);

  const DarbouxBasis<double> frame = scaled(base.darboux, 1.0 / lambda);
  report.scaled_darboux_residual = darboux_residual(omega2, base.triple.J, frame);
  const Eigen::MatrixXd p = scaled(base.darboux, lambda).matrix();
  report.literal_scaling_residual =
      (p.transpose() * omega2 * p - standard_symplectic(base.darboux.n())).cwiseAbs().maxCoeff();

  CompatibleTriple<double> triple2{omega2, base.triple.J, base.triple.J.transpose() * omega2};
  const KirillovRep moved = build_rep_with_frame(a, theta2, triple2, frame, K);
  const KirillovRep fresh = build_rep(a, theta2, K);

  for (Eigen::Index k = 0; k < a.n2(); ++k)
  {
    const auto ks = static_cast<std::size_t>(k);
    report.central_character_residual =
        std::max(report.central_character_residual,
                 std::abs(moved.g2_characters[ks] - lambda * lambda * base.g2_characters[ks]));
  }

  const Eigen::Index n1 = a.n1();
  for (Eigen::Index u = 0; u < n1 + a.n2(); ++u)
  {
    GradedElement<double> e{Eigen::VectorXd::Zero(n1), Eigen::VectorXd::Zero(a.n2())};
    if (u < n1)
      e.g1(u) = 1.0;
    else
      e.g2(u - n1) = 1.0;
    const FockOperator lhs = base.rho(dilate(a, lambda, e));
    const FockOperator rhs = moved.rho(e);
    report.pullback_residual = std::max(report.pullback_residual, banded_norm_bound(lhs - rhs));
    report.rebuild_residual = std::max(report.rebuild_residual, banded_norm_bound(fresh.rho(e) - rhs));
  }
  return report;
}

WeylShiftResidual weyl_shift_identity(const KirillovRep& r)
{
  const auto& t = r.truncation;
  const FockOperator damp = level_diagonal(t, [](int k) { return Complex(1.0 / std::sqrt(k + 1.0)); });
  WeylShiftResidual out;
  for (int j = 1; j <= t->modes(); ++j)
  {
    const FockOperator s = shift(t, j);
    out.shift = std::max(out.shift, banded_norm_bound(r.rho_W(j) * damp - I * s));
    out.adjoint = std::max(out.adjoint, banded_norm_bound(s.adjoint() + I * (damp * r.rho_Wbar(j))));
  }
  return out;
}

} // namespace nilfock
