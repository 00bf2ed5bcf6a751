#ifndef NILFOCK_KIRILLOV_HPP
#define NILFOCK_KIRILLOV_HPP

#include "nilfock/fock.hpp"
#include "nilfock/step2_algebra.hpp"
#include "nilfock/symplectic.hpp"

#include <Eigen/Dense>

#include <vector>

namespace nilfock
{

/// Generic representation pi_theta of a regular step-2 algebra on the truncated Fock
/// space over C^{n1/2}.
///
/// With W_j = (X_j + i Y_j)/sqrt(2) for a J-compatible Darboux basis of omega_theta,
/// rho(W_j) = i A_j^* and rho(conj W_j) = i A_j, so rho(X_j) = i(A_j^* + A_j)/sqrt(2) and
/// rho(Y_j) = (A_j^* - A_j)/sqrt(2). The centre acts by the character i theta.
struct KirillovRep
{
  Step2Algebrad algebra;
  Eigen::VectorXd theta;
  CompatibleTriple<double> triple;
  DarbouxBasis<double> darboux;
  FockTruncationPtr truncation;
  /// rho(e_1), ..., rho(e_{n1}).
  std::vector<FockOperator> g1_images;
  /// rho(z_k) = g2_characters[k] * I, equal to i theta_k.
  std::vector<Complex> g2_characters;

  FockOperator rho_g1(const Eigen::VectorXd& x) const;
  FockOperator rho(const GradedElement<double>& u) const;
  /// Image of the index-th basis vector of g = g1 + g2 (g1 first).
  FockOperator rho_basis(Eigen::Index index) const;
  /// Images of the Darboux vectors and of W_j, conj W_j, assembled from g1_images. j is 1-based.
  FockOperator rho_X(int j) const;
  FockOperator rho_Y(int j) const;
  FockOperator rho_W(int j) const;
  FockOperator rho_Wbar(int j) const;
};

/// Builds pi_theta on levels 0..K. Throws PreconditionError when omega_theta is degenerate.
KirillovRep build_rep(const Step2Algebrad& a, const Eigen::VectorXd& theta, int K);

/// Same, with a prescribed complex structure and Darboux basis for omega_theta.
KirillovRep build_rep_with_frame(const Step2Algebrad& a, const Eigen::VectorXd& theta,
                                 const CompatibleTriple<double>& triple, const DarbouxBasis<double>& darboux,
                                 int K);

/// Upper bound on the spectral norm: the sum over level shifts of block_norm_bound of the
/// homogeneous components. Exact for diagonal operators.
double banded_norm_bound(const FockOperator& op);

/// max over basis pairs (u, v) of |P_{K-margin}([rho(u), rho(v)] - rho([u, v]))P_{K-margin}|.
double verify_homomorphism(const KirillovRep& r, int interior_margin = 2);

/// max over basis x of |P_{K-margin}(rho(x) + rho(x)^*)P_{K-margin}|.
double anti_hermitian_defect(const KirillovRep& r, int interior_margin = 1);

struct HomogeneityReport
{
  double lambda = 1.0;
  /// Darboux residual of X/lambda, Y/lambda for omega_{lambda^2 theta} with the same J.
  double scaled_darboux_residual = 0.0;
  /// Deviation of (lambda X, lambda Y)^T omega_{lambda^2 theta} (lambda X, lambda Y) from the
  /// standard form; equals |lambda^4 - 1|, so lambda X is not a Darboux basis.
  double literal_scaling_residual = 0.0;
  /// max_k |rho_{lambda^2 theta}(z_k) - lambda^2 rho_theta(z_k)|.
  double central_character_residual = 0.0;
  /// max over basis u of |rho_theta(delta_lambda u) - rho_{lambda^2 theta}(u)|.
  double pullback_residual = 0.0;
  /// max over basis u of the difference between the scaled-frame representation and a
  /// fresh build_rep at lambda^2 theta.
  double rebuild_residual = 0.0;
};

HomogeneityReport homogeneity_check(const Step2Algebrad& a, const Eigen::VectorXd& theta, double lambda,
                                    int K);

struct WeylShiftResidual
{
  /// max_j |rho(W_j)(N+1)^{-1/2} - i S_{e_j}|.
  double shift = 0.0;
  /// max_j |S_{e_j}^* + i (N+1)^{-1/2} rho(conj W_j)|.
  double adjoint = 0.0;

  double max() const { return std::max(shift, adjoint); }
};

/// Both sides are compared as full truncated matrices, top level included.
WeylShiftResidual weyl_shift_identity(const KirillovRep& r);

} // namespace nilfock

#endif // NILFOCK_KIRILLOV_HPP
