#ifndef NILFOCK_HTYPE_HPP
#define NILFOCK_HTYPE_HPP

#include "nilfock/step2_algebra.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace nilfock
{

/// J_z defined by g1_metric(J_z x, y) = <z, [x, y]>_{g2_metric}, i.e.
/// J_z = -g1_metric^{-1} Omega_{g2_metric z}. Linear in z, g1_metric-skew.
Eigen::MatrixXd structure_map(const Step2Algebrad& a, const Eigen::VectorXd& z);

struct HTypeVerdict
{
  bool is_htype = false;
  /// max over a g2-orthonormal basis of |J_a J_b + J_b J_a + 2 delta_ab I|.
  double clifford_defect = 0.0;
  /// max over the same basis of |J_a^T G1 J_a - G1|, checked on its own.
  double orthogonality_defect = 0.0;
  double tolerance = 0.0;
  /// (dim g2, dim g1) when H-type.
  std::optional<std::pair<int, int>> class_pair;
};

HTypeVerdict is_htype(const Step2Algebrad& a);

struct HTypeClass
{
  int center_dim = 0;
  int g1_dim = 0;
  int multiplicity = 0;

  bool operator==(const HTypeClass&) const = default;
};

/// (dim g2, dim g1, dim g1 / d(dim g2)). Throws PreconditionError for non-H-type input
/// and DataCorruptionError if the irreducible module dimension does not divide dim g1.
HTypeClass classify_htype(const Step2Algebrad& a);

/// heis(R^{2n}, standard symplectic form): n1 = 2n, n2 = 1.
Step2Algebrad make_heisenberg(int n);

/// g1 = `multiplicity` copies of the irreducible Cl(0, m) module, g2 = R^m, with
/// <z, [x, y]> = <J_z x, y> for the constructed generators J_a.
Step2Algebrad make_htype_from_clifford(int m, int multiplicity);

/// Quaternionic Heisenberg algebra: make_htype_from_clifford(3, n).
Step2Algebrad make_quaternionic_heisenberg(int n);

/// Realification of the complex Heisenberg algebra over (C^{2n}, omega_C):
/// B[1] = Re omega_C, B[2] = Im omega_C on coordinates (Re u, Im u). n1 = 4n, n2 = 2.
Step2Algebrad make_complexified_heisenberg(int n);

struct Perturbation
{
  /// Skew matrices C_1..C_{n2}, scaled so that sqrt(sum_k |C_k|^2) equals `bound`.
  std::vector<Eigen::MatrixXd> direction;
  double bound = 0.0;
  /// Clifford defect of base + C.
  double clifford_defect = 0.0;
  std::uint64_t seed = 0;
};

/// Searches seeds starting at `seed` for a random skew direction C whose full-strength
/// perturbation base + C breaks the Clifford relations by at least `min_defect`.
/// Since |C_theta| <= bound for unit theta, base + tC stays regular for t in [0, 1] as
/// long as bound is below min_theta sigma_min(Omega_theta) of the base.
Perturbation regular_perturbation(const Step2Algebrad& base, double bound, std::uint64_t seed,
                                  double min_defect = 1e-3, int max_tries = 64);

/// base + t C, keeping the metrics of the base.
Step2Algebrad perturbed(const Step2Algebrad& base, const std::vector<Eigen::MatrixXd>& direction, double t);

/// Quaternionic Heisenberg algebra on R^4 + R^3 deformed by regular_perturbation with
/// bound 0.5 and seed 1: regular, not of H-type.
Step2Algebrad make_perturbed_quaternionic();

} // namespace nilfock

#endif // NILFOCK_HTYPE_HPP
