#ifndef NILFOCK_CLIFFORD_HPP
#define NILFOCK_CLIFFORD_HPP

#include "nilfock/errors.hpp"

#include <Eigen/Dense>

#include <vector>

namespace nilfock
{

/// m real skew-symmetric orthogonal matrices e_a with e_a e_b + e_b e_a = -2 delta_ab I,
/// acting irreducibly. Built from left multiplication by imaginary quaternions (m <= 3)
/// and octonions (4 <= m <= 7), the block extension for m = 8, and the tensor step
/// Cl(0, m + 8) = Cl(0, m) (x) Cl(0, 8) beyond. Output is deterministic.
std::vector<Eigen::MatrixXd> clifford_generators(int m);

/// Real dimension of an irreducible Cl(0, m) module, read off the constructed generators.
int clifford_irrep_dim(int m);

/// max_{a,b} |e_a e_b + e_b e_a + 2 delta_ab I| (spectral norm).
double clifford_relation_defect(const std::vector<Eigen::MatrixXd>& generators);

/// Dimension of the space of matrices commuting with every generator.
int commutant_dimension(const std::vector<Eigen::MatrixXd>& generators, double tolerance = 1e-9);

/// Commutant dimension of an irreducible Cl(0, m) module: 1, 2 or 4 by m mod 8.
int irreducible_commutant_dimension(int m);

/// Left multiplication by the i-th basis quaternion (1, i, j, k) on R^4.
Eigen::Matrix4d quaternion_left_multiplication(int i);

/// Left multiplication by the i-th basis octonion on R^8 (Cayley-Dickson over quaternions).
Eigen::MatrixXd octonion_left_multiplication(int i);

} // namespace nilfock

#endif // NILFOCK_CLIFFORD_HPP
