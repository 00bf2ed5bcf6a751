#ifndef NILFOCK_FOCK_HPP
#define NILFOCK_FOCK_HPP

#include "nilfock/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace nilfock
{

using Complex = std::complex<double>;
using MultiIndex = std::vector<int>;

/// Basis cap: NILFOCK_MAX_DIM when set, otherwise 20000.
std::size_t fock_dimension_cap();

/// Occupation-number basis of the symmetric Fock space over C^n, levels 0..K.
///
/// Order is level-major; within a level multi-indices are sorted in decreasing
/// lexicographic order, so level 2 over C^2 reads (2,0), (1,1), (0,2).
class FockTruncation
{
public:
  FockTruncation(int modes, int top_level, std::size_t cap = fock_dimension_cap());

  int modes() const { return m_modes; }
  int top_level() const { return m_top_level; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(m_basis.size()); }

  const std::vector<MultiIndex>& basis() const { return m_basis; }
  const MultiIndex& state(Eigen::Index i) const { return m_basis.at(i); }
  /// Index of the first state of `level`; level_offset(K + 1) == dimension().
  Eigen::Index level_offset(int level) const { return m_level_offsets.at(level); }
  Eigen::Index level_size(int level) const { return level_offset(level + 1) - level_offset(level); }
  int level_of(Eigen::Index i) const { return m_levels.at(i); }
  std::optional<Eigen::Index> index_of(const MultiIndex& alpha) const;

private:
  int m_modes;
  int m_top_level;
  std::vector<MultiIndex> m_basis;
  std::vector<int> m_levels;
  std::vector<Eigen::Index> m_level_offsets;
  std::map<MultiIndex, Eigen::Index> m_lookup;
};

using FockTruncationPtr = std::shared_ptr<const FockTruncation>;

FockTruncationPtr enumerate_basis(int modes, int top_level);

/// Inclusive range of level shifts: every nonzero entry maps level k into a level
/// k + s with lo <= s <= hi.
struct ShiftBand
{
  int lo = 0;
  int hi = 0;

  bool homogeneous() const { return lo == hi; }
  bool operator==(const ShiftBand&) const = default;
};

/// Operator on a truncated Fock space with its level-shift bookkeeping.
class FockOperator
{
public:
  using Sparse = Eigen::SparseMatrix<Complex>;

  FockOperator(FockTruncationPtr truncation, Sparse matrix, ShiftBand band);

  const FockTruncationPtr& truncation() const { return m_truncation; }
  const Sparse& matrix() const { return m_matrix; }
  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(m_matrix); }
  ShiftBand band() const { return m_band; }
  /// The single level shift, if the operator is homogeneous.
  std::optional<int> level_shift() const;

  FockOperator adjoint() const;
  /// True iff every nonzero entry respects the declared band.
  bool respects_band() const;

  FockOperator& operator+=(const FockOperator& other);
  FockOperator& operator-=(const FockOperator& other);
  FockOperator& operator*=(Complex factor);

private:
  FockTruncationPtr m_truncation;
  Sparse m_matrix;
  ShiftBand m_band;
};

FockOperator operator+(FockOperator lhs, const FockOperator& rhs);
FockOperator operator-(FockOperator lhs, const FockOperator& rhs);
FockOperator operator*(const FockOperator& lhs, const FockOperator& rhs);
FockOperator operator*(Complex factor, FockOperator op);
FockOperator commutator(const FockOperator& a, const FockOperator& b);

FockOperator identity(const FockTruncationPtr& t);
/// Diagonal operator f(|alpha|).
FockOperator level_diagonal(const FockTruncationPtr& t, const std::function<Complex(int)>& f);

/// A_j^*|alpha> = sqrt(alpha_j + 1)|alpha + e_j>, dropped at the top level. j is 1-based.
FockOperator creation(const FockTruncationPtr& t, int j);
/// A_j|alpha> = sqrt(alpha_j)|alpha - e_j>; the exact adjoint of creation(t, j).
FockOperator annihilation(const FockTruncationPtr& t, int j);
/// Symmetrized shift S_w = Sym(w (x) .): S_{e_j}|alpha> = sqrt((alpha_j + 1)/(|alpha| + 1))|alpha + e_j>.
FockOperator shift(const FockTruncationPtr& t, const Eigen::VectorXcd& w);
FockOperator shift(const FockTruncationPtr& t, int j);
FockOperator number_operator(const FockTruncationPtr& t);
/// (N + 1)^{is}.
FockOperator flow_unitary(const FockTruncationPtr& t, double s);

/// Restriction to levels lo..hi (rows and columns); entries elsewhere are zeroed.
FockOperator compress(const FockOperator& op, int lo_level, int hi_level);

/// Spectral norm. Homogeneous operators are block-diagonal up to the shift, so the
/// norm is the largest level-block norm; mixed bands fall back to a dense SVD of the
/// populated level range.
double operator_norm(const FockOperator& op);

/// Upper bound on the norm of an operator with a single level shift: the largest
/// sqrt(|B|_1 |B|_inf) over its level blocks B.
double block_norm_bound(const FockOperator& op);

/// Norm of the compression to levels from_level..K - interior_margin. A margin of one
/// keeps the top-level truncation artifact of products like S^*S - SS^* out of the
/// measurement.
double compactness_defect(const FockOperator& op, int from_level, int interior_margin = 0);

/// Norm of the compression to levels 0..top_level.
double interior_norm(const FockOperator& op, int top_level);

/// Text dump: `fockop <n> <K> <shift>` (shift `lo:hi` for mixed bands), then one
/// `entry <row> <col> <re> <im>` per nonzero, 0-based indices into the basis order.
void write_dump(std::ostream& out, const FockOperator& op);
FockOperator read_dump(std::istream& in);

} // namespace nilfock

#endif // NILFOCK_FOCK_HPP
