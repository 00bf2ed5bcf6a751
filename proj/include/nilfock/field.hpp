#ifndef NILFOCK_FIELD_HPP
#define NILFOCK_FIELD_HPP

#include "nilfock/htype.hpp"
#include "nilfock/polynomial.hpp"
#include "nilfock/regularity.hpp"
#include "nilfock/step2_algebra.hpp"

#include <Eigen/Dense>

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nilfock
{

using ChartPoint = std::vector<Rational>;

/// A distribution H of rank h on a chart of R^d with sample points.
///
/// Either polynomial frames (frame_H spanning H, completion spanning a complement) or a
/// prescribed bracket-tensor field supplies the osculating algebra at each point. The
/// frame of H is declared orthonormal, and so are the completion vectors after projection
/// onto the Euclidean complement of H.
struct ChartField
{
  int ambient = 0;
  int hrank = 0;
  std::vector<PolyVectorField> frame_H;
  /// d - h fields; the coordinate fields d/dx_{h+1}, ..., d/dx_d when empty.
  std::vector<PolyVectorField> completion;
  std::function<Step2Algebrad(const Eigen::VectorXd&)> tensor_field;
  std::vector<ChartPoint> points;

  std::vector<PolyVectorField> full_completion() const;
};

Eigen::VectorXd to_vector(const ChartPoint& p);

/// Curvature bracket of H at p, in the frame basis of H and the projected completion.
/// Throws PreconditionError if the frames lose rank at p.
Step2Algebrad osculating_at(const ChartField& f, const ChartPoint& p);

struct PointReport
{
  std::size_t index = 0;
  Eigen::VectorXd point;
  Step2Algebrad algebra;
  RegularityVerdict<double> regularity;
  HTypeVerdict htype;
  std::optional<HTypeClass> htype_class;
};

struct ChartSummary
{
  bool polycontact = false;
  bool htype_manifold = false;
  /// Shared class when every point is H-type.
  std::optional<HTypeClass> htype_class;
  std::vector<std::size_t> non_regular_points;
  std::vector<std::size_t> non_htype_points;
  std::vector<PointReport> reports;
};

/// Regularity and H-type verdicts at every sample point. Throws DataCorruptionError if
/// the points are all H-type but disagree on the class.
ChartSummary scan_chart(const ChartField& f, const RegularityOptions& options = {});

/// For frames of the graded form X_i = d/dx_i + sum_k a_{ki} d/dz_k (i <= h), the forms
/// theta_k = dz_k - sum_i a_{ki} dx_i annihilating H. Throws PreconditionError otherwise.
std::vector<PolyCovectorField> graded_annihilator(const ChartField& f);

struct DThetaCheck
{
  std::size_t evaluations = 0;
  std::size_t mismatches = 0;
};

/// Compares d theta(X_i, X_j) with -theta([X_i, X_j]) exactly at every sample point.
DThetaCheck dtheta_identity(const ChartField& f);

/// Chart text format: `ambient d`, `hrank h`, `field idx component e_1 .. e_d coeff`,
/// `point x_1 .. x_d`, `grid lo hi steps` (steps points per axis, all coordinates).
ChartField parse_chart(std::istream& in);
ChartField load_chart(const std::string& path);
void write_chart(std::ostream& out, const ChartField& f);

/// Graded frame X_i = d/dx_i + 1/2 sum_k (sum_l x_l B_k(l, i)) d/dz_k of the group of a,
/// whose brackets are [X_i, X_j] = sum_k B_k(i, j) d/dz_k. Entries of B are taken exactly.
ChartField left_invariant_chart(const Step2Algebrad& a, std::vector<ChartPoint> points);

/// Coordinate frame of R^h x {0}: involutive, every osculating bracket vanishes.
ChartField involutive_chart(int d, int h, std::vector<ChartPoint> points);

/// steps^d grid on [lo, hi]^d.
std::vector<ChartPoint> grid_points(int d, const Rational& lo, const Rational& hi, int steps);

/// Quaternionic Heisenberg tensor B_qH + t(p) C on a 5 x 5 grid of [-1, 1]^2 x {0}^5 in R^7,
/// with t(p) = max(0, p_1) and C the perturbation behind make_perturbed_quaternionic.
ChartField mixed_fixture_chart();

} // namespace nilfock

#endif // NILFOCK_FIELD_HPP
