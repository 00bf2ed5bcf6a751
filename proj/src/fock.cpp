#include "nilfock/fock.hpp"

#include "nilfock/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace nilfock
{

namespace
{

using Triplet = Eigen::Triplet<Complex>;

void append_level(int modes, int remaining, MultiIndex& current, int position, std::vector<MultiIndex>& out)
{
  if (position == modes - 1)
  {
    current[position] = remaining;
    out.push_back(current);
    return;
  }
  for (int v = remaining; v >= 0; --v)
  {
    current[position] = v;
    append_level(modes, remaining - v, current, position + 1, out);
  }
}

double binomial(int n, int k)
{
  double r = 1.0;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

void require_same_space(const FockOperator& a, const FockOperator& b)
{
  if (a.truncation() != b.truncation() && (a.truncation()->modes() != b.truncation()->modes() ||
                                           a.truncation()->top_level() != b.truncation()->top_level()))
    throw PreconditionError("Fock operators act on different truncations");
}

FockOperator from_triplets(const FockTruncationPtr& t, const std::vector<Triplet>& triplets, ShiftBand band)
{
  FockOperator::Sparse m(t->dimension(), t->dimension());
  m.setFromTriplets(triplets.begin(), triplets.end());
  return FockOperator(t, std::move(m), band);
}

double dense_norm(const Eigen::MatrixXcd& m)
{
  if (m.size() == 0)
    return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

} // namespace

std::size_t fock_dimension_cap()
{
  if (const char* env = std::getenv("NILFOCK_MAX_DIM"))
  {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 20000;
}

FockTruncation::FockTruncation(int modes, int top_level, std::size_t cap)
    : m_modes(modes), m_top_level(top_level)
{
  if (modes < 1)
    throw InputError("Fock space needs at least one mode");
  if (top_level < 0)
    throw InputError("truncation level must be non-negative");
  const double dim = binomial(modes + top_level, modes);
  if (dim > static_cast<double>(cap))
    throw InputError("Fock truncation dimension " + std::to_string(static_cast<long long>(dim)) +
                     " exceeds cap " + std::to_string(cap));
  m_basis.reserve(static_cast<std::size_t>(dim));
  m_level_offsets.reserve(top_level + 2);
  MultiIndex current(modes, 0);
  for (int level = 0; level <= top_level; ++level)
  {
    m_level_offsets.push_back(static_cast<Eigen::Index>(m_basis.size()));
    append_level(modes, level, current, 0, m_basis);
  }
  m_level_offsets.push_back(static_cast<Eigen::Index>(m_basis.size()));
  m_levels.resize(m_basis.size());
  for (int level = 0; level <= top_level; ++level)
    for (Eigen::Index i = m_level_offsets[level]; i < m_level_offsets[level + 1]; ++i)
      m_levels[i] = level;
  for (std::size_t i = 0; i < m_basis.size(); ++i)
    m_lookup.emplace(m_basis[i], static_cast<Eigen::Index>(i));
}

std::optional<Eigen::Index> FockTruncation::index_of(const MultiIndex& alpha) const
{
  const auto it = m_lookup.find(alpha);
  if (it == m_lookup.end())
    return std::nullopt;
  return it->second;
}

FockTruncationPtr enumerate_basis(int modes, int top_level)
{
  return std::make_shared<const FockTruncation>(modes, top_level);
}

FockOperator::FockOperator(FockTruncationPtr truncation, Sparse matrix, ShiftBand band)
    : m_truncation(std::move(truncation)), m_matrix(std::move(matrix)), m_band(band)
{
  if (!m_truncation)
    throw InputError("Fock operator without truncation");
  if (m_matrix.rows() != m_truncation->dimension() || m_matrix.cols() != m_truncation->dimension())
    throw InputError("Fock operator matrix does not match the truncation dimension");
  if (band.lo > band.hi)
    throw InputError("empty shift band");
  m_matrix.makeCompressed();
}

std::optional<int> FockOperator::level_shift() const
{
  if (m_band.homogeneous())
    return m_band.lo;
  return std::nullopt;
}

FockOperator FockOperator::adjoint() const
{
  Sparse adj = m_matrix.adjoint();
  return FockOperator(m_truncation, std::move(adj), ShiftBand{-m_band.hi, -m_band.lo});
}

bool FockOperator::respects_band() const
{
  for (Eigen::Index c = 0; c < m_matrix.outerSize(); ++c)
    for (Sparse::InnerIterator it(m_matrix, c); it; ++it)
    {
      if (it.value() == Complex(0.0))
        continue;
      const int s = m_truncation->level_of(it.row()) - m_truncation->level_of(it.col());
      if (s < m_band.lo || s > m_band.hi)
        return false;
    }
  return true;
}

FockOperator& FockOperator::operator+=(const FockOperator& other)
{
  require_same_space(*this, other);
  m_matrix = m_matrix + other.m_matrix;
  m_band = ShiftBand{std::min(m_band.lo, other.m_band.lo), std::max(m_band.hi, other.m_band.hi)};
  return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& other)
{
  require_same_space(*this, other);
  m_matrix = m_matrix - other.m_matrix;
  m_band = ShiftBand{std::min(m_band.lo, other.m_band.lo), std::max(m_band.hi, other.m_band.hi)};
  return *this;
}

FockOperator& FockOperator::operator*=(Complex factor)
{
  m_matrix *= factor;
  return *this;
}

FockOperator operator+(FockOperator lhs, const FockOperator& rhs)
{
  return lhs += rhs;
}
FockOperator operator-(FockOperator lhs, const FockOperator& rhs)
{
  return lhs -= rhs;
}

FockOperator operator*(const FockOperator& lhs, const FockOperator& rhs)
{
  require_same_space(lhs, rhs);
  FockOperator::Sparse product = (lhs.matrix() * rhs.matrix()).pruned();
  return FockOperator(lhs.truncation(), std::move(product),
                      ShiftBand{lhs.band().lo + rhs.band().lo, lhs.band().hi + rhs.band().hi});
}

FockOperator operator*(Complex factor, FockOperator op)
{
  return op *= factor;
}

FockOperator commutator(const FockOperator& a, const FockOperator& b)
{
  return a * b - b * a;
}

FockOperator identity(const FockTruncationPtr& t)
{
  return level_diagonal(t, [](int) { return Complex(1.0); });
}

FockOperator level_diagonal(const FockTruncationPtr& t, const std::function<Complex(int)>& f)
{
  std::vector<Triplet> triplets;
  triplets.reserve(t->dimension());
  for (int level = 0; level <= t->top_level(); ++level)
  {
    const Complex v = f(level);
    for (Eigen::Index i = t->level_offset(level); i < t->level_offset(level + 1); ++i)
      triplets.emplace_back(i, i, v);
  }
  return from_triplets(t, triplets, ShiftBand{0, 0});
}

FockOperator creation(const FockTruncationPtr& t, int j)
{
  if (j < 1 || j > t->modes())
    throw InputError("mode index out of range");
  std::vector<Triplet> triplets;
  const Eigen::Index end = t->level_offset(t->top_level());
  for (Eigen::Index col = 0; col < end; ++col)
  {
    MultiIndex target = t->state(col);
    const int occupation = target[j - 1];
    ++target[j - 1];
    triplets.emplace_back(*t->index_of(target), col, std::sqrt(static_cast<double>(occupation + 1)));
  }
  return from_triplets(t, triplets, ShiftBand{1, 1});
}

FockOperator annihilation(const FockTruncationPtr& t, int j)
{
  return creation(t, j).adjoint();
}

FockOperator shift(const FockTruncationPtr& t, const Eigen::VectorXcd& w)
{
  if (w.size() != t->modes())
    throw InputError("shift vector has the wrong length");
  std::vector<Triplet> triplets;
  const Eigen::Index end = t->level_offset(t->top_level());
  for (Eigen::Index col = 0; col < end; ++col)
  {
    const MultiIndex& alpha = t->state(col);
    const double level = t->level_of(col);
    for (int j = 0; j < t->modes(); ++j)
    {
      if (w(j) == Complex(0.0))
        continue;
      MultiIndex target = alpha;
      ++target[j];
      triplets.emplace_back(*t->index_of(target), col, w(j) * std::sqrt((alpha[j] + 1.0) / (level + 1.0)));
    }
  }
  return from_triplets(t, triplets, ShiftBand{1, 1});
}

FockOperator shift(const FockTruncationPtr& t, int j)
{
  if (j < 1 || j > t->modes())
    throw InputError("mode index out of range");
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(t->modes());
  w(j - 1) = 1.0;
  return shift(t, w);
}

FockOperator number_operator(const FockTruncationPtr& t)
{
  return level_diagonal(t, [](int level) { return Complex(level); });
}

FockOperator flow_unitary(const FockTruncationPtr& t, double s)
{
  return level_diagonal(t, [s](int level) { return std::exp(Complex(0.0, s * std::log(level + 1.0))); });
}

FockOperator compress(const FockOperator& op, int lo_level, int hi_level)
{
  const auto& t = op.truncation();
  lo_level = std::max(lo_level, 0);
  hi_level = std::min(hi_level, t->top_level());
  std::vector<Triplet> triplets;
  const auto& m = op.matrix();
  for (Eigen::Index c = 0; c < m.outerSize(); ++c)
  {
    const int lc = t->level_of(c);
    if (lc < lo_level || lc > hi_level)
      continue;
    for (FockOperator::Sparse::InnerIterator it(m, c); it; ++it)
    {
      const int lr = t->level_of(it.row());
      if (lr >= lo_level && lr <= hi_level)
        triplets.emplace_back(it.row(), c, it.value());
    }
  }
  return from_triplets(t, triplets, op.band());
}

namespace
{

// Per-level bounds sqrt(|B|_1 |B|_inf) of the blocks of a homogeneous operator, indexed
// by source level.
std::vector<double> level_block_bounds(const FockOperator& op)
{
  const auto& t = op.truncation();
  const auto& m = op.matrix();
  const int s = op.band().lo;
  std::vector<double> col_max(t->top_level() + 1, 0.0), row_max(t->top_level() + 1, 0.0);
  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(t->dimension());
  for (Eigen::Index c = 0; c < m.outerSize(); ++c)
  {
    double sum = 0.0;
    for (FockOperator::Sparse::InnerIterator it(m, c); it; ++it)
    {
      sum += std::abs(it.value());
      row_sums(it.row()) += std::abs(it.value());
    }
    col_max[t->level_of(c)] = std::max(col_max[t->level_of(c)], sum);
  }
  for (Eigen::Index r = 0; r < row_sums.size(); ++r)
    row_max[t->level_of(r)] = std::max(row_max[t->level_of(r)], row_sums(r));
  std::vector<double> out(t->top_level() + 1, 0.0);
  for (int level = 0; level <= t->top_level(); ++level)
  {
    const int target = level + s;
    if (target >= 0 && target <= t->top_level())
      out[level] = std::sqrt(col_max[level] * row_max[target]);
  }
  return out;
}

} // namespace

double block_norm_bound(const FockOperator& op)
{
  if (!op.band().homogeneous())
    throw InputError("block_norm_bound: operator must have a single level shift");
  const auto bounds = level_block_bounds(op);
  return bounds.empty() ? 0.0 : *std::max_element(bounds.begin(), bounds.end());
}

double operator_norm(const FockOperator& op)
{
  const auto& t = op.truncation();
  const auto& m = op.matrix();
  if (m.nonZeros() == 0)
    return 0.0;
  if (op.band().homogeneous())
  {
    // exact block norms, largest bounds first; a block whose bound is below the running
    // maximum cannot change it
    const int s = op.band().lo;
    const auto bounds = level_block_bounds(op);
    std::vector<int> order(bounds.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return bounds[a] > bounds[b]; });
    double best = 0.0;
    for (int level : order)
    {
      if (bounds[level] == 0.0 || bounds[level] <= best)
        break;
      const int target = level + s;
      const Eigen::MatrixXcd block = Eigen::MatrixXcd(m.block(t->level_offset(target), t->level_offset(level),
                                                              t->level_size(target), t->level_size(level)));
      best = std::max(best, dense_norm(block));
    }
    return best;
  }
  int lo = t->top_level();
  int hi = 0;
  for (Eigen::Index c = 0; c < m.outerSize(); ++c)
    for (FockOperator::Sparse::InnerIterator it(m, c); it; ++it)
    {
      if (it.value() == Complex(0.0))
        continue;
      const int a = t->level_of(c);
      const int b = t->level_of(it.row());
      lo = std::min({lo, a, b});
      hi = std::max({hi, a, b});
    }
  if (lo > hi)
    return 0.0;
  const Eigen::Index begin = t->level_offset(lo);
  const Eigen::Index size = t->level_offset(hi + 1) - begin;
  return dense_norm(Eigen::MatrixXcd(m.block(begin, begin, size, size)));
}

double compactness_defect(const FockOperator& op, int from_level, int interior_margin)
{
  const int top = op.truncation()->top_level() - interior_margin;
  if (from_level > top)
    return 0.0;
  return operator_norm(compress(op, from_level, top));
}

double interior_norm(const FockOperator& op, int top_level)
{
  return operator_norm(compress(op, 0, top_level));
}

void write_dump(std::ostream& out, const FockOperator& op)
{
  const auto& t = op.truncation();
  out << "fockop " << t->modes() << ' ' << t->top_level() << ' ';
  if (op.band().homogeneous())
    out << op.band().lo;
  else
    out << op.band().lo << ':' << op.band().hi;
  out << '\n';
  std::ostringstream line;
  line << std::setprecision(17);
  const auto& m = op.matrix();
  for (Eigen::Index c = 0; c < m.outerSize(); ++c)
    for (FockOperator::Sparse::InnerIterator it(m, c); it; ++it)
    {
      if (it.value() == Complex(0.0))
        continue;
      line.str("");
      line << "entry " << it.row() << ' ' << c << ' ' << it.value().real() << ' ' << it.value().imag()
           << '\n';
      out << line.str();
    }
}

FockOperator read_dump(std::istream& in)
{
  std::string line;
  std::optional<FockTruncationPtr> t;
  ShiftBand band;
  std::vector<Triplet> triplets;
  int line_no = 0;
  while (std::getline(in, line))
  {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key))
      continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (key == "fockop")
    {
      if (t)
        throw InputError(where + "duplicate fockop header");
      int n = 0, k = 0;
      std::string shift_text;
      if (!(ls >> n >> k >> shift_text))
        throw InputError(where + "malformed fockop header");
      const auto colon = shift_text.find(':');
      try
      {
        if (colon == std::string::npos)
        {
          band.lo = band.hi = std::stoi(shift_text);
        }
        else
        {
          band.lo = std::stoi(shift_text.substr(0, colon));
          band.hi = std::stoi(shift_text.substr(colon + 1));
        }
      }
      catch (const std::exception&)
      {
        throw InputError(where + "malformed level shift '" + shift_text + "'");
      }
      t = enumerate_basis(n, k);
    }
    else if (key == "entry")
    {
      if (!t)
        throw InputError(where + "entry before fockop header");
      long long r = 0, c = 0;
      double re = 0.0, im = 0.0;
      if (!(ls >> r >> c >> re >> im))
        throw InputError(where + "malformed entry");
      const auto dim = (*t)->dimension();
      if (r < 0 || c < 0 || r >= dim || c >= dim)
        throw InputError(where + "entry index out of range");
      triplets.emplace_back(r, c, Complex(re, im));
    }
    else
    {
      throw InputError(where + "unknown keyword '" + key + "'");
    }
    std::string extra;
    if (ls >> extra)
      throw InputError(where + "trailing tokens");
  }
  if (!t)
    throw InputError("missing fockop header");
  FockOperator op = from_triplets(*t, triplets, band);
  if (!op.respects_band())
    throw InputError("entries violate the declared level shift");
  return op;
}

} // namespace nilfock
