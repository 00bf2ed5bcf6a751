#include "nilfock/symbols.hpp"

#include "nilfock/errors.hpp"

#include <cmath>
#include <numbers>

namespace nilfock
{

namespace
{

const Complex I(0.0, 1.0);

Complex letter_symbol(const Letter& l, const Eigen::VectorXcd& zeta)
{
  switch (l.kind)
  {
  case LetterKind::Shift:
    if (l.w.size() != zeta.size())
      throw InputError("symbol: shift vector and sphere point differ in dimension");
    return (l.w.array() * zeta.array()).sum();
  case LetterKind::ShiftAdjoint:
    if (l.w.size() != zeta.size())
      throw InputError("symbol: shift vector and sphere point differ in dimension");
    return std::conj((l.w.array() * zeta.array()).sum());
  case LetterKind::Compact:
    return 0.0;
  case LetterKind::LevelFunction:
    return l.limit;
  }
  return 0.0;
}

Letter conjugated_level(double t, int offset)
{
  // ((k + 1 + offset)/(k + 1))^{it/2}
  return Letter::level(
      [t, offset](int k)
      {
        const double ratio = (k + 1.0 + offset) / (k + 1.0);
        return ratio > 0.0 ? std::exp(Complex(0.0, 0.5 * t * std::log(ratio))) : Complex(1.0);
      },
      1.0);
}

} // namespace

Letter Letter::shift(Eigen::VectorXcd w)
{
  Letter l;
  l.kind = LetterKind::Shift;
  l.w = std::move(w);
  return l;
}

Letter Letter::shift_adjoint(Eigen::VectorXcd w)
{
  Letter l;
  l.kind = LetterKind::ShiftAdjoint;
  l.w = std::move(w);
  return l;
}

Letter Letter::compact(Eigen::MatrixXcd block)
{
  Letter l;
  l.kind = LetterKind::Compact;
  if (block.size() == 0)
    block = Eigen::MatrixXcd::Ones(1, 1);
  if (block.rows() != block.cols())
    throw InputError("compact letter: block must be square");
  l.block = std::move(block);
  l.limit = 0.0;
  return l;
}

Letter Letter::level(std::function<Complex(int)> g, Complex limit)
{
  Letter l;
  l.kind = LetterKind::LevelFunction;
  l.level_function = std::move(g);
  l.limit = limit;
  return l;
}

SymbolExpr SymbolExpr::letter(Letter l)
{
  SymbolExpr e;
  e.words.push_back(Word{1.0, {std::move(l)}});
  return e;
}

SymbolExpr SymbolExpr::shift(int n, int j)
{
  if (j < 1 || j > n)
    throw InputError("shift: mode index out of range");
  return shift(Eigen::VectorXcd::Unit(n, j - 1));
}

SymbolExpr SymbolExpr::shift_adjoint(int n, int j)
{
  if (j < 1 || j > n)
    throw InputError("shift: mode index out of range");
  return shift_adjoint(Eigen::VectorXcd::Unit(n, j - 1));
}

SymbolExpr operator+(SymbolExpr a, const SymbolExpr& b)
{
  a.words.insert(a.words.end(), b.words.begin(), b.words.end());
  return a;
}

SymbolExpr operator-(SymbolExpr a, const SymbolExpr& b)
{
  return a + Complex(-1.0) * b;
}

SymbolExpr operator*(const SymbolExpr& a, const SymbolExpr& b)
{
  SymbolExpr out;
  for (const Word& u : a.words)
    for (const Word& v : b.words)
    {
      Word w{u.coefficient * v.coefficient, u.letters};
      w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
      out.words.push_back(std::move(w));
    }
  return out;
}

SymbolExpr operator*(Complex c, SymbolExpr a)
{
  for (Word& w : a.words)
    w.coefficient *= c;
  return a;
}

SymbolExpr commutator(const SymbolExpr& a, const SymbolExpr& b)
{
  return a * b - b * a;
}

SymbolExpr adjoint(const SymbolExpr& a)
{
  SymbolExpr out;
  for (const Word& w : a.words)
  {
    Word r{std::conj(w.coefficient), {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    {
      Letter l = *it;
      switch (l.kind)
      {
      case LetterKind::Shift:
        l.kind = LetterKind::ShiftAdjoint;
        break;
      case LetterKind::ShiftAdjoint:
        l.kind = LetterKind::Shift;
        break;
      case LetterKind::Compact:
        l.block = l.block.adjoint().eval();
        break;
      case LetterKind::LevelFunction:
      {
        auto g = l.level_function;
        l.level_function = [g](int k) { return std::conj(g(k)); };
        l.limit = std::conj(l.limit);
        break;
      }
      }
      r.letters.push_back(std::move(l));
    }
    out.words.push_back(std::move(r));
  }
  return out;
}

FockOperator to_operator(const Letter& l, const FockTruncationPtr& t)
{
  switch (l.kind)
  {
  case LetterKind::Shift:
    return shift(t, l.w);
  case LetterKind::ShiftAdjoint:
    return shift(t, l.w).adjoint();
  case LetterKind::Compact:
  {
    const Eigen::Index b = l.block.rows();
    if (b > t->dimension())
      throw InputError("compact letter is larger than the truncation");
    std::vector<Eigen::Triplet<Complex>> triplets;
    int hi = 0;
    for (Eigen::Index c = 0; c < b; ++c)
      for (Eigen::Index r = 0; r < b; ++r)
        if (l.block(r, c) != Complex(0.0))
        {
          triplets.emplace_back(r, c, l.block(r, c));
          hi = std::max(hi, t->level_of(std::max(r, c)));
        }
    FockOperator::Sparse m(t->dimension(), t->dimension());
    m.setFromTriplets(triplets.begin(), triplets.end());
    return FockOperator(t, std::move(m), ShiftBand{-hi, hi});
  }
  case LetterKind::LevelFunction:
    return level_diagonal(t, l.level_function);
  }
  throw InputError("unknown letter");
}

FockOperator to_operator(const SymbolExpr& e, const FockTruncationPtr& t)
{
  FockOperator::Sparse zero(t->dimension(), t->dimension());
  FockOperator total(t, zero, ShiftBand{0, 0});
  bool first = true;
  for (const Word& w : e.words)
  {
    FockOperator product = identity(t);
    for (const Letter& l : w.letters)
      product = product * to_operator(l, t);
    product *= w.coefficient;
    if (first)
      total = product;
    else
      total += product;
    first = false;
  }
  return total;
}

Complex symbol_value(const SymbolExpr& e, const Eigen::VectorXcd& zeta)
{
  Complex total = 0.0;
  for (const Word& w : e.words)
  {
    Complex v = w.coefficient;
    for (const Letter& l : w.letters)
      v *= letter_symbol(l, zeta);
    total += v;
  }
  return total;
}

FockOperator flow_conjugate(double t, const FockOperator& op)
{
  const auto& tr = op.truncation();
  return flow_unitary(tr, 0.5 * t) * op * flow_unitary(tr, -0.5 * t);
}

SymbolExpr flow_conjugate(double t, const SymbolExpr& e)
{
  SymbolExpr out;
  for (const Word& w : e.words)
  {
    Word r{w.coefficient, {}};
    for (const Letter& l : w.letters)
    {
      switch (l.kind)
      {
      case LetterKind::Shift:
        r.letters.push_back(l);
        r.letters.push_back(conjugated_level(t, 1));
        break;
      case LetterKind::ShiftAdjoint:
        r.letters.push_back(l);
        r.letters.push_back(conjugated_level(t, -1));
        break;
      case LetterKind::Compact:
      {
        auto phase = [t](double sign)
        {
          return Letter::level([t, sign](int k)
                               { return std::exp(Complex(0.0, sign * 0.5 * t * std::log(k + 1.0))); }, 0.0);
        };
        r.letters.push_back(phase(1.0));
        r.letters.push_back(l);
        r.letters.push_back(phase(-1.0));
        break;
      }
      case LetterKind::LevelFunction:
        r.letters.push_back(l);
        break;
      }
    }
    out.words.push_back(std::move(r));
  }
  return out;
}

ThetaFrame theta_frame(const Step2Algebrad& a, const Eigen::VectorXd& theta)
{
  if (theta.size() != a.n2())
    throw InputError("theta_frame: theta has the wrong length");
  CompatibleTriple<double> triple;
  try
  {
    triple = compatible_J(omega_matrix(a, theta), a.g1_metric());
  }
  catch (const NumericalError& e)
  {
    throw PreconditionError(std::string("theta_frame: omega_theta is degenerate: ") + e.what());
  }
  DarbouxBasis<double> basis = darboux_basis(triple);
  return {theta, std::move(triple), std::move(basis)};
}

Eigen::VectorXcd hermitian_point(const ThetaFrame& f, const Eigen::VectorXd& xi)
{
  if (xi.size() != f.darboux.X.rows())
    throw InputError("hermitian_point: covector has the wrong length");
  Eigen::VectorXcd zeta(f.darboux.n());
  for (Eigen::Index j = 0; j < f.darboux.n(); ++j)
    zeta(j) = Complex(xi.dot(f.darboux.X.col(j)), xi.dot(f.darboux.Y.col(j)));
  const double norm = zeta.norm();
  if (norm == 0.0)
    throw InputError("hermitian_point: covector must be nonzero");
  return zeta / norm;
}

Eigen::VectorXcd complexified_coordinates(const ThetaFrame& f, const Eigen::VectorXd& x)
{
  const Eigen::Index n = f.darboux.n();
  const Eigen::VectorXd c = f.darboux.matrix().partialPivLu().solve(x);
  Eigen::VectorXcd w(n);
  for (Eigen::Index j = 0; j < n; ++j)
    w(j) = Complex(c(j), -c(n + j));
  return w;
}

SymbolSample symbol_eval(const Step2Algebrad& a, const std::vector<SymbolExpr>& words,
                         const std::vector<Eigen::VectorXd>& theta_points,
                         const std::vector<Eigen::VectorXd>& sphere_points)
{
  SymbolSample sample{theta_points, sphere_points, {}};
  std::vector<std::vector<Eigen::VectorXcd>> zetas;
  for (const auto& theta : theta_points)
  {
    const ThetaFrame f = theta_frame(a, theta);
    std::vector<Eigen::VectorXcd> row;
    for (const auto& xi : sphere_points)
      row.push_back(hermitian_point(f, xi));
    zetas.push_back(std::move(row));
  }
  for (const SymbolExpr& word : words)
  {
    std::vector<std::vector<Complex>> per_theta;
    for (const auto& row : zetas)
    {
      std::vector<Complex> values;
      for (const auto& zeta : row)
        values.push_back(symbol_value(word, zeta));
      per_theta.push_back(std::move(values));
    }
    sample.values.push_back(std::move(per_theta));
  }
  return sample;
}

T0Verdict t0_membership(const Step2Algebrad& a, const std::vector<SectionFiber>& section,
                        const std::vector<Eigen::VectorXd>& sphere_points, double tolerance)
{
  T0Verdict verdict;
  verdict.tolerance = tolerance;
  std::vector<ThetaFrame> frames;
  for (const auto& fiber : section)
    frames.push_back(theta_frame(a, fiber.theta));
  for (const auto& xi : sphere_points)
  {
    std::vector<Complex> values;
    for (std::size_t i = 0; i < section.size(); ++i)
      values.push_back(symbol_value(section[i].word, hermitian_point(frames[i], xi)));
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = i + 1; j < values.size(); ++j)
        verdict.spread = std::max(verdict.spread, std::abs(values[i] - values[j]));
  }
  verdict.member = verdict.spread <= tolerance;
  return verdict;
}

std::vector<SectionFiber> complexified_shift_section(const Step2Algebrad& a, const Eigen::VectorXd& x,
                                                     const std::vector<Eigen::VectorXd>& theta_points)
{
  std::vector<SectionFiber> out;
  for (const auto& theta : theta_points)
  {
    const ThetaFrame f = theta_frame(a, theta);
    out.push_back({theta, SymbolExpr::shift(complexified_coordinates(f, x))});
  }
  return out;
}

} // namespace nilfock
