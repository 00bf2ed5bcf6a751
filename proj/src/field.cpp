#include "nilfock/field.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace nilfock
{

namespace
{

using Brackets = std::vector<std::vector<PolyVectorField>>;

Brackets frame_brackets(const ChartField& f)
{
  Brackets out(f.hrank, std::vector<PolyVectorField>(f.hrank));
  for (int i = 0; i < f.hrank; ++i)
    for (int j = i + 1; j < f.hrank; ++j)
      out[i][j] = poly_bracket(f.frame_H[i], f.frame_H[j]);
  return out;
}

Eigen::MatrixXd evaluate_frame(const std::vector<PolyVectorField>& fields, const ChartPoint& p)
{
  const int d = static_cast<int>(p.size());
  Eigen::MatrixXd m(d, static_cast<Eigen::Index>(fields.size()));
  for (std::size_t c = 0; c < fields.size(); ++c)
  {
    const auto v = fields[c].evaluate(p);
    for (int r = 0; r < d; ++r)
      m(r, static_cast<Eigen::Index>(c)) = to_double(v[r]);
  }
  return m;
}

Eigen::Index numerical_rank(const Eigen::MatrixXd& m)
{
  if (m.size() == 0)
    return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0)
    return 0;
  return (s.array() > 1e-10 * s(0)).count();
}

void validate_shape(const ChartField& f)
{
  if (f.ambient < 1 || f.hrank < 1 || f.hrank >= f.ambient)
    throw InputError("chart: need 0 < hrank < ambient");
  if (f.tensor_field)
    return;
  if (static_cast<int>(f.frame_H.size()) != f.hrank)
    throw InputError("chart: frame of H must have hrank fields");
  if (!f.completion.empty() && static_cast<int>(f.completion.size()) != f.ambient - f.hrank)
    throw InputError("chart: completion must have ambient - hrank fields");
  for (const auto& x : f.frame_H)
    if (x.ambient_dim() != f.ambient)
      throw InputError("chart: frame field has the wrong dimension");
  for (const auto& x : f.completion)
    if (x.ambient_dim() != f.ambient)
      throw InputError("chart: completion field has the wrong dimension");
}

Step2Algebrad osculating_from(const ChartField& f, const Brackets& brackets, const ChartPoint& p)
{
  if (static_cast<int>(p.size()) != f.ambient)
    throw InputError("osculating_at: point has the wrong dimension");
  if (f.tensor_field)
  {
    Step2Algebrad a = f.tensor_field(to_vector(p));
    if (a.n1() != f.hrank || a.n2() != f.ambient - f.hrank)
      throw InputError("osculating_at: tensor field has the wrong shape");
    return a;
  }
  const int h = f.hrank;
  const int m = f.ambient - h;
  const Eigen::MatrixXd frame = evaluate_frame(f.frame_H, p);
  const Eigen::MatrixXd completion = evaluate_frame(f.full_completion(), p);
  Eigen::MatrixXd full(f.ambient, f.ambient);
  full << frame, completion;
  if (numerical_rank(frame) != h || numerical_rank(full) != f.ambient)
  {
    std::ostringstream where;
    where << to_vector(p).transpose();
    throw PreconditionError("osculating_at: frame loses rank at (" + where.str() + ")");
  }

  const Eigen::MatrixXd gram = frame.transpose() * frame;
  const Eigen::MatrixXd projector =
      Eigen::MatrixXd::Identity(f.ambient, f.ambient) - frame * gram.ldlt().solve(frame.transpose());
  const Eigen::MatrixXd basis = projector * completion;
  const auto qr = basis.colPivHouseholderQr();

  std::vector<Eigen::MatrixXd> b(m, Eigen::MatrixXd::Zero(h, h));
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j)
    {
      const auto v = brackets[i][j].evaluate(p);
      Eigen::VectorXd bracket(f.ambient);
      for (int r = 0; r < f.ambient; ++r)
        bracket(r) = to_double(v[r]);
      const Eigen::VectorXd c = qr.solve(Eigen::VectorXd(projector * bracket));
      for (int k = 0; k < m; ++k)
      {
        b[k](i, j) = c(k);
        b[k](j, i) = -c(k);
      }
    }
  return Step2Algebrad(std::move(b));
}

} // namespace

std::vector<PolyVectorField> ChartField::full_completion() const
{
  if (!completion.empty())
    return completion;
  std::vector<PolyVectorField> out;
  for (int i = hrank; i < ambient; ++i)
    out.push_back(coordinate_field(ambient, i));
  return out;
}

Eigen::VectorXd to_vector(const ChartPoint& p)
{
  Eigen::VectorXd v(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = to_double(p[i]);
  return v;
}

Step2Algebrad osculating_at(const ChartField& f, const ChartPoint& p)
{
  validate_shape(f);
  return osculating_from(f, f.tensor_field ? Brackets{} : frame_brackets(f), p);
}

ChartSummary scan_chart(const ChartField& f, const RegularityOptions& options)
{
  validate_shape(f);
  const Brackets brackets = f.tensor_field ? Brackets{} : frame_brackets(f);
  ChartSummary summary;
  for (std::size_t i = 0; i < f.points.size(); ++i)
  {
    Step2Algebrad a = osculating_from(f, brackets, f.points[i]);
    PointReport report{i, to_vector(f.points[i]), a, is_regular(a, options), is_htype(a), std::nullopt};
    if (!report.regularity.regular)
      summary.non_regular_points.push_back(i);
    if (report.htype.is_htype)
      report.htype_class = classify_htype(a);
    else
      summary.non_htype_points.push_back(i);
    summary.reports.push_back(std::move(report));
  }
  summary.polycontact = summary.non_regular_points.empty();
  summary.htype_manifold = !f.points.empty() && summary.non_htype_points.empty();
  if (summary.htype_manifold)
  {
    summary.htype_class = summary.reports.front().htype_class;
    for (const auto& r : summary.reports)
      if (!(r.htype_class == summary.htype_class))
        throw DataCorruptionError("scan_chart: H-type points with different classes");
  }
  return summary;
}

std::vector<PolyCovectorField> graded_annihilator(const ChartField& f)
{
  validate_shape(f);
  if (f.tensor_field)
    throw PreconditionError("graded_annihilator: chart has no frames");
  const int d = f.ambient;
  const int h = f.hrank;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      if (!(f.frame_H[i].components[j] == Polynomial::constant(d, i == j ? 1 : 0)))
        throw PreconditionError("graded_annihilator: frame is not of the form d/dx_i + vertical terms");
  std::vector<PolyCovectorField> out;
  for (int k = h; k < d; ++k)
  {
    PolyCovectorField theta{std::vector<Polynomial>(d, Polynomial(d))};
    theta.components[k] = Polynomial::constant(d, 1);
    for (int i = 0; i < h; ++i)
      theta.components[i] = Rational(-1) * f.frame_H[i].components[k];
    out.push_back(std::move(theta));
  }
  return out;
}

DThetaCheck dtheta_identity(const ChartField& f)
{
  const auto thetas = graded_annihilator(f);
  const Brackets brackets = frame_brackets(f);
  DThetaCheck check;
  for (const auto& theta : thetas)
    for (int i = 0; i < f.hrank; ++i)
      for (int j = i + 1; j < f.hrank; ++j)
      {
        const Polynomial rhs = Rational(-1) * pair(theta, brackets[i][j]);
        for (const auto& p : f.points)
        {
          ++check.evaluations;
          if (exterior_derivative_at(theta, f.frame_H[i], f.frame_H[j], p) != rhs.evaluate(p))
            ++check.mismatches;
        }
      }
  return check;
}

std::vector<ChartPoint> grid_points(int d, const Rational& lo, const Rational& hi, int steps)
{
  if (d < 1 || steps < 1)
    throw InputError("grid: need positive dimension and steps");
  std::vector<Rational> axis;
  for (int s = 0; s < steps; ++s)
    axis.push_back(steps == 1 ? lo : Rational(lo + (hi - lo) * s / (steps - 1)));
  std::vector<ChartPoint> out;
  std::vector<int> idx(d, 0);
  while (true)
  {
    ChartPoint p;
    for (int i = 0; i < d; ++i)
      p.push_back(axis[idx[i]]);
    out.push_back(std::move(p));
    int pos = d - 1;
    while (pos >= 0 && ++idx[pos] == steps)
      idx[pos--] = 0;
    if (pos < 0)
      break;
  }
  return out;
}

ChartField parse_chart(std::istream& in)
{
  ChartField f;
  std::map<int, PolyVectorField> fields;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg)
  { throw InputError("chart line " + std::to_string(line_no) + ": " + msg); };
  auto read_int = [&](std::istringstream& ls, const char* what)
  {
    std::string tok;
    if (!(ls >> tok))
      fail(std::string("missing ") + what);
    try
    {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size())
        fail(std::string("malformed ") + what + " '" + tok + "'");
      return v;
    }
    catch (const std::logic_error&)
    {
      fail(std::string("malformed ") + what + " '" + tok + "'");
    }
    return 0;
  };
  auto read_rational = [&](std::istringstream& ls, const char* what)
  {
    std::string tok;
    if (!(ls >> tok))
      fail(std::string("missing ") + what);
    try
    {
      return parse_rational(tok);
    }
    catch (const InputError& e)
    {
      fail(e.what());
    }
    return Rational(0);
  };

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
    if (key == "ambient")
    {
      if (f.ambient != 0)
        fail("duplicate ambient");
      f.ambient = read_int(ls, "dimension");
      if (f.ambient < 2)
        fail("ambient dimension must be at least 2");
    }
    else if (key == "hrank")
    {
      if (f.hrank != 0)
        fail("duplicate hrank");
      f.hrank = read_int(ls, "rank");
      if (f.ambient == 0)
        fail("hrank before ambient");
      if (f.hrank < 1 || f.hrank >= f.ambient)
        fail("need 0 < hrank < ambient");
    }
    else if (key == "field")
    {
      if (f.ambient == 0 || f.hrank == 0)
        fail("field before ambient and hrank");
      const int idx = read_int(ls, "field index");
      const int component = read_int(ls, "component");
      if (idx < 1 || idx > f.ambient)
        fail("field index out of range");
      if (component < 1 || component > f.ambient)
        fail("component out of range");
      Exponents e(f.ambient);
      for (int i = 0; i < f.ambient; ++i)
      {
        e[i] = read_int(ls, "exponent");
        if (e[i] < 0)
          fail("negative exponent");
      }
      const Rational c = read_rational(ls, "coefficient");
      auto it = fields.try_emplace(idx, zero_field(f.ambient)).first;
      it->second.components[component - 1].add_term(e, c);
    }
    else if (key == "point")
    {
      if (f.ambient == 0)
        fail("point before ambient");
      ChartPoint p;
      for (int i = 0; i < f.ambient; ++i)
        p.push_back(read_rational(ls, "coordinate"));
      f.points.push_back(std::move(p));
    }
    else if (key == "grid")
    {
      if (f.ambient == 0)
        fail("grid before ambient");
      const Rational lo = read_rational(ls, "lower bound");
      const Rational hi = read_rational(ls, "upper bound");
      const int steps = read_int(ls, "step count");
      if (steps < 1)
        fail("step count must be positive");
      if (!(lo <= hi))
        fail("grid bounds out of order");
      for (auto& p : grid_points(f.ambient, lo, hi, steps))
        f.points.push_back(std::move(p));
    }
    else
    {
      fail("unknown keyword '" + key + "'");
    }
    std::string extra;
    if (ls >> extra)
      fail("trailing token '" + extra + "'");
  }
  if (f.ambient == 0 || f.hrank == 0)
    throw InputError("chart: missing ambient or hrank");
  for (int i = 1; i <= f.hrank; ++i)
  {
    const auto it = fields.find(i);
    if (it == fields.end())
      throw InputError("chart: frame field " + std::to_string(i) + " of H is missing");
    f.frame_H.push_back(it->second);
  }
  const bool has_completion = fields.size() > static_cast<std::size_t>(f.hrank);
  if (has_completion)
    for (int i = f.hrank + 1; i <= f.ambient; ++i)
    {
      const auto it = fields.find(i);
      if (it == fields.end())
        throw InputError("chart: completion field " + std::to_string(i) + " is missing");
      f.completion.push_back(it->second);
    }
  if (f.points.empty())
    throw InputError("chart: no sample points");
  return f;
}

ChartField load_chart(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open chart file '" + path + "'");
  return parse_chart(in);
}

void write_chart(std::ostream& out, const ChartField& f)
{
  if (f.tensor_field)
    throw UnsupportedError("write_chart: tensor-field charts have no text form");
  out << "ambient " << f.ambient << "\nhrank " << f.hrank << '\n';
  auto write_fields = [&](const std::vector<PolyVectorField>& fields, int first)
  {
    for (std::size_t i = 0; i < fields.size(); ++i)
      for (int c = 0; c < fields[i].ambient_dim(); ++c)
        for (const auto& [e, coeff] : fields[i].components[c].terms())
        {
          out << "field " << first + static_cast<int>(i) << ' ' << c + 1;
          for (int x : e)
            out << ' ' << x;
          out << ' ' << coeff.str() << '\n';
        }
  };
  write_fields(f.frame_H, 1);
  write_fields(f.completion, f.hrank + 1);
  for (const auto& p : f.points)
  {
    out << "point";
    for (const auto& x : p)
      out << ' ' << x.str();
    out << '\n';
  }
}

ChartField left_invariant_chart(const Step2Algebrad& a, std::vector<ChartPoint> points)
{
  const int h = static_cast<int>(a.n1());
  const int d = h + static_cast<int>(a.n2());
  ChartField f;
  f.ambient = d;
  f.hrank = h;
  for (int i = 0; i < h; ++i)
  {
    PolyVectorField x = coordinate_field(d, i);
    for (int k = 0; k < a.n2(); ++k)
      for (int l = 0; l < h; ++l)
      {
        const double b = a.bracket_matrix(k)(l, i);
        if (b != 0.0)
          x.components[h + k] += (Rational(b) / 2) * Polynomial::variable(d, l);
      }
    f.frame_H.push_back(std::move(x));
  }
  f.points = std::move(points);
  return f;
}

ChartField involutive_chart(int d, int h, std::vector<ChartPoint> points)
{
  ChartField f;
  f.ambient = d;
  f.hrank = h;
  for (int i = 0; i < h; ++i)
    f.frame_H.push_back(coordinate_field(d, i));
  f.points = std::move(points);
  return f;
}

ChartField mixed_fixture_chart()
{
  const Step2Algebrad base = make_quaternionic_heisenberg(1);
  const std::vector<Eigen::MatrixXd> direction = regular_perturbation(base, 0.5, 1).direction;
  ChartField f;
  f.ambient = 7;
  f.hrank = 4;
  f.tensor_field = [base, direction](const Eigen::VectorXd& p)
  { return perturbed(base, direction, std::max(0.0, p(0))); };
  for (const auto& q : grid_points(2, -1, 1, 5))
  {
    ChartPoint p(7, Rational(0));
    p[0] = q[0];
    p[1] = q[1];
    f.points.push_back(std::move(p));
  }
  return f;
}

} // namespace nilfock
