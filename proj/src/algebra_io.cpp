#include "nilfock/algebra_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

namespace nilfock
{

namespace
{

class LineReader
{
public:
  LineReader(int line_no, const std::string& text) : m_line(line_no), m_stream(text) {}

  [[noreturn]] void fail(const std::string& msg) const
  {
    throw InputError("algebra line " + std::to_string(m_line) + ": " + msg);
  }

  int read_index(const char* what, int upper)
  {
    std::string tok = next(what);
    int v = 0;
    try
    {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size())
        fail(std::string("malformed ") + what + " '" + tok + "'");
    }
    catch (const std::logic_error&)
    {
      fail(std::string("malformed ") + what + " '" + tok + "'");
    }
    if (v < 1 || v > upper)
      fail(std::string(what) + " " + std::to_string(v) + " out of range 1.." + std::to_string(upper));
    return v - 1;
  }

  double read_value()
  {
    std::string tok = next("value");
    double v = 0.0;
    try
    {
      std::size_t used = 0;
      v = std::stod(tok, &used);
      if (used != tok.size())
        fail("malformed value '" + tok + "'");
    }
    catch (const std::logic_error&)
    {
      fail("malformed value '" + tok + "'");
    }
    if (!std::isfinite(v))
      fail("non-finite value '" + tok + "'");
    return v;
  }

  void finish()
  {
    std::string extra;
    if (m_stream >> extra)
      fail("unexpected trailing token '" + extra + "'");
  }

private:
  std::string next(const char* what)
  {
    std::string tok;
    if (!(m_stream >> tok))
      fail(std::string("missing ") + what);
    return tok;
  }

  int m_line;
  std::istringstream m_stream;
};

// Entry already set by an earlier line, either directly or through symmetry.
struct Filled
{
  std::vector<std::vector<char>> set;
  explicit Filled(int n = 0) : set(n, std::vector<char>(n, 0)) {}
};

} // namespace

Step2Algebrad parse_algebra(std::istream& in)
{
  int n1 = 0, n2 = 0;
  std::vector<Eigen::MatrixXd> b;
  std::vector<Filled> b_set;
  std::optional<Eigen::MatrixXd> g1, g2;
  Filled g1_set, g2_set;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line))
  {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::istringstream head(line);
    std::string key;
    if (!(head >> key))
      continue;
    std::string rest;
    std::getline(head, rest);
    LineReader r(line_no, rest);

    if (key == "dims")
    {
      if (n1 != 0)
        r.fail("duplicate dims");
      n1 = r.read_index("n1", 1 << 16) + 1;
      n2 = r.read_index("n2", 1 << 16) + 1;
      r.finish();
      b.assign(n2, Eigen::MatrixXd::Zero(n1, n1));
      b_set.assign(n2, Filled(n1));
      g1_set = Filled(n1);
      g2_set = Filled(n2);
      continue;
    }
    if (n1 == 0)
      r.fail("'" + key + "' before dims");
    if (key == "b")
    {
      const int k = r.read_index("k", n2);
      const int i = r.read_index("i", n1);
      const int j = r.read_index("j", n1);
      const double v = r.read_value();
      r.finish();
      if (i == j)
      {
        if (v != 0.0)
          r.fail("diagonal bracket entry must be zero");
        continue;
      }
      if (b_set[k].set[i][j] && b[k](i, j) != v)
        r.fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") of bracket " +
               std::to_string(k + 1) + " conflicts with an earlier line");
      b[k](i, j) = v;
      b[k](j, i) = -v;
      b_set[k].set[i][j] = b_set[k].set[j][i] = 1;
    }
    else if (key == "g1metric" || key == "g2metric")
    {
      const bool first = key == "g1metric";
      const int n = first ? n1 : n2;
      auto& m = first ? g1 : g2;
      auto& filled = first ? g1_set : g2_set;
      const int i = r.read_index("i", n);
      const int j = r.read_index("j", n);
      const double v = r.read_value();
      r.finish();
      if (!m)
        m = Eigen::MatrixXd::Zero(n, n);
      if (filled.set[i][j] && (*m)(i, j) != v)
        r.fail("metric entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ") conflicts with an earlier line");
      (*m)(i, j) = (*m)(j, i) = v;
      filled.set[i][j] = filled.set[j][i] = 1;
    }
    else
    {
      r.fail("unknown keyword '" + key + "'");
    }
  }
  if (n1 == 0)
    throw InputError("algebra: missing dims line");
  return Step2Algebrad(std::move(b), g1 ? *g1 : Eigen::MatrixXd(), g2 ? *g2 : Eigen::MatrixXd());
}

Step2Algebrad load_algebra(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open algebra file '" + path + "'");
  return parse_algebra(in);
}

void write_algebra(std::ostream& out, const Step2Algebrad& a)
{
  const auto old_precision = out.precision(17);
  out << "dims " << a.n1() << ' ' << a.n2() << '\n';
  for (Eigen::Index k = 0; k < a.n2(); ++k)
    for (Eigen::Index i = 0; i < a.n1(); ++i)
      for (Eigen::Index j = i + 1; j < a.n1(); ++j)
        if (a.bracket_matrix(k)(i, j) != 0.0)
          out << "b " << k + 1 << ' ' << i + 1 << ' ' << j + 1 << ' ' << a.bracket_matrix(k)(i, j) << '\n';
  auto write_metric = [&](const char* key, const Eigen::MatrixXd& m)
  {
    if (m == Eigen::MatrixXd::Identity(m.rows(), m.cols()))
      return;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = i; j < m.cols(); ++j)
        if (m(i, j) != 0.0)
          out << key << ' ' << i + 1 << ' ' << j + 1 << ' ' << m(i, j) << '\n';
  };
  write_metric("g1metric", a.g1_metric());
  write_metric("g2metric", a.g2_metric());
  out.precision(old_precision);
}

void save_algebra(const std::string& path, const Step2Algebrad& a)
{
  std::ofstream out(path);
  if (!out)
    throw InputError("cannot write algebra file '" + path + "'");
  write_algebra(out, a);
}

} // namespace nilfock
