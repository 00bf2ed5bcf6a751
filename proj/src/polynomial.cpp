#include "nilfock/polynomial.hpp"

#include <cctype>

namespace nilfock
{

namespace
{

Rational power(const Rational& base, int e)
{
  Rational r = 1;
  for (int i = 0; i < e; ++i)
    r *= base;
  return r;
}

boost::multiprecision::cpp_int parse_integer(const std::string& digits, const std::string& whole)
{
  if (digits.empty())
    throw InputError("malformed number '" + whole + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("malformed number '" + whole + "'");
  // the string constructor reads a leading 0 as an octal prefix
  const auto first = digits.find_first_not_of('0');
  return first == std::string::npos ? boost::multiprecision::cpp_int(0)
                                    : boost::multiprecision::cpp_int(digits.substr(first));
}

} // namespace

Rational parse_rational(const std::string& text)
{
  if (text.empty())
    throw InputError("empty number");
  std::string s = text;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+')
  {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  Rational value;
  const auto slash = s.find('/');
  if (slash != std::string::npos)
  {
    const auto den = parse_integer(s.substr(slash + 1), text);
    if (den == 0)
      throw InputError("zero denominator in '" + text + "'");
    value = Rational(parse_integer(s.substr(0, slash), text), den);
  }
  else
  {
    int exponent = 0;
    const auto e = s.find_first_of("eE");
    if (e != std::string::npos)
    {
      std::string ex = s.substr(e + 1);
      bool neg_exp = false;
      if (!ex.empty() && (ex[0] == '-' || ex[0] == '+'))
      {
        neg_exp = ex[0] == '-';
        ex.erase(0, 1);
      }
      exponent = parse_integer(ex, text).convert_to<int>() * (neg_exp ? -1 : 1);
      s = s.substr(0, e);
    }
    std::string digits = s;
    const auto dot = s.find('.');
    if (dot != std::string::npos)
    {
      digits = s.substr(0, dot) + s.substr(dot + 1);
      exponent -= static_cast<int>(s.size() - dot - 1);
    }
    value = Rational(parse_integer(digits, text));
    if (exponent > 0)
      value *= power(Rational(10), exponent);
    else if (exponent < 0)
      value /= power(Rational(10), -exponent);
  }
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& r)
{
  return r.convert_to<double>();
}

Polynomial Polynomial::constant(int variables, const Rational& c)
{
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(int variables, int i)
{
  if (i < 0 || i >= variables)
    throw InputError("Polynomial::variable: index out of range");
  Exponents e(variables, 0);
  e[i] = 1;
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& exponents, const Rational& c)
{
  Polynomial p(static_cast<int>(exponents.size()));
  p.add_term(exponents, c);
  return p;
}

int Polynomial::degree() const
{
  int d = -1;
  for (const auto& [e, c] : m_terms)
  {
    int total = 0;
    for (int x : e)
      total += x;
    d = std::max(d, total);
  }
  return d;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& c)
{
  if (static_cast<int>(exponents.size()) != m_variables)
    throw InputError("Polynomial: monomial has the wrong number of exponents");
  for (int x : exponents)
    if (x < 0)
      throw InputError("Polynomial: negative exponent");
  if (c == 0)
    return;
  auto [it, inserted] = m_terms.emplace(exponents, c);
  if (!inserted)
  {
    it->second += c;
    if (it->second == 0)
      m_terms.erase(it);
  }
}

void Polynomial::require_compatible(const Polynomial& other) const
{
  if (m_variables != other.m_variables)
    throw InputError("Polynomial: variable count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
  require_compatible(other);
  for (const auto& [e, c] : other.m_terms)
    add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
  require_compatible(other);
  for (const auto& [e, c] : other.m_terms)
    add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
  if (c == 0)
  {
    m_terms.clear();
    return *this;
  }
  for (auto& [e, v] : m_terms)
    v *= c;
  return *this;
}

Polynomial Polynomial::derivative(int i) const
{
  if (i < 0 || i >= m_variables)
    throw InputError("Polynomial::derivative: index out of range");
  Polynomial out(m_variables);
  for (const auto& [e, c] : m_terms)
  {
    if (e[i] == 0)
      continue;
    Exponents d = e;
    --d[i];
    out.add_term(d, c * e[i]);
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const
{
  if (static_cast<int>(point.size()) != m_variables)
    throw InputError("Polynomial::evaluate: point has the wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : m_terms)
  {
    Rational term = c;
    for (int i = 0; i < m_variables; ++i)
      term *= power(point[i], e[i]);
    total += term;
  }
  return total;
}

Polynomial operator+(Polynomial a, const Polynomial& b)
{
  return a += b;
}
Polynomial operator-(Polynomial a, const Polynomial& b)
{
  return a -= b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
  if (a.variables() != b.variables())
    throw InputError("Polynomial: variable count mismatch");
  Polynomial out(a.variables());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
    {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& c, Polynomial a)
{
  return a *= c;
}

Polynomial PolyVectorField::apply(const Polynomial& f) const
{
  if (f.variables() != ambient_dim())
    throw InputError("PolyVectorField::apply: dimension mismatch");
  Polynomial out(ambient_dim());
  for (int i = 0; i < ambient_dim(); ++i)
    if (!components[i].is_zero())
      out += components[i] * f.derivative(i);
  return out;
}

std::vector<Rational> PolyVectorField::evaluate(const std::vector<Rational>& point) const
{
  std::vector<Rational> out;
  out.reserve(components.size());
  for (const auto& c : components)
    out.push_back(c.evaluate(point));
  return out;
}

PolyVectorField zero_field(int d)
{
  return PolyVectorField{std::vector<Polynomial>(d, Polynomial(d))};
}

PolyVectorField coordinate_field(int d, int i)
{
  PolyVectorField x = zero_field(d);
  x.components.at(i) = Polynomial::constant(d, 1);
  return x;
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b)
{
  if (a.ambient_dim() != b.ambient_dim())
    throw InputError("vector fields live in different dimensions");
  PolyVectorField out = a;
  for (int i = 0; i < a.ambient_dim(); ++i)
    out.components[i] += b.components[i];
  return out;
}

PolyVectorField operator*(const Polynomial& f, const PolyVectorField& x)
{
  PolyVectorField out = x;
  for (auto& c : out.components)
    c = f * c;
  return out;
}

PolyVectorField poly_bracket(const PolyVectorField& x, const PolyVectorField& y)
{
  if (x.ambient_dim() != y.ambient_dim())
    throw InputError("poly_bracket: vector fields live in different dimensions");
  PolyVectorField out = zero_field(x.ambient_dim());
  for (int i = 0; i < x.ambient_dim(); ++i)
    out.components[i] = x.apply(y.components[i]) - y.apply(x.components[i]);
  return out;
}

Polynomial pair(const PolyCovectorField& theta, const PolyVectorField& x)
{
  if (theta.components.size() != x.components.size())
    throw InputError("pair: dimension mismatch");
  Polynomial out(x.ambient_dim());
  for (std::size_t i = 0; i < x.components.size(); ++i)
    out += theta.components[i] * x.components[i];
  return out;
}

Rational exterior_derivative_at(const PolyCovectorField& theta, const PolyVectorField& x,
                                const PolyVectorField& y, const std::vector<Rational>& point)
{
  const int d = x.ambient_dim();
  if (static_cast<int>(theta.components.size()) != d || y.ambient_dim() != d)
    throw InputError("exterior_derivative_at: dimension mismatch");
  const auto xv = x.evaluate(point);
  const auto yv = y.evaluate(point);
  Rational total = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
    {
      if (i == j || xv[i] == 0 || yv[j] == 0)
        continue;
      total += (theta.components[j].derivative(i).evaluate(point) -
                theta.components[i].derivative(j).evaluate(point)) *
               xv[i] * yv[j];
    }
  return total;
}

} // namespace nilfock
