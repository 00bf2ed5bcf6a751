#ifndef NILFOCK_POLYNOMIAL_HPP
#define NILFOCK_POLYNOMIAL_HPP

#include "nilfock/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <map>
#include <string>
#include <vector>

namespace nilfock
{

using Rational = boost::multiprecision::cpp_rational;
using Exponents = std::vector<int>;

/// Parses `p`, `p/q` or a decimal literal such as `-0.125` or `3e-2` exactly.
Rational parse_rational(const std::string& text);
double to_double(const Rational& r);

/// Sparse polynomial in a fixed number of variables with exact rational coefficients.
class Polynomial
{
public:
  explicit Polynomial(int variables = 0) : m_variables(variables) {}

  static Polynomial constant(int variables, const Rational& c);
  /// x_i, i 0-based.
  static Polynomial variable(int variables, int i);
  static Polynomial monomial(const Exponents& exponents, const Rational& c);

  int variables() const { return m_variables; }
  const std::map<Exponents, Rational>& terms() const { return m_terms; }
  bool is_zero() const { return m_terms.empty(); }
  int degree() const;

  void add_term(const Exponents& exponents, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  Polynomial derivative(int i) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  bool operator==(const Polynomial&) const = default;

private:
  void require_compatible(const Polynomial& other) const;

  int m_variables;
  std::map<Exponents, Rational> m_terms;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
/// Constrained so that unrelated operands never try to convert to Rational.
template <typename R>
  requires std::same_as<R, Rational>
Polynomial operator*(const R& c, Polynomial a)
{
  return a *= c;
}

/// Vector field sum_i components[i] d/dx_i with polynomial coefficients.
struct PolyVectorField
{
  std::vector<Polynomial> components;

  int ambient_dim() const { return static_cast<int>(components.size()); }
  /// X f = sum_i X_i df/dx_i.
  Polynomial apply(const Polynomial& f) const;
  std::vector<Rational> evaluate(const std::vector<Rational>& point) const;
  bool operator==(const PolyVectorField&) const = default;
};

PolyVectorField zero_field(int d);
/// d/dx_i.
PolyVectorField coordinate_field(int d, int i);
PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
PolyVectorField operator*(const Polynomial& f, const PolyVectorField& x);

/// Exact Lie bracket X.grad(Y) - Y.grad(X).
PolyVectorField poly_bracket(const PolyVectorField& x, const PolyVectorField& y);

/// One-form sum_i components[i] dx_i.
struct PolyCovectorField
{
  std::vector<Polynomial> components;
};

/// theta(X) as a polynomial.
Polynomial pair(const PolyCovectorField& theta, const PolyVectorField& x);

/// d theta(X, Y) at a point from the coordinate formula sum_{ij} (d_i theta_j - d_j theta_i) X_i Y_j.
Rational exterior_derivative_at(const PolyCovectorField& theta, const PolyVectorField& x,
                                const PolyVectorField& y, const std::vector<Rational>& point);

} // namespace nilfock

#endif // NILFOCK_POLYNOMIAL_HPP
