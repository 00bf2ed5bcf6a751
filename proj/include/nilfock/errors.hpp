#ifndef NILFOCK_ERRORS_HPP
#define NILFOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilfock
{

/// Malformed or dimensionally inconsistent input.
class InputError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition of the mathematical operation does not hold (e.g. a
/// non-regular algebra passed where regularity is required).
class PreconditionError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// The requested construction is not supported for this input.
class UnsupportedError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// A computed object failed its own invariants beyond tolerance.
class NumericalError : public std::runtime_error
{
public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"), m_residual(residual)
  {
  }

  double residual() const { return m_residual; }

private:
  double m_residual;
};

/// Input claims a structure that contradicts a proven identity.
class DataCorruptionError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace nilfock

#endif // NILFOCK_ERRORS_HPP
