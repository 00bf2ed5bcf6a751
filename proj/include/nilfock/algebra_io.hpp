#ifndef NILFOCK_ALGEBRA_IO_HPP
#define NILFOCK_ALGEBRA_IO_HPP

#include "nilfock/step2_algebra.hpp"

#include <iosfwd>
#include <string>

namespace nilfock
{

/// Reads the line-oriented algebra format:
///   dims <n1> <n2>
///   b <k> <i> <j> <value>          B[k](i,j) = value = -B[k](j,i), 1-based
///   g1metric <i> <j> <value>       symmetric entry of the g1 metric
///   g2metric <i> <j> <value>
/// '#' starts a comment. If any metric line is present for a layer, that
/// metric starts from zero; otherwise it is the identity.
Step2Algebrad parse_algebra(std::istream& in);
Step2Algebrad load_algebra(const std::string& path);

/// Writes with 17 significant digits so that parse_algebra reproduces the algebra exactly.
void write_algebra(std::ostream& out, const Step2Algebrad& a);
void save_algebra(const std::string& path, const Step2Algebrad& a);

} // namespace nilfock

#endif // NILFOCK_ALGEBRA_IO_HPP
