#ifndef NILFOCK_TOOLS_COMMANDS_HPP
#define NILFOCK_TOOLS_COMMANDS_HPP

#include "report.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace nilfock::cli
{

/// Flags of one invocation. Unset tolerances fall back to the defaults of each command.
struct RunConfig
{
  std::string command;
  std::string input;
  std::string theta;
  std::string eta;
  std::optional<int> K;
  std::string suite;
  std::optional<double> tolerance;
  std::optional<double> secondary_tolerance;
  double relative_tolerance = 1e-8;
  int grid_points = 4096;
  int refine_starts = 3;
  std::uint64_t seed = 1;
  int samples = 64;
  int starts = 64;
  int count = 200;
  int modes = 2;
  std::string times = "0.5,pi";
  std::string lambdas = "2";
  std::string levels;
  std::string clifford_m;
  std::string out_dir;
  std::string builtin;
  std::string expect;
  std::string type;
  int n = 1;
  int m = 1;
  int multiplicity = 1;
};

/// Runs one command, appending to `report`. Returns 0 on success or pass and 1 on a
/// negative verdict. Input problems surface as InputError.
int run(const RunConfig& config, Report& report);

} // namespace nilfock::cli

#endif // NILFOCK_TOOLS_COMMANDS_HPP
