#include "commands.hpp"

#include "nilfock/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using nilfock::cli::Report;
using nilfock::cli::RunConfig;

namespace
{

void add_regularity_flags(CLI::App* cmd, RunConfig& c)
{
  cmd->add_option("--rel-tol", c.relative_tolerance, "regularity threshold relative to max |B[k]|")
      ->capture_default_str();
  cmd->add_option("--grid", c.grid_points, "theta-sphere grid size")->capture_default_str();
  cmd->add_option("--refine", c.refine_starts, "grid minima refined by local descent")->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{
      "Step-2 nilpotent algebras, Kirillov representations on truncated Fock space, Toeplitz symbols"};
  app.require_subcommand(1);
  RunConfig c;
  std::string output;
  app.add_option("--output", output, "write the report to this file instead of stdout");

  auto* validate = app.add_subcommand("validate", "skewness, generation and regularity report");
  validate->add_option("algebra", c.input, "algebra file")->required();
  add_regularity_flags(validate, c);

  auto* classify = app.add_subcommand("classify", "H-type verdict and class pair");
  classify->add_option("algebra", c.input, "algebra file")->required();

  auto* orbit = app.add_subcommand("orbit", "coadjoint orbit through (eta, theta)");
  orbit->add_option("algebra", c.input, "algebra file")->required();
  orbit->add_option("--eta", c.eta, "covector on g1, comma separated (default 0)");
  orbit->add_option("--theta", c.theta, "covector on g2, comma separated")->required();
  add_regularity_flags(orbit, c);

  auto* represent = app.add_subcommand("represent", "matrices of pi_theta and their defects");
  represent->add_option("algebra", c.input, "algebra file")->required();
  represent->add_option("--theta", c.theta, "covector on g2, comma separated")->required();
  represent->add_option("-K", c.K, "top Fock level (default 12)");
  represent->add_option("--out-dir", c.out_dir, "directory for rho_*.fockop dumps");
  represent->add_option("--tol", c.tolerance, "homomorphism tolerance (default 1e-10)");
  represent->add_option("--tol2", c.secondary_tolerance, "anti-hermitian tolerance (default 1e-12)");

  auto* verify = app.add_subcommand("verify", "property suites with measured defects");
  verify->add_option("--suite", c.suite, "suite")
      ->required()
      ->check(CLI::IsMember({"ccr", "symbol", "flow", "clifford", "darboux", "homogeneity", "equivalence"}));
  verify->add_option("algebra", c.input,
                     "algebra file (ccr, darboux, homogeneity; optional for equivalence)");
  verify->add_option("-K", c.K, "top Fock level (default 12; 64 for symbol and flow)");
  verify->add_option("--theta", c.theta, "covector literal or sphere:N (default sphere:<samples>)");
  verify->add_option("--samples", c.samples, "theta sphere samples")->capture_default_str();
  verify->add_option("--tol", c.tolerance, "primary tolerance (suite default)");
  verify->add_option("--tol2", c.secondary_tolerance, "secondary tolerance (suite default)");
  verify->add_option("--seed", c.seed, "random seed")->capture_default_str();
  verify->add_option("--starts", c.starts, "ad-surjectivity starts")->capture_default_str();
  verify->add_option("--count", c.count, "random algebras for equivalence")->capture_default_str();
  verify->add_option("--modes", c.modes, "Fock modes for symbol and flow")->capture_default_str();
  verify->add_option("--times", c.times, "flow times, comma separated (pi allowed)")->capture_default_str();
  verify->add_option("--lambda", c.lambdas, "dilation factors, comma separated")->capture_default_str();
  verify->add_option("--levels", c.levels, "compactness levels L, comma separated");
  verify->add_option("--m", c.clifford_m, "Clifford ranks, comma separated (default 1..9)");
  add_regularity_flags(verify, c);

  auto* scan = app.add_subcommand("field-scan", "osculating algebras over a chart");
  scan->add_option("chart", c.input, "chart file");
  scan->add_option("--builtin", c.builtin, "built-in chart")
      ->check(CLI::IsMember({"heisenberg", "involutive", "mixed", "quaternionic"}));
  scan->add_option("--expect", c.expect, "exit 1 unless the chart is polycontact or H-type")
      ->check(CLI::IsMember({"polycontact", "htype"}));
  add_regularity_flags(scan, c);

  auto* make = app.add_subcommand("make", "write a catalog algebra");
  make->add_option("--type", c.type, "algebra type")
      ->required()
      ->check(CLI::IsMember({"heisenberg", "quaternionic", "complexified", "clifford"}));
  make->add_option("--n", c.n, "Heisenberg rank or quaternionic multiplicity")->capture_default_str();
  make->add_option("--m", c.m, "Clifford rank (dim g2)")->capture_default_str();
  make->add_option("--multiplicity", c.multiplicity, "Clifford module multiplicity")->capture_default_str();

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp& e)
  {
    return app.exit(e);
  }
  catch (const CLI::CallForAllHelp& e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError& e)
  {
    app.exit(e);
    return 2;
  }
  c.command = app.get_subcommands().front()->get_name();

  Report report;
  int code = 0;
  try
  {
    code = nilfock::cli::run(c, report);
  }
  catch (const nilfock::InputError& e)
  {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  }
  catch (const nilfock::DataCorruptionError& e)
  {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  }
  catch (const std::exception& e)
  {
    report.add("error", e.what());
    code = 1;
  }

  if (output.empty())
    std::cout << report.text();
  else
  {
    std::ofstream out(output);
    if (!out)
    {
      std::cerr << "input error: cannot write '" << output << "'\n";
      return 2;
    }
    out << report.text();
  }
  return code;
}
