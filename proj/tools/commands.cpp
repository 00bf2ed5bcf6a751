#include "commands.hpp"

#include "nilfock/algebra_io.hpp"
#include "nilfock/clifford.hpp"
#include "nilfock/field.hpp"
#include "nilfock/fock.hpp"
#include "nilfock/htype.hpp"
#include "nilfock/kirillov.hpp"
#include "nilfock/regularity.hpp"
#include "nilfock/sampling.hpp"
#include "nilfock/symbols.hpp"
#include "nilfock/symplectic.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace nilfock::cli
{

namespace
{

using Eigen::VectorXcd;
using Eigen::VectorXd;

double parse_real(const std::string& token)
{
  std::string t = token;
  double sign = 1.0;
  if (!t.empty() && (t[0] == '-' || t[0] == '+'))
  {
    sign = t[0] == '-' ? -1.0 : 1.0;
    t.erase(0, 1);
  }
  if (t == "pi")
    return sign * std::numbers::pi;
  try
  {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used == t.size() && std::isfinite(v))
      return sign * v;
  }
  catch (const std::logic_error&)
  {
  }
  throw InputError("malformed number '" + token + "'");
}

std::vector<double> parse_list(const std::string& text)
{
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_real(item));
  if (out.empty())
    throw InputError("empty list '" + text + "'");
  return out;
}

VectorXd parse_vector(const std::string& text, Eigen::Index size, const char* what)
{
  const auto values = parse_list(text);
  if (static_cast<Eigen::Index>(values.size()) != size)
    throw InputError(std::string(what) + " needs " + std::to_string(size) + " components, got " +
                     std::to_string(values.size()));
  return Eigen::Map<const VectorXd>(values.data(), size);
}

int parse_count(const std::string& text)
{
  try
  {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size() && v > 0)
      return v;
  }
  catch (const std::logic_error&)
  {
  }
  throw InputError("malformed sample count '" + text + "'");
}

/// `sphere:N` samples the unit sphere of g2^*; anything else is a literal covector.
std::vector<VectorXd> theta_points(const RunConfig& c, Eigen::Index n2, Report& r)
{
  std::string spec = c.theta.empty() ? "sphere:" + std::to_string(c.samples) : c.theta;
  r.add("theta", spec);
  if (spec.rfind("sphere:", 0) == 0)
    return sphere_samples(static_cast<int>(n2), parse_count(spec.substr(7)));
  return {parse_vector(spec, n2, "theta")};
}

Step2Algebrad require_algebra(const RunConfig& c, Report& r)
{
  if (c.input.empty())
    throw InputError(c.command + ": an algebra file is required");
  r.add("input", c.input);
  return load_algebra(c.input);
}

RegularityOptions regularity_options(const RunConfig& c)
{
  RegularityOptions o;
  o.relative_tolerance = c.relative_tolerance;
  o.grid_points = c.grid_points;
  o.refine_starts = c.refine_starts;
  return o;
}

int truncation_level(const RunConfig& c, int fallback)
{
  const int K = c.K.value_or(fallback);
  if (K < 2)
    throw InputError("truncation level K must be at least 2");
  return K;
}

const char* failure_name(RegularityFailure f)
{
  switch (f)
  {
  case RegularityFailure::None:
    return "none";
  case RegularityFailure::OddDimension:
    return "odd-dimension";
  case RegularityFailure::DegenerateForm:
    return "degenerate-form";
  case RegularityFailure::NotGenerated:
    return "not-generated";
  }
  return "unknown";
}

std::string verdict_word(bool pass)
{
  return pass ? "pass" : "fail";
}

// Random points of the unit sphere of C^n.
std::vector<VectorXcd> complex_sphere(int n, int count, std::uint64_t seed)
{
  std::vector<VectorXcd> out;
  Rng rng(seed);
  for (const auto& p : random_sphere_points(2 * n, count, rng))
  {
    VectorXcd z(n);
    for (int j = 0; j < n; ++j)
      z(j) = Complex(p(2 * j), p(2 * j + 1));
    out.push_back(z);
  }
  return out;
}

std::vector<int> levels_or(const RunConfig& c, std::vector<int> fallback)
{
  if (c.levels.empty())
    return fallback;
  std::vector<int> out;
  for (double v : parse_list(c.levels))
  {
    if (v < 0 || v != std::floor(v))
      throw InputError("levels must be nonnegative integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

int cmd_validate(const RunConfig& c, Report& r)
{
  const Step2Algebrad a = require_algebra(c, r);
  const RegularityOptions o = regularity_options(c);
  const auto v = is_regular(a, o);
  r.add("n1", static_cast<long>(a.n1()));
  r.add("n2", static_cast<long>(a.n2()));
  r.add("skew", "exact");
  r.add("generation_rank", static_cast<long>(v.generation_rank));
  r.add("generated", v.generated);
  r.add("grid_points", o.grid_points);
  r.add("refine_starts", o.refine_starts);
  r.add("relative_tolerance", o.relative_tolerance);
  r.add("tolerance", v.tolerance);
  if (v.failure != RegularityFailure::OddDimension)
    r.add("min_sigma", v.min_sigma);
  if (v.theta_witness.size() > 0)
    r.add("theta_argmin", Report::vector(v.theta_witness));
  if (v.x_witness.size() > 0)
    r.add("x_witness", Report::vector(v.x_witness));
  r.add("failure", failure_name(v.failure));
  r.add("verdict", v.regular ? "Regular" : "NotRegular");
  return v.regular ? 0 : 1;
}

int cmd_classify(const RunConfig& c, Report& r)
{
  const Step2Algebrad a = require_algebra(c, r);
  const HTypeVerdict v = is_htype(a);
  r.add("n1", static_cast<long>(a.n1()));
  r.add("n2", static_cast<long>(a.n2()));
  r.add("clifford_defect", v.clifford_defect);
  r.add("orthogonality_defect", v.orthogonality_defect);
  r.add("tolerance", v.tolerance);
  r.add("htype", v.is_htype);
  if (!v.is_htype)
    return 1;
  const HTypeClass k = classify_htype(a);
  r.add("class", "(" + std::to_string(k.center_dim) + ", " + std::to_string(k.g1_dim) + ")");
  r.add("multiplicity", k.multiplicity);
  return 0;
}

int cmd_orbit(const RunConfig& c, Report& r)
{
  const Step2Algebrad a = require_algebra(c, r);
  const VectorXd eta = c.eta.empty() ? VectorXd::Zero(a.n1()) : parse_vector(c.eta, a.n1(), "eta");
  if (c.theta.empty())
    throw InputError("orbit: --theta is required");
  const VectorXd theta = parse_vector(c.theta, a.n2(), "theta");
  r.add("eta", Report::vector(eta));
  r.add("theta", Report::vector(theta));
  const auto v = is_regular(a, regularity_options(c));
  r.add("relative_tolerance", c.relative_tolerance);
  r.add("regular", v.regular);
  if (!v.regular)
  {
    r.add("kind", "unsupported");
    r.add("reason", "orbit classification requires a regular algebra");
    return 1;
  }
  const auto orbit = coadjoint_orbit(a, v, eta, theta);
  r.add("kind", orbit.kind == OrbitKind::Point ? "Point" : "FlatAffine");
  r.add("orbit_dimension", static_cast<long>(orbit.orbit_dimension));
  return 0;
}

int cmd_represent(const RunConfig& c, Report& r)
{
  const Step2Algebrad a = require_algebra(c, r);
  if (c.theta.empty())
    throw InputError("represent: --theta is required");
  const VectorXd theta = parse_vector(c.theta, a.n2(), "theta");
  const int K = truncation_level(c, 12);
  const double hom_tol = c.tolerance.value_or(1e-10);
  const double ah_tol = c.secondary_tolerance.value_or(1e-12);
  r.add("theta", Report::vector(theta));
  r.add("K", K);
  const KirillovRep rep = build_rep(a, theta, K);
  r.add("modes", rep.truncation->modes());
  r.add("dimension", static_cast<unsigned long>(rep.truncation->dimension()));
  r.add("darboux_residual", darboux_residual(rep.triple.omega, rep.triple.J, rep.darboux));
  const double hom = verify_homomorphism(rep);
  const double ah = anti_hermitian_defect(rep);
  r.add("homomorphism_defect", hom);
  r.add("homomorphism_tolerance", hom_tol);
  r.add("anti_hermitian_defect", ah);
  r.add("anti_hermitian_tolerance", ah_tol);
  if (!c.out_dir.empty())
  {
    std::filesystem::create_directories(c.out_dir);
    const Eigen::Index total = a.n1() + a.n2();
    for (Eigen::Index i = 0; i < total; ++i)
    {
      const std::string name = i < a.n1() ? "rho_e" + std::to_string(i + 1) + ".fockop"
                                          : "rho_z" + std::to_string(i - a.n1() + 1) + ".fockop";
      const std::string path = (std::filesystem::path(c.out_dir) / name).string();
      std::ofstream out(path);
      if (!out)
        throw InputError("cannot write '" + path + "'");
      write_dump(out, rep.rho_basis(i));
      r.add("dump", path);
    }
  }
  const bool pass = hom <= hom_tol && ah <= ah_tol;
  r.add("verdict", verdict_word(pass));
  return pass ? 0 : 1;
}

bool suite_ccr(const RunConfig& c, Report& r)
{
  const Step2Algebrad a = require_algebra(c, r);
  const int K = truncation_level(c, 12);
  const double hom_tol = c.tolerance.value_or(1e-10);
  const double ah_tol = c.secondary_tolerance.value_or(1e-12);
  r.add("K", K);
  double hom = 0.0, ah = 0.0;
  const auto thetas = theta_points(c, a.n2(), r);
  for (const auto& theta : thetas)
  {
    const KirillovRep rep = build_rep(a, theta, K);
    hom = std::max(hom, verify_homomorphism(rep));
    ah = std::max(ah, anti_hermitian_defect(rep));
  }
  r.add("theta_samples", static_cast<unsigned long>(thetas.size()));
  r.add("homomorphism_defect", hom);
  r.add("homomorphism_tolerance", hom_tol);
  r.add("anti_hermitian_defect", ah);
  r.add("anti_hermitian_tolerance", ah_tol);
  return hom <= hom_tol && ah <= ah_tol;
}

bool suite_darboux(const RunConfig& c, Report& r)
{
  const Step2Algebrad a = require_algebra(c, r);
  const double j_tol = c.secondary_tolerance.value_or(1e-12);
  const double d_tol = c.tolerance.value_or(1e-10);
  double square = 0.0, invariance = 0.0, darboux = 0.0, min_eig = std::numeric_limits<double>::infinity();
  const auto thetas = theta_points(c, a.n2(), r);
  for (const auto& theta : thetas)
  {
    const ThetaFrame f = theta_frame(a, theta);
    const auto [sq, inv] = triple_residuals(f.triple);
    square = std::max(square, sq);
    invariance = std::max(invariance, inv);
    darboux = std::max(darboux, darboux_residual(f.triple.omega, f.triple.J, f.darboux));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(f.triple.positive_form);
    min_eig = std::min(min_eig, eig.eigenvalues()(0));
  }
  r.add("theta_samples", static_cast<unsigned long>(thetas.size()));
  r.add("j_square_residual", square);
  r.add("omega_invariance_residual", invariance);
  r.add("complex_structure_tolerance", j_tol);
  r.add("darboux_residual", darboux);
  r.add("darboux_tolerance", d_tol);
  r.add("min_positive_form_eigenvalue", min_eig);
  return square <= j_tol && invariance <= j_tol * std::max(1.0, a.bracket_scale()) && darboux <= d_tol &&
         min_eig > 0.0;
}

bool suite_homogeneity(const RunConfig& c, Report& r)
{
  const Step2Algebrad a = require_algebra(c, r);
  const int K = truncation_level(c, 12);
  const double tol = c.tolerance.value_or(1e-10);
  const auto lambdas = parse_list(c.lambdas);
  r.add("K", K);
  r.add("lambda", c.lambdas);
  HomogeneityReport worst;
  double literal_min = std::numeric_limits<double>::infinity();
  const auto thetas = theta_points(c, a.n2(), r);
  for (const auto& theta : thetas)
    for (double lambda : lambdas)
    {
      if (!(lambda > 0.0))
        throw InputError("lambda must be positive");
      const HomogeneityReport h = homogeneity_check(a, theta, lambda, K);
      worst.scaled_darboux_residual = std::max(worst.scaled_darboux_residual, h.scaled_darboux_residual);
      worst.central_character_residual =
          std::max(worst.central_character_residual, h.central_character_residual);
      worst.pullback_residual = std::max(worst.pullback_residual, h.pullback_residual);
      worst.rebuild_residual = std::max(worst.rebuild_residual, h.rebuild_residual);
      literal_min = std::min(literal_min, h.literal_scaling_residual);
    }
  r.add("theta_samples", static_cast<unsigned long>(thetas.size()));
  r.add("scaled_darboux_residual", worst.scaled_darboux_residual);
  r.add("central_character_residual", worst.central_character_residual);
  r.add("pullback_residual", worst.pullback_residual);
  r.add("rebuild_residual", worst.rebuild_residual);
  r.add("literal_scaling_residual_min", literal_min);
  r.add("tolerance", tol);
  return worst.scaled_darboux_residual <= tol && worst.central_character_residual <= tol &&
         worst.pullback_residual <= tol && worst.rebuild_residual <= tol;
}

bool suite_equivalence(const RunConfig& c, Report& r)
{
  const RegularityOptions o = regularity_options(c);
  r.add("seed", static_cast<unsigned long long>(c.seed));
  r.add("ad_starts", c.starts);
  r.add("relative_tolerance", o.relative_tolerance);
  r.add("excluded_band", "[0.5 tol, 2 tol]");
  Rng sampler(c.seed + 1);
  auto compare = [&](const Step2Algebrad& a, int& excluded) -> bool
  {
    const auto v = is_regular(a, o);
    if (a.n1() % 2 == 0 && v.min_sigma >= 0.5 * v.tolerance && v.min_sigma <= 2.0 * v.tolerance)
    {
      ++excluded;
      return true;
    }
    const bool omega_route = a.n1() % 2 == 0 && v.min_sigma > v.tolerance;
    const bool ad_route = ad_surjectivity_sample(a, c.starts, sampler, o).all_surjective;
    return omega_route == ad_route;
  };
  int excluded = 0, disagreements = 0;
  if (!c.input.empty())
  {
    const Step2Algebrad a = require_algebra(c, r);
    disagreements += compare(a, excluded) ? 0 : 1;
    r.add("instances", 1);
  }
  else
  {
    Rng gen(c.seed);
    const int n1s[] = {2, 4, 6};
    int regular = 0;
    for (int i = 0; i < c.count; ++i)
    {
      const int n1 = n1s[gen.raw() % 3];
      const int n2 = 1 + static_cast<int>(gen.raw() % 3);
      const Step2Algebrad a = random_algebra(n1, n2, gen);
      disagreements += compare(a, excluded) ? 0 : 1;
      regular += is_regular(a, o).regular ? 1 : 0;
    }
    r.add("instances", c.count);
    r.add("regular_instances", regular);
  }
  r.add("excluded", excluded);
  r.add("disagreements", disagreements);
  return disagreements == 0;
}

bool suite_clifford(const RunConfig& c, Report& r)
{
  std::vector<int> ms;
  if (c.clifford_m.empty())
    for (int m = 1; m <= 9; ++m)
      ms.push_back(m);
  else
    for (double v : parse_list(c.clifford_m))
    {
      if (v < 1 || v != std::floor(v))
        throw InputError("clifford m must be a positive integer");
      ms.push_back(static_cast<int>(v));
    }
  const double tol = c.tolerance.value_or(1e-13);
  r.add("relation_tolerance", tol);
  bool pass = true;
  for (int m : ms)
  {
    const auto gens = clifford_generators(m);
    const int dim = clifford_irrep_dim(m);
    const double defect = clifford_relation_defect(gens);
    const int commutant = commutant_dimension(gens);
    const int expected = irreducible_commutant_dimension(m);
    const bool ok = !gens.empty() && gens.front().rows() == dim && defect <= tol && commutant == expected;
    pass = pass && ok;
    std::ostringstream line;
    line << "dim=" << dim << " relation_defect=" << Report::number(defect) << " commutant=" << commutant
         << " expected_commutant=" << expected << " " << verdict_word(ok);
    r.add("m" + std::to_string(m), line.str());
  }
  return pass;
}

bool suite_symbol(const RunConfig& c, Report& r)
{
  const int K = truncation_level(c, 64);
  const int n = c.modes;
  if (n < 1)
    throw InputError("modes must be positive");
  const double ratio = c.tolerance.value_or(0.6);
  const double sym_tol = c.secondary_tolerance.value_or(1e-10);
  const auto levels = levels_or(c, {K / 8, K / 4});
  r.add("modes", n);
  r.add("K", K);
  r.add("ratio_bound", ratio);
  r.add("symbol_tolerance", sym_tol);
  r.add("interior_margin", 1);
  const auto t = enumerate_basis(n, K);
  const FockOperator s1 = shift(t, 1);
  const FockOperator comm = commutator(s1.adjoint(), s1);
  bool pass = true;
  for (int L : levels)
  {
    if (2 * L > K)
      throw InputError("level " + std::to_string(L) + " too large for K");
    const double d1 = compactness_defect(comm, L, 1);
    const double d2 = compactness_defect(comm, 2 * L, 1);
    const bool ok = d2 <= ratio * d1;
    pass = pass && ok;
    r.add("levels_" + std::to_string(L) + "_" + std::to_string(2 * L),
          "defect=" + Report::number(d1) + " doubled=" + Report::number(d2) +
              " ratio=" + Report::number(d1 > 0.0 ? d2 / d1 : 0.0) + " " + verdict_word(ok));
  }
  SymbolExpr sum;
  for (int j = 1; j <= n; ++j)
    sum = sum + SymbolExpr::shift_adjoint(n, j) * SymbolExpr::shift(n, j);
  double worst = 0.0;
  const auto zetas = complex_sphere(n, 128, c.seed);
  r.add("seed", static_cast<unsigned long long>(c.seed));
  for (const auto& z : zetas)
    worst = std::max(worst, std::abs(symbol_value(sum, z) - 1.0));
  r.add("sphere_samples", static_cast<unsigned long>(zetas.size()));
  r.add("partition_of_unity_defect", worst);
  return pass && worst <= sym_tol;
}

bool suite_flow(const RunConfig& c, Report& r)
{
  const int K = truncation_level(c, 64);
  const int n = c.modes;
  if (n < 1)
    throw InputError("modes must be positive");
  const auto times = parse_list(c.times);
  const auto levels = levels_or(c, {K / 8, K / 4, K / 2});
  const double slack = c.tolerance.value_or(1e-12);
  const double sym_tol = c.secondary_tolerance.value_or(1e-8);
  r.add("modes", n);
  r.add("K", K);
  r.add("times", c.times);
  r.add("bound", "|t|/(2(L+1)) + slack");
  r.add("slack", slack);
  r.add("symbol_tolerance", sym_tol);
  const auto t = enumerate_basis(n, K);
  const FockOperator s = shift(t, 1);
  const SymbolExpr word = SymbolExpr::shift(n, 1);
  const auto zetas = complex_sphere(n, 128, c.seed);
  r.add("seed", static_cast<unsigned long long>(c.seed));
  r.add("sphere_samples", static_cast<unsigned long>(zetas.size()));
  bool pass = true;
  for (std::size_t i = 0; i < times.size(); ++i)
  {
    const double time = times[i];
    const FockOperator diff = flow_conjugate(time, s) - s;
    const std::string tag = "t" + std::to_string(i + 1);
    r.add(tag, Report::coordinate(time));
    for (int L : levels)
    {
      const double d = compactness_defect(diff, L);
      const double bound = std::abs(time) / (2.0 * (L + 1)) + slack;
      pass = pass && d <= bound;
      r.add(tag + "_defect_L" + std::to_string(L), d);
      r.add(tag + "_bound_L" + std::to_string(L), bound);
    }
    const SymbolExpr moved = flow_conjugate(time, word);
    double worst = 0.0;
    for (const auto& z : zetas)
      worst = std::max(worst, std::abs(symbol_value(moved, z) - symbol_value(word, z)));
    pass = pass && worst <= sym_tol;
    r.add(tag + "_symbol_defect", worst);
  }
  return pass;
}

int cmd_verify(const RunConfig& c, Report& r)
{
  r.add("suite", c.suite);
  bool pass = false;
  if (c.suite == "ccr")
    pass = suite_ccr(c, r);
  else if (c.suite == "darboux")
    pass = suite_darboux(c, r);
  else if (c.suite == "homogeneity")
    pass = suite_homogeneity(c, r);
  else if (c.suite == "equivalence")
    pass = suite_equivalence(c, r);
  else if (c.suite == "clifford")
    pass = suite_clifford(c, r);
  else if (c.suite == "symbol")
    pass = suite_symbol(c, r);
  else if (c.suite == "flow")
    pass = suite_flow(c, r);
  else
    throw InputError("unknown suite '" + c.suite + "'");
  r.add("verdict", verdict_word(pass));
  return pass ? 0 : 1;
}

ChartField builtin_chart(const std::string& name)
{
  if (name == "heisenberg")
    return left_invariant_chart(make_heisenberg(1), grid_points(3, -1, 1, 5));
  if (name == "involutive")
    return involutive_chart(3, 2, grid_points(3, -1, 1, 5));
  if (name == "quaternionic")
    return left_invariant_chart(make_quaternionic_heisenberg(1), grid_points(7, -1, 1, 2));
  if (name == "mixed")
    return mixed_fixture_chart();
  throw InputError("unknown builtin chart '" + name + "'");
}

int cmd_field_scan(const RunConfig& c, Report& r)
{
  if (c.input.empty() == c.builtin.empty())
    throw InputError("field-scan: give exactly one of a chart file or --builtin");
  ChartField f;
  if (!c.builtin.empty())
  {
    r.add("builtin", c.builtin);
    f = builtin_chart(c.builtin);
  }
  else
  {
    r.add("input", c.input);
    f = load_chart(c.input);
  }
  const RegularityOptions o = regularity_options(c);
  const ChartSummary s = scan_chart(f, o);
  r.add("ambient", f.ambient);
  r.add("hrank", f.hrank);
  r.add("points", static_cast<unsigned long>(f.points.size()));
  r.add("relative_tolerance", o.relative_tolerance);
  r.add("polycontact", s.polycontact);
  r.add("htype", s.htype_manifold);
  if (s.htype_class)
    r.add("class", "(" + std::to_string(s.htype_class->center_dim) + ", " +
                       std::to_string(s.htype_class->g1_dim) + ")");
  r.add("non_regular_count", static_cast<unsigned long>(s.non_regular_points.size()));
  r.add("non_regular_points", Report::list(s.non_regular_points));
  r.add("non_htype_count", static_cast<unsigned long>(s.non_htype_points.size()));
  r.add("non_htype_points", Report::list(s.non_htype_points));
  double min_sigma = std::numeric_limits<double>::infinity(), max_defect = 0.0;
  for (const auto& p : s.reports)
  {
    min_sigma = std::min(min_sigma, p.regularity.min_sigma);
    max_defect = std::max(max_defect, p.htype.clifford_defect);
  }
  r.add("min_sigma", min_sigma);
  r.add("max_clifford_defect", max_defect);
  bool ok = true;
  if (f.tensor_field)
    r.add("dtheta_identity", "n/a (tensor-field chart)");
  else
  {
    const DThetaCheck d = dtheta_identity(f);
    r.add("dtheta_evaluations", static_cast<unsigned long>(d.evaluations));
    r.add("dtheta_mismatches", static_cast<unsigned long>(d.mismatches));
    ok = d.mismatches == 0;
  }
  if (c.expect == "polycontact")
    ok = ok && s.polycontact;
  else if (c.expect == "htype")
    ok = ok && s.htype_manifold;
  else if (!c.expect.empty())
    throw InputError("unknown --expect value '" + c.expect + "'");
  return ok ? 0 : 1;
}

int cmd_make(const RunConfig& c, Report& r)
{
  Step2Algebrad a = make_heisenberg(1);
  if (c.n < 1 || c.m < 1 || c.multiplicity < 1)
    throw InputError("make: --n, --m and --multiplicity must be positive");
  if (c.type == "heisenberg")
    a = make_heisenberg(c.n);
  else if (c.type == "quaternionic")
    a = make_quaternionic_heisenberg(c.n);
  else if (c.type == "complexified")
    a = make_complexified_heisenberg(c.n);
  else if (c.type == "clifford")
    a = make_htype_from_clifford(c.m, c.multiplicity);
  else
    throw InputError("unknown algebra type '" + c.type + "'");
  std::ostringstream out;
  write_algebra(out, a);
  r.raw(out.str());
  return 0;
}

} // namespace

int run(const RunConfig& c, Report& r)
{
  if (c.command == "make")
    return cmd_make(c, r);
  r.add("command", c.command);
  if (c.command == "validate")
    return cmd_validate(c, r);
  if (c.command == "classify")
    return cmd_classify(c, r);
  if (c.command == "orbit")
    return cmd_orbit(c, r);
  if (c.command == "represent")
    return cmd_represent(c, r);
  if (c.command == "verify")
    return cmd_verify(c, r);
  if (c.command == "field-scan")
    return cmd_field_scan(c, r);
  throw InputError("unknown command '" + c.command + "'");
}

} // namespace nilfock::cli
