#include "nilfock/clifford.hpp"
#include "nilfock/field.hpp"
#include "nilfock/fock.hpp"
#include "nilfock/htype.hpp"
#include "nilfock/kirillov.hpp"
#include "nilfock/regularity.hpp"
#include "nilfock/sampling.hpp"
#include "nilfock/symbols.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

using namespace nilfock;
using Eigen::VectorXcd;
using Eigen::VectorXd;

namespace
{

struct Outcome
{
  bool pass = false;
  std::string detail;
};

std::string sci(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::vector<VectorXcd> complex_sphere(int n, int count, std::uint64_t seed)
{
  Rng rng(seed);
  std::vector<VectorXcd> out;
  for (const auto& p : random_sphere_points(2 * n, count, rng))
  {
    VectorXcd z(n);
    for (int j = 0; j < n; ++j)
      z(j) = Complex(p(2 * j), p(2 * j + 1));
    out.push_back(z);
  }
  return out;
}

Outcome ccr()
{
  const double hom_tol = 1e-10, ah_tol = 1e-12;
  const int K = 12;
  Rng rng(101);
  double hom = 0.0, ah = 0.0;
  int reps = 0;
  for (const auto& a :
       {make_heisenberg(1), make_heisenberg(2), make_heisenberg(3), make_quaternionic_heisenberg(1)})
    for (const auto& theta : random_sphere_points(static_cast<int>(a.n2()), 16, rng))
    {
      const KirillovRep r = build_rep(a, theta, K);
      hom = std::max(hom, verify_homomorphism(r));
      ah = std::max(ah, anti_hermitian_defect(r));
      ++reps;
    }
  return {hom <= hom_tol && ah <= ah_tol,
          "representations=" + std::to_string(reps) + " homomorphism=" + sci(hom) + " (<= " + sci(hom_tol) +
              ") anti_hermitian=" + sci(ah) + " (<= " + sci(ah_tol) + ") K=12 seed=101"};
}

Outcome regularity_equivalence()
{
  Rng gen(202), sampler(203);
  const RegularityOptions options;
  const int n1s[] = {2, 4, 6};
  int compared = 0, excluded = 0, disagreements = 0, regular = 0;
  for (int i = 0; i < 200; ++i)
  {
    const int n1 = n1s[gen.raw() % 3];
    const int n2 = 1 + static_cast<int>(gen.raw() % 3);
    const Step2Algebrad a = random_algebra(n1, n2, gen);
    const auto v = is_regular(a, options);
    if (v.min_sigma >= 0.5 * v.tolerance && v.min_sigma <= 2.0 * v.tolerance)
    {
      ++excluded;
      continue;
    }
    const bool omega_route = v.min_sigma > v.tolerance;
    const bool ad_route = ad_surjectivity_sample(a, 64, sampler, options).all_surjective;
    regular += omega_route ? 1 : 0;
    disagreements += omega_route == ad_route ? 0 : 1;
    ++compared;
  }
  return {disagreements == 0 && compared + excluded == 200,
          "compared=" + std::to_string(compared) + " excluded=" + std::to_string(excluded) +
              " regular=" + std::to_string(regular) + " disagreements=" + std::to_string(disagreements) +
              " tol=1e-8*max|B| ad_starts=64 seeds=202,203"};
}

Outcome htype_catalog()
{
  const double tol = 1e-12;
  double worst = 0.0;
  std::vector<Step2Algebrad> catalog = {make_heisenberg(1), make_heisenberg(2), make_heisenberg(3),
                                        make_quaternionic_heisenberg(1), make_quaternionic_heisenberg(2)};
  for (int m = 1; m <= 4; ++m)
    catalog.push_back(make_htype_from_clifford(m, 1));
  bool all_htype = true;
  for (const auto& a : catalog)
  {
    const HTypeVerdict v = is_htype(a);
    worst = std::max(worst, v.clifford_defect);
    all_htype = all_htype && v.is_htype;
  }
  const Step2Algebrad fixture = make_perturbed_quaternionic();
  const double fixture_defect = is_htype(fixture).clifford_defect;
  const bool fixture_regular = is_regular(fixture).regular;
  return {worst <= tol && all_htype && fixture_defect >= 1e-3 && fixture_regular,
          "catalog_defect=" + sci(worst) + " (<= " + sci(tol) + ") perturbed_defect=" + sci(fixture_defect) +
              " (>= 1e-3) perturbed_regular=" + (fixture_regular ? "true" : "false")};
}

Outcome clifford_dimensions()
{
  const int dims[] = {2, 4, 4, 8, 8, 8, 8, 16, 32};
  // real, complex or quaternionic commutant of the irreducible module of Cl(0, m)
  const int commutants[] = {2, 4, 4, 4, 2, 1, 1, 1, 2};
  const double tol = 1e-13;
  bool pass = true;
  double worst = 0.0;
  std::string got;
  for (int m = 1; m <= 9; ++m)
  {
    const auto gens = clifford_generators(m);
    const int d = clifford_irrep_dim(m);
    const double defect = clifford_relation_defect(gens);
    worst = std::max(worst, defect);
    pass = pass && d == dims[m - 1] && static_cast<int>(gens.size()) == m && gens.front().rows() == d &&
           defect <= tol && commutant_dimension(gens) == commutants[m - 1];
    got += (m > 1 ? "," : "") + std::to_string(d);
  }
  return {pass, "dims=(" + got + ") relation_defect=" + sci(worst) + " (<= " + sci(tol) +
                    ") commutants=(2,4,4,4,2,1,1,1,2)"};
}

Outcome toeplitz_symbols()
{
  const auto t = enumerate_basis(2, 64);
  const FockOperator s1 = shift(t, 1);
  const FockOperator c = commutator(s1.adjoint(), s1);
  bool pass = true;
  std::string ratios;
  for (int L : {8, 16})
  {
    const double d1 = compactness_defect(c, L, 1), d2 = compactness_defect(c, 2 * L, 1);
    pass = pass && d2 <= 0.6 * d1;
    ratios += " ratio_L" + std::to_string(L) + "=" + sci(d2 / d1);
  }
  const SymbolExpr sum = SymbolExpr::shift_adjoint(2, 1) * SymbolExpr::shift(2, 1) +
                         SymbolExpr::shift_adjoint(2, 2) * SymbolExpr::shift(2, 2);
  double worst = 0.0;
  for (const auto& z : complex_sphere(2, 128, 505))
    worst = std::max(worst, std::abs(symbol_value(sum, z) - 1.0));
  pass = pass && worst <= 1e-10;
  return {pass,
          "n=2 K=64 margin=1" + ratios + " (<= 0.6) symbol_defect=" + sci(worst) + " (<= 1e-10) seed=505"};
}

Outcome flow()
{
  const auto t = enumerate_basis(2, 64);
  const FockOperator s = shift(t, 1);
  const SymbolExpr word = SymbolExpr::shift(2, 1);
  const auto zetas = complex_sphere(2, 128, 606);
  bool pass = true;
  double worst_ratio = 0.0, worst_symbol = 0.0;
  for (double time : {0.5, std::numbers::pi})
  {
    const FockOperator diff = flow_conjugate(time, s) - s;
    for (int L : {8, 16, 32})
    {
      const double bound = std::abs(time) / (2.0 * (L + 1)) + 1e-12;
      const double d = compactness_defect(diff, L);
      pass = pass && d <= bound;
      worst_ratio = std::max(worst_ratio, d / bound);
    }
    const SymbolExpr moved = flow_conjugate(time, word);
    for (const auto& z : zetas)
      worst_symbol = std::max(worst_symbol, std::abs(symbol_value(moved, z) - symbol_value(word, z)));
  }
  pass = pass && worst_symbol <= 1e-8;
  return {pass, "max defect/bound=" + sci(worst_ratio) + " (<= 1, bound |t|/(2(L+1))+1e-12) symbol_defect=" +
                    sci(worst_symbol) + " (<= 1e-8) seed=606"};
}

Outcome weyl_identity()
{
  const double tol = 1e-12;
  std::vector<Step2Algebrad> catalog = {make_heisenberg(1),
                                        make_heisenberg(2),
                                        make_heisenberg(3),
                                        make_quaternionic_heisenberg(1),
                                        make_quaternionic_heisenberg(2),
                                        make_complexified_heisenberg(1)};
  for (int m = 1; m <= 7; ++m)
    catalog.push_back(make_htype_from_clifford(m, 1));
  Rng rng(707);
  double worst = 0.0;
  int reps = 0;
  for (const auto& a : catalog)
    for (const auto& theta : random_sphere_points(static_cast<int>(a.n2()), 2, rng))
    {
      worst = std::max(worst, weyl_shift_identity(build_rep(a, theta, 12)).max());
      ++reps;
    }
  return {worst <= tol, "algebras=" + std::to_string(catalog.size()) +
                            " representations=" + std::to_string(reps) + " residual=" + sci(worst) +
                            " (<= " + sci(tol) + ") K=12 seed=707"};
}

Outcome t0_membership_check()
{
  const Step2Algebrad q = make_quaternionic_heisenberg(1);
  const auto thetas = sphere_samples(3, 64);
  const auto points = sphere_samples(4, 64);
  VectorXd x = VectorXd::Zero(4);
  x(0) = 1.0;
  const T0Verdict section = t0_membership(q, complexified_shift_section(q, x, thetas), points, 1e-10);
  std::vector<SectionFiber> jump;
  for (const auto& theta : thetas)
    jump.push_back({theta, theta(2) > 0.0 ? SymbolExpr::shift(2, 1) : SymbolExpr::shift(2, 2)});
  const T0Verdict counter = t0_membership(q, jump, points, 1e-10);
  const bool section_ok = section.spread <= 1e-10;
  const bool counter_ok = counter.spread >= 0.5;
  return {section_ok && counter_ok, "section_spread=" + sci(section.spread) + " (<= 1e-10 " +
                                        (section_ok ? "met" : "not met") +
                                        ") counterexample_spread=" + sci(counter.spread) + " (>= 0.5 " +
                                        (counter_ok ? "met" : "not met") + ") theta_samples=64"};
}

Outcome orbits()
{
  Rng rng(909);
  const int n1s[] = {2, 4, 6};
  int algebras = 0, checks = 0, failures = 0, draws = 0;
  while (algebras < 20)
  {
    ++draws;
    const int n1 = n1s[rng.raw() % 3];
    const int n2 = 1 + static_cast<int>(rng.raw() % 3);
    const Step2Algebrad a = random_algebra(n1, n2, rng);
    const auto v = is_regular(a);
    if (!v.regular)
      continue;
    ++algebras;
    for (const auto& theta : random_sphere_points(n2, 16, rng))
    {
      const VectorXd eta = random_sphere_points(n1, 1, rng).front();
      const auto o = coadjoint_orbit(a, v, eta, VectorXd(theta));
      failures += (o.kind == OrbitKind::FlatAffine && o.orbit_dimension == n1) ? 0 : 1;
      ++checks;
    }
    const auto point = coadjoint_orbit(a, v, VectorXd(VectorXd::Ones(n1)), VectorXd(VectorXd::Zero(n2)));
    failures += (point.kind == OrbitKind::Point && point.orbit_dimension == 0) ? 0 : 1;
    ++checks;
  }
  return {failures == 0, "regular_algebras=20 draws=" + std::to_string(draws) + " checks=" +
                             std::to_string(checks) + " failures=" + std::to_string(failures) + " seed=909"};
}

Outcome field_scan()
{
  const ChartField heis = left_invariant_chart(make_heisenberg(1), grid_points(3, -1, 1, 5));
  const ChartSummary h = scan_chart(heis);
  const bool heis_ok = heis.points.size() == 125 && h.polycontact && h.htype_manifold && h.htype_class &&
                       h.htype_class->center_dim == 1 && h.htype_class->g1_dim == 2;
  const ChartField inv = involutive_chart(3, 2, grid_points(3, -1, 1, 5));
  const ChartSummary i = scan_chart(inv);
  const ChartField mixed = mixed_fixture_chart();
  const ChartSummary m = scan_chart(mixed);
  std::vector<std::size_t> expected;
  for (std::size_t p = 0; p < mixed.points.size(); ++p)
    if (mixed.points[p][0] > 0)
      expected.push_back(p);
  const bool mixed_ok = m.polycontact && !m.htype_manifold && m.non_htype_points == expected;
  const DThetaCheck dh = dtheta_identity(heis);
  const DThetaCheck di = dtheta_identity(inv);
  const bool dtheta_ok =
      dh.mismatches == 0 && di.mismatches == 0 && dh.evaluations == 125 && di.evaluations == 125;
  return {heis_ok && !i.polycontact && mixed_ok && dtheta_ok,
          std::string("heisenberg=") + (heis_ok ? "polycontact,htype,(1,2)" : "wrong") +
              " involutive_polycontact=" + (i.polycontact ? "true" : "false") +
              " mixed_violations=" + std::to_string(m.non_htype_points.size()) + "/" +
              std::to_string(expected.size()) + (mixed_ok ? " match" : " mismatch") +
              " dtheta_mismatches=" + std::to_string(dh.mismatches + di.mismatches) + " exact"};
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail; exit 0 iff exactly these fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"CCR/homomorphism", ccr},
      {"regularity equivalence", regularity_equivalence},
      {"H-type catalog", htype_catalog},
      {"Clifford dimensions", clifford_dimensions},
      {"Toeplitz symbol sequence", toeplitz_symbols},
      {"flow", flow},
      {"generator isomorphism identity", weyl_identity},
      {"T0 membership", t0_membership_check},
      {"orbits", orbits},
      {"field scan", field_scan},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i)
  {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try
    {
      o = criteria[i].second();
    }
    catch (const std::exception& e)
    {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass)
      failed.insert(static_cast<int>(i + 1));
    std::printf("criterion %2zu %-32s %s  %s  [%.1fs]\n", i + 1, criteria[i].first.c_str(),
                o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds);
    std::fflush(stdout);
  }

  const std::set<int> declared(expect_fail.begin(), expect_fail.end());
  std::printf("failed: %zu of %zu", failed.size(), criteria.size());
  if (!declared.empty())
  {
    std::printf("; declared expected failures:");
    for (int k : declared)
      std::printf(" %d", k);
  }
  std::printf("\n");
  return failed == declared ? 0 : 1;
}
