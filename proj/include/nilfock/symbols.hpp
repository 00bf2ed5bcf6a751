#ifndef NILFOCK_SYMBOLS_HPP
#define NILFOCK_SYMBOLS_HPP

#include "nilfock/fock.hpp"
#include "nilfock/step2_algebra.hpp"
#include "nilfock/symplectic.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace nilfock
{

enum class LetterKind
{
  Shift,
  ShiftAdjoint,
  Compact,
  LevelFunction
};

/// Generator of a Toeplitz word on the Fock space over C^n.
struct Letter
{
  LetterKind kind = LetterKind::Shift;
  /// Shift vector for Shift / ShiftAdjoint.
  Eigen::VectorXcd w;
  /// Compact letters: matrix on the first rows/cols of the basis (vacuum projector if empty).
  Eigen::MatrixXcd block;
  /// LevelFunction letters: diagonal g(|alpha|) and its limit as the level grows.
  std::function<Complex(int)> level_function;
  Complex limit = 1.0;

  static Letter shift(Eigen::VectorXcd w);
  static Letter shift_adjoint(Eigen::VectorXcd w);
  static Letter compact(Eigen::MatrixXcd block = {});
  static Letter level(std::function<Complex(int)> g, Complex limit);
};

/// coefficient * letters[0] * letters[1] * ... (the last letter acts first).
struct Word
{
  Complex coefficient = 1.0;
  std::vector<Letter> letters;
};

/// Finite linear combination of words.
struct SymbolExpr
{
  std::vector<Word> words;

  static SymbolExpr letter(Letter l);
  static SymbolExpr shift(const Eigen::VectorXcd& w) { return letter(Letter::shift(w)); }
  static SymbolExpr shift_adjoint(const Eigen::VectorXcd& w) { return letter(Letter::shift_adjoint(w)); }
  /// S_{e_j} and S_{e_j}^* on C^n, j 1-based.
  static SymbolExpr shift(int n, int j);
  static SymbolExpr shift_adjoint(int n, int j);
  static SymbolExpr compact(Eigen::MatrixXcd block = {}) { return letter(Letter::compact(std::move(block))); }
};

SymbolExpr operator+(SymbolExpr a, const SymbolExpr& b);
SymbolExpr operator-(SymbolExpr a, const SymbolExpr& b);
SymbolExpr operator*(const SymbolExpr& a, const SymbolExpr& b);
SymbolExpr operator*(Complex c, SymbolExpr a);
SymbolExpr commutator(const SymbolExpr& a, const SymbolExpr& b);
SymbolExpr adjoint(const SymbolExpr& a);

FockOperator to_operator(const Letter& l, const FockTruncationPtr& t);
FockOperator to_operator(const SymbolExpr& e, const FockTruncationPtr& t);

/// Principal symbol at a point zeta of the unit sphere of C^n: S_w -> sum_j w_j zeta_j,
/// S_w^* -> its conjugate, compacts -> 0, level functions -> their limit; words multiply.
Complex symbol_value(const SymbolExpr& e, const Eigen::VectorXcd& zeta);

/// (N+1)^{it/2} op (N+1)^{-it/2}.
FockOperator flow_conjugate(double t, const FockOperator& op);

/// The same conjugation on words: each shift is followed by the level function
/// ((k+2)/(k+1))^{it/2} (adjoints by (k/(k+1))^{it/2}), whose limit is 1.
SymbolExpr flow_conjugate(double t, const SymbolExpr& e);

/// Complex structure and Darboux basis attached to one central direction theta.
struct ThetaFrame
{
  Eigen::VectorXd theta;
  CompatibleTriple<double> triple;
  DarbouxBasis<double> darboux;
};

ThetaFrame theta_frame(const Step2Algebrad& a, const Eigen::VectorXd& theta);

/// Hermitian identification of S*g1 with the unit sphere of C^n at theta:
/// zeta_j = (xi(X_j) + i xi(Y_j)) / |.|.
Eigen::VectorXcd hermitian_point(const ThetaFrame& f, const Eigen::VectorXd& xi);

/// Fock coordinates w of X_c(theta) = (X - i J_theta X)/sqrt(2): w_j = a_j - i b_j for
/// X = sum_j a_j X_j + b_j Y_j, so that X_c(X_j) = W_j.
Eigen::VectorXcd complexified_coordinates(const ThetaFrame& f, const Eigen::VectorXd& x);

struct SymbolSample
{
  std::vector<Eigen::VectorXd> theta_points;
  std::vector<Eigen::VectorXd> sphere_points;
  /// values[word][theta][sphere]
  std::vector<std::vector<std::vector<Complex>>> values;
};

/// Symbols of fixed Fock words under the theta-dependent identification.
SymbolSample symbol_eval(const Step2Algebrad& a, const std::vector<SymbolExpr>& words,
                         const std::vector<Eigen::VectorXd>& theta_points,
                         const std::vector<Eigen::VectorXd>& sphere_points);

/// One fiber of a section theta -> word.
struct SectionFiber
{
  Eigen::VectorXd theta;
  SymbolExpr word;
};

struct T0Verdict
{
  bool member = false;
  /// max over sphere points of the spread (max pairwise distance) across theta.
  double spread = 0.0;
  double tolerance = 1e-8;
};

T0Verdict t0_membership(const Step2Algebrad& a, const std::vector<SectionFiber>& section,
                        const std::vector<Eigen::VectorXd>& sphere_points, double tolerance = 1e-8);

/// theta -> S_{X_c(theta)} for fixed x in g1.
std::vector<SectionFiber> complexified_shift_section(const Step2Algebrad& a, const Eigen::VectorXd& x,
                                                     const std::vector<Eigen::VectorXd>& theta_points);

} // namespace nilfock

#endif // NILFOCK_SYMBOLS_HPP
