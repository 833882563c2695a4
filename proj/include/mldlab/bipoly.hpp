#pragma once

#include "mldlab/rational.hpp"
#include "mldlab/upoly.hpp"

#include <compare>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace mldlab {

/// Exponent pair (i, j) of the monomial x^i y^j.
struct Monomial {
  int i = 0;
  int j = 0;

  int degree() const { return i + j; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic comparison: total degree first, then x-degree.
bool grlex_less(const Monomial& a, const Monomial& b);

/// Order or multiplicity value; kInfinity stands for the order of zero.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Sparse polynomial in x, y with rational coefficients. No stored zeros.
class BiPoly {
public:
  using Terms = std::map<Monomial, Rational>;

  BiPoly() = default;
  BiPoly(const Rational& constant);
  BiPoly(int constant) : BiPoly(Rational(constant)) {}

  static BiPoly x();
  static BiPoly y();
  static BiPoly term(const Rational& c, int i, int j);
  /// Embeds a univariate polynomial as a polynomial in x (or in y).
  static BiPoly from_x(const UPoly& p);
  static BiPoly from_y(const UPoly& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(int i, int j) const;
  void add_term(const Rational& c, int i, int j);

  int total_degree() const;
  int degree_x() const;
  int degree_y() const;
  /// Minimal total degree of a term; kInfinity for zero.
  int order() const;
  /// min(w1*i + w2*j) over the support; kInfinity for zero.
  long weighted_order(long w1, long w2) const;

  /// Graded-lexicographic leading monomial and coefficient; nonzero only.
  Monomial leading_monomial() const;
  const Rational& leading_coeff() const;
  /// Scaled so the grlex leading coefficient is 1.
  BiPoly monic() const;

  /// Terms of total degree exactly d.
  BiPoly homogeneous_part(int d) const;
  /// Terms of total degree < l.
  BiPoly truncate_below(int l) const;

  Rational eval(const Rational& x0, const Rational& y0) const;
  /// f(x + a, y + b): re-centres the point (a, b) to the origin.
  BiPoly translate(const Rational& a, const Rational& b) const;
  /// f(X, Y) for polynomial substitutions X, Y.
  BiPoly substitute(const BiPoly& X, const BiPoly& Y) const;
  /// f(0, y) and f(x, 0).
  UPoly restrict_x_zero() const;
  UPoly restrict_y_zero() const;
  /// Exact division by x^a y^b; all exponents must stay nonnegative.
  BiPoly divide_monomial(int a, int b) const;
  BiPoly swap_xy() const;
  BiPoly diff_x() const;
  BiPoly diff_y() const;

  /// Coefficients in Q[x] of successive powers of y.
  std::vector<UPoly> coeffs_in_y() const;
  static BiPoly from_coeffs_in_y(const std::vector<UPoly>& c);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  BiPoly operator-() const;
  BiPoly pow(int e) const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;
  friend bool operator<(const BiPoly& a, const BiPoly& b) { return a.terms_ < b.terms_; }

  /// Canonical text form, grlex-descending terms, e.g. "x^2 - 3/2*x*y + y^3".
  std::string str() const;

private:
  Terms terms_;
};

} // namespace mldlab
