#pragma once

#include "mldlab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mldlab {

/// Dense univariate polynomial over the rationals. coeffs()[i] multiplies
/// t^i; the top coefficient is never zero (the zero polynomial is empty).
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& constant);
  UPoly(int constant) : UPoly(Rational(constant)) {}

  /// t - root
  static UPoly linear(const Rational& root);
  static UPoly monomial(const Rational& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  UPoly operator-() const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string str(char var = 't') const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtendedGcd {
  UPoly g, s, t;
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);
/// Squarefree part, monic.
UPoly squarefree_part(const UPoly& f);

struct RationalRoot {
  Rational root;
  int multiplicity;
};

/// Rational roots with multiplicity (ascending), and the monic cofactor
/// that has no rational root. f must be nonzero.
struct RootSplit {
  std::vector<RationalRoot> roots;
  UPoly remainder;
};
RootSplit rational_roots(const UPoly& f);

} // namespace mldlab
