#pragma once

#include "mldlab/bipoly.hpp"
#include "mldlab/rational.hpp"

#include <string>
#include <vector>

namespace mldlab {

/// One factor a_j^{r_j} of a formal product of ideals.
struct IdealFactor {
  std::vector<BiPoly> generators;
  Rational exponent;

  /// Throws InvalidFactor unless some generator is nonzero and r > 0.
  void validate() const;
  std::string str() const;

  friend bool operator==(const IdealFactor&, const IdealFactor&) = default;
};

/// prod_j a_j^{r_j}; the empty product is the trivial system O_X.
struct IdealSystem {
  std::vector<IdealFactor> factors;

  void validate() const;
  /// "(x)^1/1 * (x, y)^1/2"; "1" for the trivial system.
  std::string str() const;
  /// Stable textual fingerprint used in reports.
  std::string digest() const;

  IdealSystem with_factor(IdealFactor f) const;

  friend bool operator==(const IdealSystem&, const IdealSystem&) = default;
};

/// The maximal ideal (x, y).
IdealFactor maximal_ideal(const Rational& exponent);

} // namespace mldlab
