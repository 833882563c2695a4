#pragma once

#include "mldlab/bipoly.hpp"
#include "mldlab/upoly.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mldlab {

/// A point (u, v) in the coordinates of a named chart. The base plane is
/// the chart "base"; resolution charts are named "E<k>.A" / "E<k>.B".
struct RationalPoint {
  std::string chart = "base";
  Rational u;
  Rational v;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

std::string to_string(const RationalPoint& p);

/// Multiplicity of f at p; kInfinity iff f = 0. f is read in p's chart.
int order_at(const RationalPoint& p, const BiPoly& f);

/// min over generators of order_at. Throws EmptyGeneratorList.
int ideal_order_at(const RationalPoint& p, std::span<const BiPoly> gens);

/// f / g when g divides f exactly, std::nullopt otherwise. g nonzero.
std::optional<BiPoly> exact_divide(const BiPoly& f, const BiPoly& g);

/// gcd normalised to grlex leading coefficient 1; gcd(0, 0) = 0.
BiPoly gcd(const BiPoly& f, const BiPoly& g);
BiPoly gcd(std::span<const BiPoly> polys);

/// gcd of the coefficients of f viewed in Q[x][y] (a monic polynomial in x).
UPoly content_in_y(const BiPoly& f);

/// Res_y(f, g) as a polynomial in x. Both nonzero.
UPoly resultant_y(const BiPoly& f, const BiPoly& g);

/// Pairs (s_i, i) with f = const * prod s_i^i, each s_i squarefree, monic,
/// pairwise coprime. f nonzero.
std::vector<std::pair<BiPoly, int>> squarefree_decomposition(const BiPoly& f);

struct CurveComponent {
  BiPoly poly;
  int multiplicity;
};

/// Squarefree decomposition refined by splitting off univariate contents and
/// their rational linear factors. Components are monic, squarefree, pairwise
/// coprime, not necessarily irreducible.
std::vector<CurveComponent> curve_components(const BiPoly& f);

/// Refines a list of nonconstant polynomials into a pairwise coprime basis
/// such that each input is, up to a constant, a product of basis powers.
std::vector<BiPoly> coprime_basis(std::vector<BiPoly> polys);

struct DivisorialSplit {
  BiPoly h;                              // monic gcd of the generators
  std::vector<BiPoly> residual;          // nonzero g / h
  std::vector<CurveComponent> components; // factorisation of h
};

/// Throws AllZeroGenerators / EmptyGeneratorList.
DivisorialSplit divisorial_split(std::span<const BiPoly> gens);

struct CosupportOptions {
  /// Inputs with a generator of larger total degree are rejected; 0 selects
  /// twice the maximal generator degree.
  int degree_bound = 0;
};

/// All rational common zeros of the generators in the base plane, sorted.
/// Throws PositiveDimensionalCosupport when the gcd is nonconstant and
/// IrrationalBasePoint when a common zero exists only over an extension.
std::vector<RationalPoint> rational_cosupport(std::span<const BiPoly> gens,
                                              CosupportOptions options = {});

} // namespace mldlab
