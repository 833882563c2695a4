#pragma once

#include "mldlab/ideal_system.hpp"
#include "mldlab/rational.hpp"
#include "mldlab/resolution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mldlab {

/// Auxiliary boundary s*D + m^t. D is the reduced divisor of the system's
/// curves with coefficient d < 1, unless explicitD overrides it (used when a
/// perturbed system must keep the D of the unperturbed one).
struct BoundarySpec {
  Rational sD = 0;
  Rational tM = 0;
  std::optional<std::vector<BiPoly>> explicitD;

  void validate() const;
};

enum class Classification { Klt, PltWithCentre, LcNotPlt, NotLc };

std::string to_string(Classification c);

struct MldReport {
  ExtRational value;
  /// "E<id>" for the divisor attaining the minimum, "C<id>" for a curve
  /// whose coefficient exceeds 1, "E<id>" with negative value otherwise.
  std::string computedBy;
  Classification classification = Classification::Klt;
  std::vector<int> nonKltCentres;   // curve ids with coefficient exactly 1
  std::optional<int> F;             // set for plt-with-centre
};

/// 1 + k_E - sum r_j ord_E a_j - sD * ord_E D - tM * ord_E m.
Rational log_discrepancy(const ResolutionGraph& graph, int divisor, const IdealSystem& system,
                         const BoundarySpec& boundary = {});

/// Coefficient of a horizontal curve in the boundary of the triple.
Rational curve_coefficient(const ResolutionGraph& graph, int curve, const BoundarySpec& boundary);

/// The combinatorial mld rule on a complete log resolution.
MldReport mld_on_graph(const ResolutionGraph& graph, const BoundarySpec& boundary = {});

MldReport mld_at_origin(const IdealSystem& system, const BoundarySpec& boundary = {},
                        ResolveOptions options = {});

/// mld_at_origin plus the smoothness / uniqueness checks of the centre.
MldReport classify(const IdealSystem& system, ResolveOptions options = {});

/// Independent oracle for monomial systems: minimises the log discrepancy of
/// monomial valuations. Throws NonMonomialInput.
ExtRational monomial_mld(const IdealSystem& system, const BoundarySpec& boundary = {});

/// Weights (w1, w2) on the local coordinates (u - u0, v - v0) of a chart.
struct MonomialValuation {
  long w1 = 1;
  long w2 = 1;

  MonomialValuation() = default;
  MonomialValuation(long a, long b);
};

struct ValuationData {
  Rational logDiscrepancy;
  std::vector<long> factorOrders;   // ord_G a_j
  long mOrder = 0;                  // ord_G m
  long dOrder = 0;                  // ord_G D
  /// w1*a' + w2*a'' with a', a'' the log discrepancies of the coordinate
  /// axes through the point (1 for an axis that is not exceptional). Equals
  /// logDiscrepancy when nothing else passes through the point.
  Rational cornerTerm;
};

/// Evaluates the monomial valuation centred at a point of the graph's charts.
/// Orders are computed from the original generators pulled back through the
/// chart map, independently of the stored divisor data.
ValuationData monomial_valuation_data(const MonomialValuation& v, const IdealSystem& system,
                                      const RationalPoint& at, const ResolutionGraph& graph,
                                      const BoundarySpec& boundary = {});

/// Every effective constant of the stability argument for a plt triple.
struct StabilityCertificate {
  IdealSystem system;
  Rational c;
  Rational s;
  Rational t;
  Rational tPrime;
  long l = 1;
  int F = 0;
  /// Per divisor of the refined graph: ord_E a_j / ord_E m.
  struct Row {
    int divisor;
    std::vector<Rational> ratios;
    int ordM;
    int ordD;
  };
  std::vector<Row> perDivisorRatios;
  std::vector<BiPoly> D;           // the curves with d < 1
  ResolutionGraph refined;
};

/// Throws NotPlt unless classify(system) is plt-with-centre.
StabilityCertificate compute_constants(const IdealSystem& system, ResolveOptions options = {});

/// Least integer strictly above every ord_E a_j / ord_E m over the given
/// divisors (all divisors when ids is empty).
long level_above_ratios(const ResolutionGraph& graph, const std::vector<int>& ids = {});

} // namespace mldlab
