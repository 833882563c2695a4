#pragma once

#include "mldlab/algebra.hpp"
#include "mldlab/ideal_system.hpp"

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mldlab {

/// Exceptional divisor over the origin with its proximity bookkeeping.
struct ExcDivisor {
  int id = 0;
  int k = 0;                       // order of K_{X'/X} along E
  int ordM = 0;                    // ord_E m
  std::vector<int> ordFactor;      // ord_E a_j
  std::vector<int> ordCurve;       // ord_E of each horizontal curve
  std::vector<int> parents;        // divisors through the blown-up point
  std::set<int> neighbors;         // divisors meeting E on the current model
  RationalPoint centre;            // the blown-up point
};

/// Where a strict transform meets the exceptional locus on the final model.
/// Either a rational point, or the roots of an irreducible-over-Q polynomial
/// (no rational root) in the chart-A coordinate along E.
struct CurveIncidence {
  int divisor = 0;
  std::optional<RationalPoint> point;
  UPoly irrational_roots;
};

/// Component through the origin of the divisorial part of the system.
struct HorizontalCurve {
  int id = 0;
  BiPoly poly;
  std::vector<int> multiplicity;   // per factor
  Rational d;                      // sum_j r_j * multiplicity[j]
  int order_at_origin = 0;
  bool smooth = false;             // order 1 at the origin
  std::vector<CurveIncidence> incidences;
};

/// Affine chart of an intermediate model. Coordinates are (u, v); a chart
/// keeps the polynomials needed near its own divisor only.
struct Chart {
  std::string name;
  int divisor = 0;                 // 0 for the base plane
  BiPoly mapX, mapY;               // base coordinates in terms of (u, v)
  std::vector<std::vector<BiPoly>> residual; // weak transforms, per factor
  std::vector<BiPoly> curves;      // strict transforms, per curve
  std::optional<int> divUZero;     // divisor {u = 0}
  std::optional<int> divVZero;     // divisor {v = 0}
};

struct BlowUpRecord {
  RationalPoint point;
  std::vector<int> parents;
  int divisor = 0;
};

struct SncViolation {
  RationalPoint point;
  std::string reason;
};

struct ResolveOptions {
  std::size_t blowup_cap = 10000;
};

/// A log resolution of (X, a*m) over the origin, possibly still in progress.
struct ResolutionGraph {
  IdealSystem system;
  std::vector<ExcDivisor> divisors;   // id = index + 1
  std::vector<HorizontalCurve> curves; // id = index
  std::map<std::string, Chart> charts;
  std::vector<BlowUpRecord> blowUpLog;
  std::deque<SncViolation> pending;   // points still to blow up
  bool sncComplete = false;
  std::optional<int> F;               // unique divisor meeting the d = 1 curve

  const ExcDivisor& divisor(int id) const;
  const Chart& chart(const std::string& name) const;
  bool was_blown_up(const RationalPoint& p) const;
  /// Sum over curves with d < 1 of ordCurve.
  int ord_D(int divisor_id) const;
  std::vector<int> d_curves() const;
  std::optional<int> c_curve() const;
};

/// The base plane with the system split into residual ideals and curves;
/// the origin is pending.
ResolutionGraph initial_graph(const IdealSystem& system);

/// Blows up p. Returns the new divisor id.
int blow_up(ResolutionGraph& graph, const RationalPoint& p);

/// Runs the blow-up loop until the pending queue empties.
ResolutionGraph log_resolution(const IdealSystem& system, ResolveOptions options = {});
/// Stops after at most max_steps blow-ups; the result may be incomplete.
ResolutionGraph partial_resolution(const IdealSystem& system, std::size_t max_steps);

/// Blows up points of D-curves on divisors with ord_E D < c/s - 1.
void refine_for_D(ResolutionGraph& graph, const Rational& s, const Rational& c);

/// Recomputes every remaining violation of the snc conditions from chart
/// data; empty iff the model is a log resolution.
std::vector<SncViolation> snc_status(const ResolutionGraph& graph);

/// Recomputes curve incidences and F on a complete graph.
void update_incidences(ResolutionGraph& graph);

bool dual_graph_is_tree(const ResolutionGraph& graph);

/// Graphviz rendering of the dual graph.
std::string to_dot(const ResolutionGraph& graph);

} // namespace mldlab
