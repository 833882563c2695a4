#include "mldlab/mld.hpp"
#include "mldlab/error.hpp"

#include <algorithm>

namespace mldlab {

void BoundarySpec::validate() const {
  if (sD < 0 || tM < 0) throw Error(ErrorKind::InvalidArgument, "boundary coefficients must be nonnegative");
}

std::string to_string(Classification c) {
  switch (c) {
  case Classification::Klt: return "klt";
  case Classification::PltWithCentre: return "plt-with-centre";
  case Classification::LcNotPlt: return "lc-not-plt";
  case Classification::NotLc: return "not-lc";
  }
  return "unknown";
}

Rational log_discrepancy(const ResolutionGraph& graph, int divisor, const IdealSystem& system,
                         const BoundarySpec& boundary) {
  const ExcDivisor& e = graph.divisor(divisor);
  // the trivial system may be evaluated on any graph
  if (!system.factors.empty() && system.factors.size() != e.ordFactor.size())
    throw Error(ErrorKind::FactorCountMismatch, "system does not match the resolution graph");
  Rational a = 1 + e.k;
  for (std::size_t j = 0; j < system.factors.size(); ++j) a -= system.factors[j].exponent * e.ordFactor[j];
  a -= boundary.sD * graph.ord_D(divisor);
  a -= boundary.tM * e.ordM;
  return a;
}

Rational curve_coefficient(const ResolutionGraph& graph, int curve, const BoundarySpec& boundary) {
  const HorizontalCurve& c = graph.curves.at(static_cast<std::size_t>(curve));
  return c.d < 1 ? c.d + boundary.sD : c.d;
}

MldReport mld_on_graph(const ResolutionGraph& graph, const BoundarySpec& boundary) {
  if (!graph.sncComplete) throw Error(ErrorKind::NotResolved, "mld needs a complete log resolution");
  if (boundary.explicitD) throw Error(ErrorKind::InvalidArgument, "explicit D is resolved by mld_at_origin");
  MldReport report;
  for (const auto& c : graph.curves) {
    Rational coef = curve_coefficient(graph, c.id, boundary);
    if (coef > 1 && report.computedBy.empty()) report.computedBy = "C" + std::to_string(c.id);
    if (coef == 1) report.nonKltCentres.push_back(c.id);
  }
  std::optional<Rational> best;
  int argmin = 0;
  for (const auto& e : graph.divisors) {
    Rational a = log_discrepancy(graph, e.id, graph.system, boundary);
    if (!best || a < *best) {
      best = a;
      argmin = e.id;
    }
  }
  if (!report.computedBy.empty() || (best && *best < 0)) {
    if (report.computedBy.empty()) report.computedBy = "E" + std::to_string(argmin);
    report.value = ExtRational::minus_infinity();
    report.classification = Classification::NotLc;
    report.nonKltCentres.clear();
    return report;
  }
  report.value = *best;
  report.computedBy = "E" + std::to_string(argmin);
  if (*best == 0) report.classification = Classification::LcNotPlt;
  else if (!report.nonKltCentres.empty()) report.classification = Classification::PltWithCentre;
  else report.classification = Classification::Klt;
  if (report.classification == Classification::PltWithCentre && report.nonKltCentres.size() == 1) {
    const auto& incs = graph.curves[static_cast<std::size_t>(report.nonKltCentres.front())].incidences;
    if (incs.size() == 1) report.F = incs.front().divisor;
  }
  return report;
}

namespace {
IdealSystem with_explicit_boundary(const IdealSystem& system, const BoundarySpec& boundary) {
  if (!boundary.explicitD || boundary.explicitD->empty() || boundary.sD == 0) return system;
  BiPoly product(1);
  for (const auto& d : *boundary.explicitD) product *= d;
  return system.with_factor({{product}, boundary.sD});
}
} // namespace

MldReport mld_at_origin(const IdealSystem& system, const BoundarySpec& boundary, ResolveOptions options) {
  boundary.validate();
  if (boundary.explicitD) {
    IdealSystem augmented = with_explicit_boundary(system, boundary);
    return mld_on_graph(log_resolution(augmented, options), BoundarySpec{0, boundary.tM, std::nullopt});
  }
  return mld_on_graph(log_resolution(system, options), boundary);
}

MldReport classify(const IdealSystem& system, ResolveOptions options) {
  ResolutionGraph graph = log_resolution(system, options);
  MldReport report = mld_on_graph(graph);
  if (report.classification == Classification::PltWithCentre) {
    if (report.nonKltCentres.size() != 1)
      throw Error(ErrorKind::NotInScope, "positive mld with several curves of coefficient 1");
    const HorizontalCurve& c = graph.curves[static_cast<std::size_t>(report.nonKltCentres.front())];
    if (!c.smooth)
      throw Error(ErrorKind::NotInScope, "positive mld with a singular coefficient-1 curve " + c.poly.str());
    if (!report.F || report.F != graph.F)
      throw Error(ErrorKind::NotInScope, "centre curve meets more than one exceptional divisor");
  }
  return report;
}

MonomialValuation::MonomialValuation(long a, long b) : w1(a), w2(b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), Integer(a).get_mpz_t(), Integer(b).get_mpz_t());
  if (a <= 0 || b <= 0 || g != 1)
    throw Error(ErrorKind::InvalidArgument, "monomial valuation weights must be positive and coprime");
}

ValuationData monomial_valuation_data(const MonomialValuation& v, const IdealSystem& system,
                                      const RationalPoint& at, const ResolutionGraph& graph,
                                      const BoundarySpec& boundary) {
  const Chart& chart = graph.chart(at.chart);
  std::optional<int> divU = at.u == 0 ? chart.divUZero : std::nullopt;
  std::optional<int> divV = at.v == 0 ? chart.divVZero : std::nullopt;
  if (chart.divisor == 0 ? (at.u != 0 || at.v != 0) : (!divU && !divV))
    throw Error(ErrorKind::PointNotOverOrigin, to_string(at) + " does not lie over the origin");
  if (system.factors.size() != graph.system.factors.size())
    throw Error(ErrorKind::FactorCountMismatch, "system does not match the resolution graph");

  const BiPoly X = chart.mapX.translate(at.u, at.v);
  const BiPoly Y = chart.mapY.translate(at.u, at.v);
  auto pulled_order = [&](const BiPoly& f) {
    return f.is_zero() ? static_cast<long>(kInfinity) : f.substitute(X, Y).weighted_order(v.w1, v.w2);
  };

  ValuationData out;
  Rational a = Rational(v.w1) + Rational(v.w2);
  if (divU) a += Rational(v.w1) * graph.divisor(*divU).k;
  if (divV) a += Rational(v.w2) * graph.divisor(*divV).k;
  for (const auto& f : system.factors) {
    long ord = kInfinity;
    for (const auto& g : f.generators) ord = std::min(ord, pulled_order(g));
    out.factorOrders.push_back(ord);
    a -= f.exponent * ord;
  }
  out.mOrder = std::min(X.weighted_order(v.w1, v.w2), Y.weighted_order(v.w1, v.w2));
  a -= boundary.tM * out.mOrder;
  std::vector<BiPoly> dpolys;
  if (boundary.explicitD) dpolys = *boundary.explicitD;
  else
    for (int i : graph.d_curves()) dpolys.push_back(graph.curves[static_cast<std::size_t>(i)].poly);
  for (const auto& d : dpolys) out.dOrder += pulled_order(d);
  a -= boundary.sD * out.dOrder;
  out.logDiscrepancy = a;

  BoundarySpec implicit{boundary.sD, boundary.tM, std::nullopt};
  Rational au = divU ? log_discrepancy(graph, *divU, system, implicit) : Rational(1);
  Rational av = divV ? log_discrepancy(graph, *divV, system, implicit) : Rational(1);
  out.cornerTerm = Rational(v.w1) * au + Rational(v.w2) * av;
  return out;
}

long level_above_ratios(const ResolutionGraph& graph, const std::vector<int>& ids) {
  std::vector<int> which = ids;
  if (which.empty())
    for (const auto& e : graph.divisors) which.push_back(e.id);
  Rational best = 0;
  for (int id : which) {
    const ExcDivisor& e = graph.divisor(id);
    for (int ord : e.ordFactor) best = std::max(best, Rational(Rational(ord) / e.ordM));
  }
  return floor(best).get_si() + 1;
}

} // namespace mldlab
