#include "mldlab/error.hpp"
#include "mldlab/mld.hpp"

#include <algorithm>

namespace mldlab {

namespace {
[[noreturn]] void broken(const std::string& what) {
  throw Error(ErrorKind::InternalInvariant, "certificate invariant failed: " + what);
}
} // namespace

StabilityCertificate compute_constants(const IdealSystem& system, ResolveOptions options) {
  ResolutionGraph graph = log_resolution(system, options);
  MldReport report = mld_on_graph(graph);
  if (report.classification != Classification::PltWithCentre)
    throw Error(ErrorKind::NotPlt, "system is " + to_string(report.classification) + ", not plt with a centre");
  if (!graph.F) throw Error(ErrorKind::NotInScope, "the centre curve does not meet a unique divisor");

  StabilityCertificate cert;
  cert.system = system;
  cert.c = report.value.value();
  cert.F = *graph.F;

  auto min_ratio = [&](const BoundarySpec& b) {
    std::optional<Rational> best;
    for (const auto& e : graph.divisors) {
      Rational r = log_discrepancy(graph, e.id, system, b) / e.ordM;
      if (!best || r < *best) best = r;
    }
    return *best;
  };
  cert.t = min_ratio({});
  const std::vector<int> dcurves = graph.d_curves();
  if (dcurves.empty()) {
    cert.s = 1;
    cert.tPrime = cert.t;
  } else {
    std::optional<Rational> s;
    for (const auto& e : graph.divisors) {
      int od = graph.ord_D(e.id);
      if (od == 0) continue;
      Rational r = log_discrepancy(graph, e.id, system) / od;
      if (!s || r < *s) s = r;
    }
    for (int i : dcurves) {
      Rational cap = 1 - graph.curves[static_cast<std::size_t>(i)].d;
      if (!s || cap < *s) s = cap;
    }
    cert.s = *s;
    cert.tPrime = min_ratio({cert.s, 0, std::nullopt});
    for (int i : dcurves) cert.D.push_back(graph.curves[static_cast<std::size_t>(i)].poly);
  }

  refine_for_D(graph, cert.s, cert.c);
  cert.l = level_above_ratios(graph);
  for (const auto& e : graph.divisors) {
    StabilityCertificate::Row row{e.id, {}, e.ordM, graph.ord_D(e.id)};
    for (int ord : e.ordFactor) row.ratios.push_back(Rational(ord) / e.ordM);
    cert.perDivisorRatios.push_back(std::move(row));
  }

  // Re-verify on fresh resolutions and on the refined graph.
  if (mld_at_origin(system, {cert.s, cert.tPrime, std::nullopt}, options).value != ExtRational(Rational(0)))
    broken("mld(X, sD, a m^t') != 0");
  if (mld_at_origin(system, {0, cert.t, std::nullopt}, options).value != ExtRational(Rational(0)))
    broken("mld(X, a m^t) != 0");
  if (cert.t * graph.divisor(cert.F).ordM != cert.c) broken("t * ord_F m != c");
  for (const auto& row : cert.perDivisorRatios)
    for (const auto& r : row.ratios)
      if (!(Rational(cert.l) > r)) broken("l does not exceed ord_E a_j / ord_E m on E" + std::to_string(row.divisor));
  const Rational bound = cert.c / cert.s - 1;
  for (int i : dcurves)
    for (const auto& inc : graph.curves[static_cast<std::size_t>(i)].incidences)
      if (Rational(graph.ord_D(inc.divisor)) < bound) broken("ord_E D < c/s - 1 after refinement");
  cert.refined = std::move(graph);
  return cert;
}

} // namespace mldlab
