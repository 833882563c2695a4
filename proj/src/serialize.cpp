#include "mldlab/serialize.hpp"
#include "mldlab/error.hpp"
#include "mldlab/parse.hpp"

namespace mldlab {

namespace {

Json header(const char* kind) {
  Json j;
  j["schema"] = std::string("mldlab.") + kind;
  j["version"] = kSchemaVersion;
  return j;
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json polys(const std::vector<BiPoly>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(p.str());
  return out;
}

Rational rational_field(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::InvalidArgument, "expected a rational \"p/q\", got " + j.dump());
}

Json sample_json(const SampleResult& s) {
  Json j;
  j["index"] = s.index;
  j["strategy"] = to_string(s.strategy);
  j["perturbed"] = to_json(s.perturbed);
  j["equivalent"] = s.equivalent;
  j["mld"] = to_string(s.mld);
  if (s.auxiliary) j["auxiliaryMlds"] = {to_string(s.auxiliary->first), to_string(s.auxiliary->second)};
  j["pass"] = s.pass;
  return j;
}

} // namespace

Json to_json(const IdealSystem& system) {
  Json j = header("system");
  Json factors = Json::array();
  for (const auto& f : system.factors)
    factors.push_back({{"generators", polys(f.generators)}, {"exponent", to_string(f.exponent)}});
  j["factors"] = factors;
  return j;
}

IdealSystem system_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("factors") || !doc["factors"].is_array())
    throw Error(ErrorKind::InvalidArgument, "system document needs a \"factors\" array");
  IdealSystem s;
  for (const auto& f : doc["factors"]) {
    IdealFactor factor;
    const Json& g = f.at("generators");
    if (g.is_string()) factor.generators = parse_generators(g.get<std::string>());
    else
      for (const auto& p : g) factor.generators.push_back(poly_parse(p.get<std::string>()));
    factor.exponent = rational_field(f.at("exponent"));
    s.factors.push_back(std::move(factor));
  }
  s.validate();
  return s;
}

Json to_json(const RationalPoint& p) {
  return {{"chart", p.chart}, {"u", to_string(p.u)}, {"v", to_string(p.v)}};
}

RationalPoint point_from_json(const Json& doc) {
  return {doc.at("chart").get<std::string>(), rational_field(doc.at("u")), rational_field(doc.at("v"))};
}

Json to_json(const MldReport& report, const ResolutionGraph& graph) {
  Json j = header("mld-report");
  j["system"] = to_json(graph.system);
  j["mld"] = to_string(report.value);
  j["computedBy"] = report.computedBy;
  j["classification"] = to_string(report.classification);
  Json centres = Json::array();
  for (int id : report.nonKltCentres)
    centres.push_back({{"curve", id}, {"poly", graph.curves[static_cast<std::size_t>(id)].poly.str()}});
  j["nonKltCentres"] = centres;
  if (report.F) j["F"] = *report.F;
  else j["F"] = nullptr;
  j["discrepancies"] = discrepancy_table(graph);
  return j;
}

Json discrepancy_table(const ResolutionGraph& graph) {
  Json rows = Json::array();
  for (const auto& e : graph.divisors)
    rows.push_back({{"divisor", e.id}, {"logDiscrepancy", to_string(log_discrepancy(graph, e.id, graph.system))}});
  return rows;
}

Json to_json(const ResolutionGraph& graph) {
  Json j = header("resolution");
  j["system"] = to_json(graph.system);
  j["sncComplete"] = graph.sncComplete;
  Json divisors = Json::array();
  for (const auto& e : graph.divisors) {
    Json d;
    d["id"] = e.id;
    d["k"] = e.k;
    d["ordM"] = e.ordM;
    d["ordFactor"] = e.ordFactor;
    d["ordCurve"] = e.ordCurve;
    d["parents"] = e.parents;
    d["neighbors"] = Json(std::vector<int>(e.neighbors.begin(), e.neighbors.end()));
    d["centre"] = to_json(e.centre);
    divisors.push_back(d);
  }
  j["divisors"] = divisors;
  Json curves = Json::array();
  for (const auto& c : graph.curves) {
    Json incidences = Json::array();
    for (const auto& inc : c.incidences) {
      Json i{{"divisor", inc.divisor}};
      if (inc.point) i["point"] = to_json(*inc.point);
      else i["irrationalRoots"] = inc.irrational_roots.str('v');
      incidences.push_back(i);
    }
    curves.push_back({{"id", c.id},
                      {"poly", c.poly.str()},
                      {"multiplicity", c.multiplicity},
                      {"d", to_string(c.d)},
                      {"orderAtOrigin", c.order_at_origin},
                      {"incidences", incidences}});
  }
  j["curves"] = curves;
  Json log = Json::array();
  for (const auto& r : graph.blowUpLog)
    log.push_back({{"point", to_json(r.point)}, {"parents", r.parents}, {"divisor", r.divisor}});
  j["blowUpLog"] = log;
  if (graph.F) j["F"] = *graph.F;
  else j["F"] = nullptr;
  j["discrepancies"] = discrepancy_table(graph);
  return j;
}

ResolutionGraph replay(const Json& doc) {
  if (!doc.contains("system") || !doc.contains("blowUpLog"))
    throw Error(ErrorKind::InvalidArgument, "replay needs a resolution document");
  ResolutionGraph graph = initial_graph(system_from_json(doc["system"]));
  for (const auto& r : doc["blowUpLog"]) {
    int id = blow_up(graph, point_from_json(r.at("point")));
    if (id != r.at("divisor").get<int>())
      throw Error(ErrorKind::InvalidArgument, "replayed blow-up produced E" + std::to_string(id));
  }
  if (graph.sncComplete) update_incidences(graph);
  return graph;
}

Json to_json(const StabilityCertificate& cert) {
  Json j = header("certificate");
  j["system"] = to_json(cert.system);
  j["c"] = to_string(cert.c);
  j["s"] = to_string(cert.s);
  j["t"] = to_string(cert.t);
  j["tPrime"] = to_string(cert.tPrime);
  j["l"] = cert.l;
  j["F"] = cert.F;
  j["D"] = polys(cert.D);
  Json rows = Json::array();
  for (const auto& r : cert.perDivisorRatios)
    rows.push_back({{"divisor", r.divisor}, {"ratios", rationals(r.ratios)}, {"ordM", r.ordM}, {"ordD", r.ordD}});
  j["perDivisorRatios"] = rows;
  j["refinedDivisors"] = cert.refined.divisors.size();
  return j;
}

Json to_json(const VerificationReport& report) {
  Json j = header("verification");
  j["digest"] = report.digest;
  j["system"] = to_json(report.system);
  j["mld"] = to_string(report.original.value);
  j["classification"] = to_string(report.original.classification);
  j["level"] = report.level;
  j["levelSource"] = report.levelSource;
  if (report.certificate) j["certificate"] = to_json(*report.certificate);
  std::size_t passed = 0;
  Json counterexamples = Json::array();
  for (const auto& s : report.samples) {
    if (s.pass) ++passed;
    else counterexamples.push_back(sample_json(s));
  }
  j["evaluated"] = report.samples.size();
  j["passed"] = passed;
  j["counterexamples"] = counterexamples;
  Json samples = Json::array();
  for (const auto& s : report.samples)
    samples.push_back({{"index", s.index}, {"strategy", to_string(s.strategy)}, {"mld", to_string(s.mld)},
                       {"equivalent", s.equivalent}, {"pass", s.pass}});
  j["samples"] = samples;
  Json skipped = Json::array();
  for (const auto& s : report.skipped)
    skipped.push_back({{"index", s.index}, {"strategy", to_string(s.strategy)}, {"reason", s.reason}});
  j["skipped"] = skipped;
  j["notes"] = report.notes;
  j["pass"] = report.pass;
  return j;
}

Json to_json(const MinLevelReport& report) {
  Json j = header("min-level");
  j["level"] = report.level;
  j["sufficientLevel"] = report.sufficientLevel;
  Json trials = Json::array();
  for (const auto& t : report.trials) {
    Json row{{"level", t.level}, {"evaluated", t.evaluated}, {"failures", t.failures}};
    if (t.counterexample) row["counterexample"] = sample_json(*t.counterexample);
    trials.push_back(row);
  }
  j["trials"] = trials;
  if (report.counterexampleBelow) j["counterexampleBelow"] = sample_json(*report.counterexampleBelow);
  j["note"] = report.note;
  return j;
}

} // namespace mldlab
