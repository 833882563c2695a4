#include "mldlab/resolution.hpp"
#include "mldlab/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mldlab {

namespace {

std::string point_key(const RationalPoint& p) { return p.chart + ":" + to_string(p.u) + "," + to_string(p.v); }

bool is_unit_ideal_at_origin(const std::vector<BiPoly>& gens) {
  return std::any_of(gens.begin(), gens.end(), [](const BiPoly& g) { return g.order() == 0; });
}

int local_ideal_order(const std::vector<BiPoly>& gens) {
  int best = kInfinity;
  for (const auto& g : gens) best = std::min(best, g.order());
  return best;
}

std::string chart_name(int divisor, char side) { return "E" + std::to_string(divisor) + "." + side; }

// Points of E_k in chart B off its origin also lie in chart A.
RationalPoint normalize(const ResolutionGraph& graph, const RationalPoint& p) {
  auto it = graph.charts.find(p.chart);
  if (it == graph.charts.end()) return p;
  const Chart& c = it->second;
  if (c.divisor != 0 && p.chart == chart_name(c.divisor, 'B') && p.v == 0 && p.u != 0)
    return {chart_name(c.divisor, 'A'), Rational(0), Rational(1 / p.u)};
  return p;
}

// Why the point (already re-centred to the origin of `local`) violates the
// snc conditions, or an empty string. eAxisU: the chart's own divisor is
// {u = 0}; otherwise {v = 0}. onOther: a second exceptional divisor passes.
std::string local_violation(const ResolutionGraph& graph, const std::vector<std::vector<BiPoly>>& residual,
                            const std::vector<BiPoly>& curves, bool eAxisU, bool onOther) {
  std::vector<std::string> reasons;
  for (std::size_t j = 0; j < residual.size(); ++j)
    if (local_ideal_order(residual[j]) > 0)
      reasons.push_back("weak transform of factor " + std::to_string(j) + " is not a unit");
  std::vector<std::size_t> through;
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i].order() > 0) through.push_back(i);
  if (through.size() >= 2) {
    std::string ids;
    for (auto i : through) ids += (ids.empty() ? "" : ",") + std::to_string(graph.curves[i].id);
    reasons.push_back("strict transforms of curves " + ids + " meet");
  } else if (through.size() == 1) {
    const BiPoly& f = curves[through.front()];
    const int id = graph.curves[through.front()].id;
    if (f.order() > 1) reasons.push_back("strict transform of curve " + std::to_string(id) + " is singular");
    else if ((eAxisU ? f.coeff(0, 1) : f.coeff(1, 0)) == 0)
      reasons.push_back("curve " + std::to_string(id) + " is tangent to the exceptional divisor");
    if (onOther) reasons.push_back("curve " + std::to_string(id) + " passes through a double point");
  }
  std::string out;
  for (const auto& r : reasons) out += (out.empty() ? "" : "; ") + r;
  return out;
}

struct DivisorAnalysis {
  std::vector<SncViolation> bad;
  std::vector<CurveIncidence> incidences; // paired with curve index below
  std::vector<std::size_t> incidenceCurve;
};

std::vector<std::vector<BiPoly>> translate_all(const std::vector<std::vector<BiPoly>>& polys, const Rational& a,
                                               const Rational& b) {
  std::vector<std::vector<BiPoly>> out;
  for (const auto& gens : polys) {
    std::vector<BiPoly> t;
    for (const auto& g : gens) t.push_back(g.translate(a, b));
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<BiPoly> translate_all(const std::vector<BiPoly>& polys, const Rational& a, const Rational& b) {
  std::vector<BiPoly> out;
  for (const auto& g : polys) out.push_back(g.translate(a, b));
  return out;
}

DivisorAnalysis analyze_divisor(const ResolutionGraph& graph, int e) {
  DivisorAnalysis out;
  const Chart& A = graph.chart(chart_name(e, 'A'));
  const Chart& B = graph.chart(chart_name(e, 'B'));

  std::set<Rational> candidates;
  for (std::size_t j = 0; j < A.residual.size(); ++j) {
    UPoly g;
    for (const auto& f : A.residual[j]) g = gcd(g, f.restrict_x_zero());
    if (g.degree() <= 0) continue;
    RootSplit rs = rational_roots(g);
    if (rs.remainder.degree() > 0)
      throw Error(ErrorKind::IrrationalBasePoint, "weak transform of factor " + std::to_string(j) + " on E" +
                                                      std::to_string(e) + " has base points at the roots of " +
                                                      rs.remainder.str('v'));
    for (const auto& r : rs.roots) candidates.insert(r.root);
  }
  UPoly irrational_product(1);
  for (std::size_t i = 0; i < A.curves.size(); ++i) {
    UPoly c = A.curves[i].restrict_x_zero();
    if (c.degree() <= 0) continue;
    RootSplit rs = rational_roots(c);
    for (const auto& r : rs.roots) candidates.insert(r.root);
    if (rs.remainder.degree() > 0) {
      irrational_product *= rs.remainder;
      out.incidences.push_back({e, std::nullopt, rs.remainder});
      out.incidenceCurve.push_back(i);
    }
  }
  if (irrational_product.degree() > 0 && gcd(irrational_product, irrational_product.derivative()).degree() > 0)
    throw Error(ErrorKind::IrrationalBasePoint, "strict transforms meet E" + std::to_string(e) +
                                                    " non-transversally at roots of " + irrational_product.str('v'));
  if (A.divVZero) candidates.insert(Rational(0));

  auto inspect = [&](const Chart& chart, const Rational& u0, const Rational& v0, bool eAxisU) {
    RationalPoint p{chart.name, u0, v0};
    bool onOther = eAxisU ? (v0 == 0 && chart.divVZero.has_value()) : (u0 == 0 && chart.divUZero.has_value());
    auto curves = translate_all(chart.curves, u0, v0);
    std::string why = local_violation(graph, translate_all(chart.residual, u0, v0), curves, eAxisU, onOther);
    if (!why.empty()) {
      out.bad.push_back({p, why});
      return;
    }
    for (std::size_t i = 0; i < curves.size(); ++i)
      if (curves[i].order() > 0) {
        out.incidences.push_back({e, p, UPoly()});
        out.incidenceCurve.push_back(i);
      }
  };
  for (const auto& v0 : candidates) inspect(A, Rational(0), v0, true);
  inspect(B, Rational(0), Rational(0), false);
  return out;
}

} // namespace

const ExcDivisor& ResolutionGraph::divisor(int id) const {
  if (id < 1 || id > static_cast<int>(divisors.size()))
    throw Error(ErrorKind::UnknownDivisor, "no divisor E" + std::to_string(id));
  return divisors[static_cast<std::size_t>(id - 1)];
}

const Chart& ResolutionGraph::chart(const std::string& name) const {
  auto it = charts.find(name);
  if (it == charts.end()) throw Error(ErrorKind::ChartExpressionError, "no chart named '" + name + "'");
  return it->second;
}

bool ResolutionGraph::was_blown_up(const RationalPoint& p) const {
  const std::string key = point_key(normalize(*this, p));
  return std::any_of(blowUpLog.begin(), blowUpLog.end(),
                     [&](const BlowUpRecord& r) { return point_key(r.point) == key; });
}

std::vector<int> ResolutionGraph::d_curves() const {
  std::vector<int> out;
  for (const auto& c : curves)
    if (c.d < 1) out.push_back(c.id);
  return out;
}

std::optional<int> ResolutionGraph::c_curve() const {
  std::optional<int> found;
  for (const auto& c : curves)
    if (c.d == 1) {
      if (found) return std::nullopt;
      found = c.id;
    }
  return found;
}

int ResolutionGraph::ord_D(int divisor_id) const {
  const ExcDivisor& e = divisor(divisor_id);
  int total = 0;
  for (int i : d_curves()) total += e.ordCurve[static_cast<std::size_t>(i)];
  return total;
}

ResolutionGraph initial_graph(const IdealSystem& system) {
  system.validate();
  ResolutionGraph g;
  g.system = system;
  const RationalPoint origin{"base", Rational(0), Rational(0)};

  Chart base;
  base.name = "base";
  base.mapX = BiPoly::x();
  base.mapY = BiPoly::y();
  std::vector<std::vector<CurveComponent>> comps;
  std::vector<BiPoly> through_origin;
  for (const auto& f : system.factors) {
    DivisorialSplit split = divisorial_split(f.generators);
    base.residual.push_back(is_unit_ideal_at_origin(split.residual) ? std::vector<BiPoly>{BiPoly(1)}
                                                                     : split.residual);
    for (const auto& c : split.components)
      if (c.poly.order() > 0) through_origin.push_back(c.poly);
    comps.push_back(split.components);
  }
  for (const auto& b : coprime_basis(through_origin)) {
    if (b.order() == 0) continue;
    HorizontalCurve curve;
    curve.id = static_cast<int>(g.curves.size());
    curve.poly = b;
    curve.d = 0;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      int mult = 0;
      for (const auto& c : comps[j])
        if (exact_divide(c.poly, b)) mult += c.multiplicity;
      curve.multiplicity.push_back(mult);
      curve.d += system.factors[j].exponent * mult;
    }
    curve.order_at_origin = b.order();
    curve.smooth = curve.order_at_origin == 1;
    base.curves.push_back(b);
    g.curves.push_back(std::move(curve));
  }
  g.charts.emplace(base.name, std::move(base));
  g.pending.push_back({origin, "the maximal ideal is not locally principal"});
  return g;
}

int blow_up(ResolutionGraph& graph, const RationalPoint& requested) {
  const RationalPoint p = normalize(graph, requested);
  const Chart& parentChart = graph.chart(p.chart);
  const bool base = parentChart.divisor == 0;
  if (base && (p.u != 0 || p.v != 0))
    throw Error(ErrorKind::PointNotOverOrigin, to_string(p) + " is not the origin");
  if (graph.was_blown_up(p)) throw Error(ErrorKind::PointNotOverOrigin, to_string(p) + " was already blown up");

  std::vector<int> parents;
  std::optional<int> divU, divV;
  if (p.u == 0 && parentChart.divUZero) divU = parentChart.divUZero;
  if (p.v == 0 && parentChart.divVZero) divV = parentChart.divVZero;
  if (divU) parents.push_back(*divU);
  if (divV) parents.push_back(*divV);
  if (!base && parents.empty())
    throw Error(ErrorKind::PointNotOverOrigin, to_string(p) + " is not on the exceptional locus");
  if (parents.size() > 2) throw Error(ErrorKind::TooManyDivisorsThroughPoint, to_string(p));

  // Copy what we need before the chart map is modified.
  const auto residual = translate_all(parentChart.residual, p.u, p.v);
  const auto curves = translate_all(parentChart.curves, p.u, p.v);
  const BiPoly mapX = parentChart.mapX, mapY = parentChart.mapY;

  ExcDivisor e;
  e.id = static_cast<int>(graph.divisors.size()) + 1;
  e.parents = parents;
  e.centre = p;
  e.k = 1;
  e.ordM = base ? 1 : 0;
  e.ordFactor.assign(residual.size(), 0);
  e.ordCurve.assign(curves.size(), 0);
  std::vector<int> residualOrder(residual.size()), curveOrder(curves.size());
  for (std::size_t j = 0; j < residual.size(); ++j) residualOrder[j] = local_ideal_order(residual[j]);
  for (std::size_t i = 0; i < curves.size(); ++i) curveOrder[i] = curves[i].order();
  for (std::size_t i = 0; i < curves.size(); ++i) e.ordCurve[i] = curveOrder[i];
  for (std::size_t j = 0; j < residual.size(); ++j) {
    e.ordFactor[j] = residualOrder[j];
    for (std::size_t i = 0; i < curves.size(); ++i)
      e.ordFactor[j] += graph.curves[i].multiplicity[j] * curveOrder[i];
  }
  for (int pid : parents) {
    const ExcDivisor& q = graph.divisor(pid);
    e.k += q.k;
    e.ordM += q.ordM;
    for (std::size_t j = 0; j < e.ordFactor.size(); ++j) e.ordFactor[j] += q.ordFactor[j];
    for (std::size_t i = 0; i < e.ordCurve.size(); ++i) e.ordCurve[i] += q.ordCurve[i];
  }

  const BiPoly x = BiPoly::x(), y = BiPoly::y();
  // Chart A: u = x1, v = x1*y1, E = {x1 = 0}. Chart B: u = x2*y2, v = y2, E = {y2 = 0}.
  auto transform = [&](char side, const BiPoly& f, int ord) {
    return side == 'A' ? f.substitute(x, x * y).divide_monomial(ord, 0)
                       : f.substitute(x * y, y).divide_monomial(0, ord);
  };
  for (char side : {'A', 'B'}) {
    Chart c;
    c.name = chart_name(e.id, side);
    c.divisor = e.id;
    const BiPoly X = side == 'A' ? x + BiPoly(p.u) : x * y + BiPoly(p.u);
    const BiPoly Y = side == 'A' ? x * y + BiPoly(p.v) : y + BiPoly(p.v);
    c.mapX = mapX.substitute(X, Y);
    c.mapY = mapY.substitute(X, Y);
    for (std::size_t j = 0; j < residual.size(); ++j) {
      std::vector<BiPoly> gens;
      if (residualOrder[j] == 0) gens.push_back(BiPoly(1));
      else
        for (const auto& f : residual[j]) gens.push_back(transform(side, f, residualOrder[j]));
      c.residual.push_back(std::move(gens));
    }
    for (std::size_t i = 0; i < curves.size(); ++i)
      c.curves.push_back(curveOrder[i] == 0 ? BiPoly(1) : transform(side, curves[i], curveOrder[i]));
    if (side == 'A') {
      c.divUZero = e.id;
      c.divVZero = divV;
    } else {
      c.divUZero = divU;
      c.divVZero = e.id;
    }
    graph.charts[c.name] = std::move(c);
  }

  for (int pid : parents) {
    e.neighbors.insert(pid);
    graph.divisors[static_cast<std::size_t>(pid - 1)].neighbors.insert(e.id);
  }
  if (parents.size() == 2) {
    graph.divisors[static_cast<std::size_t>(parents[0] - 1)].neighbors.erase(parents[1]);
    graph.divisors[static_cast<std::size_t>(parents[1] - 1)].neighbors.erase(parents[0]);
  }
  graph.divisors.push_back(std::move(e));
  const int id = static_cast<int>(graph.divisors.size());
  graph.blowUpLog.push_back({p, parents, id});

  const std::string key = point_key(p);
  std::erase_if(graph.pending, [&](const SncViolation& v) { return point_key(normalize(graph, v.point)) == key; });
  for (auto& v : analyze_divisor(graph, id).bad) graph.pending.push_back(std::move(v));
  graph.sncComplete = graph.pending.empty();
  return id;
}

void update_incidences(ResolutionGraph& graph) {
  for (auto& c : graph.curves) c.incidences.clear();
  for (const auto& e : graph.divisors) {
    DivisorAnalysis a = analyze_divisor(graph, e.id);
    for (std::size_t k = 0; k < a.incidences.size(); ++k) {
      const CurveIncidence& inc = a.incidences[k];
      if (inc.point && graph.was_blown_up(*inc.point)) continue;
      graph.curves[a.incidenceCurve[k]].incidences.push_back(inc);
    }
  }
  graph.F.reset();
  if (auto c = graph.c_curve()) {
    const auto& incs = graph.curves[static_cast<std::size_t>(*c)].incidences;
    if (incs.size() == 1) graph.F = incs.front().divisor;
  }
}

namespace {
ResolutionGraph run(const IdealSystem& system, std::size_t max_steps, bool enforce_cap) {
  ResolutionGraph g = initial_graph(system);
  std::size_t steps = 0;
  while (!g.pending.empty()) {
    if (steps >= max_steps) {
      if (enforce_cap)
        throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(max_steps) + " blow-ups");
      return g;
    }
    blow_up(g, g.pending.front().point);
    ++steps;
  }
  g.sncComplete = true;
  update_incidences(g);
  return g;
}
} // namespace

ResolutionGraph log_resolution(const IdealSystem& system, ResolveOptions options) {
  return run(system, options.blowup_cap, true);
}

ResolutionGraph partial_resolution(const IdealSystem& system, std::size_t max_steps) {
  return run(system, max_steps, false);
}

void refine_for_D(ResolutionGraph& graph, const Rational& s, const Rational& c) {
  if (!graph.sncComplete) throw Error(ErrorKind::NotResolved, "refine_for_D needs a complete log resolution");
  if (s <= 0 || c < 0) throw Error(ErrorKind::InvalidArgument, "refine_for_D needs s > 0 and c >= 0");
  const Rational bound = c / s - 1;
  const std::vector<int> dcurves = graph.d_curves();
  while (true) {
    update_incidences(graph);
    std::optional<RationalPoint> target;
    for (int i : dcurves) {
      for (const auto& inc : graph.curves[static_cast<std::size_t>(i)].incidences) {
        if (Rational(graph.ord_D(inc.divisor)) >= bound) continue;
        if (!inc.point)
          throw Error(ErrorKind::IrrationalBasePoint, "D meets E" + std::to_string(inc.divisor) +
                                                          " at the irrational roots of " + inc.irrational_roots.str('v'));
        target = inc.point;
        break;
      }
      if (target) break;
    }
    if (!target) break;
    blow_up(graph, *target);
  }
}

std::vector<SncViolation> snc_status(const ResolutionGraph& graph) {
  std::vector<SncViolation> out;
  if (graph.divisors.empty()) {
    const Chart& base = graph.chart("base");
    std::string why = local_violation(graph, base.residual, base.curves, true, false);
    std::string reason = "the maximal ideal is not locally principal";
    if (!why.empty()) reason += "; " + why;
    out.push_back({{"base", Rational(0), Rational(0)}, reason});
    return out;
  }
  for (const auto& e : graph.divisors)
    for (auto& v : analyze_divisor(graph, e.id).bad)
      if (!graph.was_blown_up(v.point)) out.push_back(std::move(v));
  return out;
}

bool dual_graph_is_tree(const ResolutionGraph& graph) {
  const std::size_t n = graph.divisors.size();
  if (n == 0) return true;
  std::size_t edges = 0;
  for (const auto& e : graph.divisors) {
    for (int nb : e.neighbors) {
      if (nb < 1 || nb > static_cast<int>(n)) return false;
      if (!graph.divisors[static_cast<std::size_t>(nb - 1)].neighbors.contains(e.id)) return false;
    }
    edges += e.neighbors.size();
  }
  edges /= 2;
  if (edges != n - 1) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{1};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (int nb : graph.divisors[static_cast<std::size_t>(cur - 1)].neighbors)
      if (!seen[static_cast<std::size_t>(nb - 1)]) {
        seen[static_cast<std::size_t>(nb - 1)] = true;
        ++reached;
        stack.push_back(nb);
      }
  }
  return reached == n;
}

std::string to_dot(const ResolutionGraph& graph) {
  std::ostringstream os;
  os << "graph resolution {\n";
  for (const auto& e : graph.divisors) {
    os << "  E" << e.id << " [label=\"E" << e.id << " [k=" << e.k << ", m=" << e.ordM << ", a=(";
    for (std::size_t j = 0; j < e.ordFactor.size(); ++j) os << (j ? "," : "") << e.ordFactor[j];
    os << ")]\"];\n";
  }
  for (const auto& c : graph.curves)
    os << "  C" << c.id << " [shape=box, label=\"" << c.poly.str() << " d=" << to_string(c.d) << "\"];\n";
  for (const auto& e : graph.divisors)
    for (int nb : e.neighbors)
      if (nb > e.id) os << "  E" << e.id << " -- E" << nb << ";\n";
  for (const auto& c : graph.curves)
    for (const auto& inc : c.incidences) os << "  C" << c.id << " -- E" << inc.divisor << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace mldlab
