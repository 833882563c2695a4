#include "mldlab/stability.hpp"
#include "mldlab/error.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace mldlab {

std::string to_string(Strategy s) {
  switch (s) {
  case Strategy::Truncate: return "truncate";
  case Strategy::AddTails: return "add-tails";
  case Strategy::AddGenerators: return "add-generators";
  case Strategy::Mixed: return "mixed";
  }
  return "unknown";
}

Strategy parse_strategy(const std::string& s) {
  for (Strategy k : {Strategy::Truncate, Strategy::AddTails, Strategy::AddGenerators, Strategy::Mixed})
    if (to_string(k) == s) return k;
  throw Error(ErrorKind::InvalidArgument, "unknown strategy '" + s + "'");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class SampleRng {
public:
  SampleRng(std::uint64_t seed, std::uint64_t index) : engine_(splitmix64(seed ^ splitmix64(index + 1))) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

private:
  std::mt19937_64 engine_;
};

// Random element of m^l with 1-3 terms of degree in [l, l + 3].
BiPoly random_tail(SampleRng& rng, long l) {
  static const int pool[] = {-3, -2, -1, 1, 2, 3};
  BiPoly p;
  const auto terms = 1 + rng.below(3);
  for (std::uint64_t k = 0; k < terms; ++k) {
    const int deg = static_cast<int>(l + static_cast<long>(rng.below(4)));
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(deg) + 1));
    p.add_term(pool[rng.below(6)], i, deg - i);
  }
  return p;
}

Strategy pick(SampleRng& rng) {
  static const Strategy basic[] = {Strategy::Truncate, Strategy::AddTails, Strategy::AddGenerators};
  return basic[rng.below(3)];
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// Rows spanning the image of the ideal in Q[x, y] / m^l.
std::vector<std::vector<Rational>> image_rows(const std::vector<BiPoly>& gens, long l,
                                              const std::map<Monomial, std::size_t>& index) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens)
    for (int d = 0; d < l; ++d)
      for (int a = 0; a <= d; ++a) {
        BiPoly p = (g * BiPoly::term(1, a, d - a)).truncate_below(static_cast<int>(l));
        if (p.is_zero()) continue;
        std::vector<Rational> row(index.size());
        for (const auto& [m, c] : p.terms()) row[index.at(m)] = c;
        rows.push_back(std::move(row));
      }
  return rows;
}

} // namespace

PerturbResult perturb(const IdealSystem& system, long l, std::uint64_t seed, Strategy strategy,
                      std::uint64_t index) {
  if (l < 1) throw Error(ErrorKind::InvalidArgument, "perturbation level must be at least 1");
  SampleRng rng(seed, index);
  Perturbation p;
  p.seed = seed;
  p.index = index;
  p.strategy = strategy;
  p.level = l;
  for (const auto& f : system.factors) {
    Strategy s = strategy == Strategy::Mixed ? pick(rng) : strategy;
    p.truncate.push_back(s == Strategy::Truncate);
    std::vector<BiPoly> tails(f.generators.size());
    if (s == Strategy::AddTails)
      for (auto& t : tails) t = random_tail(rng, l);
    p.tails.push_back(std::move(tails));
    std::vector<BiPoly> extra;
    if (s == Strategy::AddGenerators) {
      const auto count = 1 + rng.below(2);
      for (std::uint64_t k = 0; k < count; ++k) extra.push_back(random_tail(rng, l));
    }
    p.extraGenerators.push_back(std::move(extra));
  }
  PerturbResult out;
  out.system = apply(system, p, &out.skipReason);
  out.perturbation = std::move(p);
  return out;
}

std::optional<IdealSystem> apply(const IdealSystem& system, const Perturbation& p, std::string* why) {
  IdealSystem b;
  for (std::size_t j = 0; j < system.factors.size(); ++j) {
    const IdealFactor& f = system.factors[j];
    IdealFactor g{{}, f.exponent};
    for (std::size_t k = 0; k < f.generators.size(); ++k) {
      BiPoly gen = p.truncate[j] ? f.generators[k].truncate_below(static_cast<int>(p.level))
                                 : f.generators[k] + p.tails[j][k];
      if (!gen.is_zero()) g.generators.push_back(std::move(gen));
    }
    for (const auto& e : p.extraGenerators[j])
      if (!e.is_zero()) g.generators.push_back(e);
    if (g.generators.empty()) {
      if (why) *why = "factor " + std::to_string(j) + " has no nonzero generator after " + to_string(p.strategy);
      return std::nullopt;
    }
    b.factors.push_back(std::move(g));
  }
  return b;
}

bool equiv_l_check(const IdealSystem& a, const IdealSystem& b, long l) {
  if (a.factors.size() != b.factors.size())
    throw Error(ErrorKind::FactorCountMismatch, std::to_string(a.factors.size()) + " vs " +
                                                    std::to_string(b.factors.size()) + " factors");
  if (l < 1) throw Error(ErrorKind::InvalidArgument, "level must be at least 1");
  std::map<Monomial, std::size_t> index;
  for (int d = 0; d < l; ++d)
    for (int i = d; i >= 0; --i) index.emplace(Monomial{i, d - i}, index.size());
  for (std::size_t j = 0; j < a.factors.size(); ++j) {
    if (a.factors[j].exponent != b.factors[j].exponent)
      throw Error(ErrorKind::InvalidArgument, "exponents of factor " + std::to_string(j) + " differ");
    auto ra = image_rows(a.factors[j].generators, l, index);
    auto rb = image_rows(b.factors[j].generators, l, index);
    const std::size_t na = rank(ra), nb = rank(rb);
    if (na != nb) return false;
    ra.insert(ra.end(), rb.begin(), rb.end());
    if (rank(std::move(ra)) != na) return false;
  }
  return true;
}

std::pair<ExtRational, ExtRational> verify_auxiliary(const StabilityCertificate& cert, const IdealSystem& b,
                                                 ResolveOptions options) {
  BoundarySpec first{cert.s, cert.tPrime, cert.D};
  BoundarySpec second{0, cert.t, std::nullopt};
  return {mld_at_origin(b, first, options).value, mld_at_origin(b, second, options).value};
}

std::pair<long, std::string> stability_level(const IdealSystem& system, ResolveOptions options) {
  ResolutionGraph graph = log_resolution(system, options);
  MldReport report = mld_on_graph(graph);
  switch (report.classification) {
  case Classification::PltWithCentre: return {compute_constants(system, options).l, "certificate"};
  case Classification::LcNotPlt:
    return {level_above_ratios(graph, {std::stoi(report.computedBy.substr(1))}), "computing-divisor"};
  case Classification::Klt: return {level_above_ratios(graph), "all-divisors"};
  case Classification::NotLc: break;
  }
  return {1, "not-lc"};
}

namespace {

const Strategy kCycle[] = {Strategy::AddTails, Strategy::Truncate, Strategy::AddGenerators, Strategy::Mixed};

// Runs one sample; std::nullopt with a reason when it is degenerate.
std::optional<SampleResult> run_sample(const IdealSystem& a, const ExtRational& target, long l, std::uint64_t seed,
                                       std::uint64_t index, const StabilityCertificate* cert,
                                       const ResolveOptions& options, std::string& why) {
  Strategy strategy = kCycle[index % 4];
  PerturbResult pr = perturb(a, l, seed, strategy, index);
  if (!pr.system) {
    why = pr.skipReason;
    return std::nullopt;
  }
  SampleResult s;
  s.index = index;
  s.strategy = strategy;
  s.perturbed = *pr.system;
  s.equivalent = equiv_l_check(a, s.perturbed, l);
  try {
    s.mld = mld_at_origin(s.perturbed, {}, options).value;
    if (cert) s.auxiliary = verify_auxiliary(*cert, s.perturbed, options);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IrrationalBasePoint) throw;
    why = e.what();
    return std::nullopt;
  }
  const ExtRational zero(Rational(0));
  s.pass = s.equivalent && s.mld == target &&
           (!s.auxiliary || (s.auxiliary->first == zero && s.auxiliary->second == zero));
  return s;
}

} // namespace

VerificationReport verify_semicontinuity(const IdealSystem& system, std::size_t samples, std::uint64_t seed,
                                         VerifyOptions options) {
  VerificationReport report;
  report.system = system;
  report.digest = system.digest();
  ResolutionGraph graph = log_resolution(system, options.resolve);
  report.original = mld_on_graph(graph);
  switch (report.original.classification) {
  case Classification::NotLc:
    report.levelSource = "not-lc";
    report.level = 1;
    report.notes.push_back("mld is -infinity; stability holds for every level");
    report.pass = true;
    return report;
  case Classification::PltWithCentre:
    report.certificate = compute_constants(system, options.resolve);
    report.level = report.certificate->l;
    report.levelSource = "certificate";
    break;
  case Classification::LcNotPlt:
    report.level = level_above_ratios(graph, {std::stoi(report.original.computedBy.substr(1))});
    report.levelSource = "computing-divisor";
    break;
  case Classification::Klt:
    report.level = level_above_ratios(graph);
    report.levelSource = "all-divisors";
    report.notes.push_back("klt level taken as 1 + max ord_E a_j / ord_E m over the log resolution");
    break;
  }
  const StabilityCertificate* cert = report.certificate ? &*report.certificate : nullptr;
  const std::size_t attempts = samples * options.attemptFactor + 16;
  for (std::uint64_t index = 0; index < attempts && report.samples.size() < samples; ++index) {
    std::string why;
    auto s = run_sample(system, report.original.value, report.level, seed, index, cert, options.resolve, why);
    if (s) report.samples.push_back(std::move(*s));
    else report.skipped.push_back({index, kCycle[index % 4], why});
  }
  if (report.samples.size() < samples)
    report.notes.push_back("only " + std::to_string(report.samples.size()) + " non-degenerate samples drawn");
  report.pass = std::all_of(report.samples.begin(), report.samples.end(), [](const SampleResult& s) { return s.pass; });
  return report;
}

int centre_case(const ResolutionGraph& graph, const RationalPoint& requested) {
  RationalPoint p = requested;
  const Chart& chart0 = graph.chart(p.chart);
  if (chart0.divisor != 0 && p.chart.back() == 'B' && p.v == 0 && p.u != 0)
    p = {"E" + std::to_string(chart0.divisor) + ".A", Rational(0), 1 / p.u};
  const Chart& chart = graph.chart(p.chart);
  const bool onOwn = chart.divisor != 0 && (p.chart.back() == 'A' ? p.u == 0 : p.v == 0);
  if (!onOwn)
    throw Error(ErrorKind::PointNotOnExceptionalLocus, to_string(p) + " is not on the chart's exceptional divisor");
  if (graph.was_blown_up(p))
    throw Error(ErrorKind::PointNotOnExceptionalLocus, to_string(p) + " was blown up and is not a point of the model");
  const auto cid = graph.c_curve();
  bool onC = false, onD = false;
  for (const auto& curve : graph.curves) {
    if (chart.curves[static_cast<std::size_t>(curve.id)].eval(p.u, p.v) != 0) continue;
    if (cid && curve.id == *cid) onC = true;
    else if (curve.d < 1) onD = true;
  }
  if (onC) {
    std::vector<int> through{chart.divisor};
    if (p.u == 0 && chart.divUZero) through.push_back(*chart.divUZero);
    if (p.v == 0 && chart.divVZero) through.push_back(*chart.divVZero);
    if (!graph.F || std::find(through.begin(), through.end(), *graph.F) == through.end())
      throw Error(ErrorKind::InternalInvariant, "C meets a divisor other than F at " + to_string(p));
    return 3;
  }
  return onD ? 2 : 1;
}

std::vector<RationalPoint> generic_sample_points(const ResolutionGraph& graph, std::size_t perDivisor) {
  std::vector<RationalPoint> out;
  for (const auto& e : graph.divisors) {
    const Chart& chart = graph.chart("E" + std::to_string(e.id) + ".A");
    std::size_t taken = 0;
    for (int v = 1; v < 50 && taken < perDivisor; ++v) {
      RationalPoint p{chart.name, Rational(0), Rational(v % 2 ? (v + 1) / 2 : -(v / 2))};
      if (graph.was_blown_up(p)) continue;
      bool onCurve = std::any_of(chart.curves.begin(), chart.curves.end(),
                                 [&](const BiPoly& c) { return c.eval(p.u, p.v) == 0; });
      if (onCurve) continue;
      out.push_back(p);
      ++taken;
    }
  }
  return out;
}

MinLevelReport empirical_min_level(const IdealSystem& system, std::size_t budget, std::uint64_t seed,
                                   ResolveOptions options) {
  ResolutionGraph graph = log_resolution(system, options);
  MldReport original = mld_on_graph(graph);
  if (original.classification == Classification::NotLc)
    throw Error(ErrorKind::UnsupportedClassification, "mld is -infinity; every level is stable");
  MinLevelReport out;
  out.sufficientLevel = stability_level(system, options).first;
  for (long l = 1; l <= out.sufficientLevel; ++l) {
    LevelTrial trial;
    trial.level = l;
    for (std::uint64_t index = 0; index < budget * 4 + 16 && trial.evaluated < budget; ++index) {
      std::string why;
      auto s = run_sample(system, original.value, l, seed, index, nullptr, options, why);
      if (!s) continue;
      ++trial.evaluated;
      if (!s->pass) {
        ++trial.failures;
        if (!trial.counterexample) trial.counterexample = std::move(*s);
      }
    }
    const bool clean = trial.failures == 0;
    out.trials.push_back(trial);
    if (clean) {
      out.level = l;
      if (out.trials.size() >= 2) out.counterexampleBelow = out.trials[out.trials.size() - 2].counterexample;
      return out;
    }
  }
  out.level = out.sufficientLevel;
  return out;
}

} // namespace mldlab
