#include "mldlab/error.hpp"
#include "mldlab/parse.hpp"
#include "mldlab/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace mldlab;

namespace {

constexpr int kUsage = 64;
constexpr int kInput = 65;

struct RunConfig {
  std::vector<std::string> ideals;
  std::vector<std::string> exps;
  std::string file;
  std::string format = "text";
  std::string dot;
  std::string replayPath;
  std::string sD = "0";
  std::string tM = "0";
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  std::size_t budget = 50;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

IdealSystem load_system(const RunConfig& cfg) {
  if (!cfg.file.empty()) {
    if (!cfg.ideals.empty()) throw UsageError("--file and --ideal are exclusive");
    std::ifstream in(cfg.file);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + cfg.file);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::InvalidArgument, cfg.file + ": " + e.what());
    }
    return system_from_json(doc);
  }
  if (cfg.ideals.size() != cfg.exps.size())
    throw UsageError("every --ideal needs a matching --exp");
  IdealSystem s;
  for (std::size_t i = 0; i < cfg.ideals.size(); ++i)
    s.factors.push_back({parse_generators(cfg.ideals[i]), parse_rational(cfg.exps[i])});
  s.validate();
  return s;
}

ResolveOptions resolve_options() {
  ResolveOptions o;
  if (const char* cap = std::getenv("MLDLAB_BLOWUP_CAP")) {
    try {
      o.blowup_cap = std::stoul(cap);
    } catch (const std::exception&) {
      throw UsageError("MLDLAB_BLOWUP_CAP must be a nonnegative integer");
    }
  }
  return o;
}

void print_report(const MldReport& r, const ResolutionGraph& g) {
  std::cout << "mld = " << to_string(r.value) << "\n";
  std::cout << "classification = " << to_string(r.classification) << "\n";
  std::cout << "computed by = " << r.computedBy << "\n";
  for (int id : r.nonKltCentres)
    std::cout << "centre: " << g.curves[static_cast<std::size_t>(id)].poly.str() << " = 0\n";
  if (r.F) std::cout << "F = E" << *r.F << "\n";
}

void print_graph(const ResolutionGraph& g) {
  std::cout << "system: " << g.system.str() << "\n";
  std::cout << "blow-ups: " << g.blowUpLog.size() << (g.sncComplete ? "" : " (incomplete)") << "\n";
  for (const auto& e : g.divisors) {
    std::cout << "E" << e.id << " centre " << to_string(e.centre) << " k=" << e.k << " m=" << e.ordM << " a=(";
    for (std::size_t j = 0; j < e.ordFactor.size(); ++j) std::cout << (j ? ", " : "") << e.ordFactor[j];
    std::cout << ") logdisc=" << to_string(log_discrepancy(g, e.id, g.system)) << "\n";
  }
  for (const auto& c : g.curves)
    std::cout << "C" << c.id << " " << c.poly.str() << " d=" << to_string(c.d) << "\n";
}

int run_command(const std::string& cmd, const RunConfig& cfg) {
  const bool json = cfg.format == "json";
  const ResolveOptions opts = resolve_options();
  if (cmd == "resolve" && !cfg.replayPath.empty()) {
    std::ifstream in(cfg.replayPath);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + cfg.replayPath);
    ResolutionGraph g = replay(Json::parse(in));
    if (json) std::cout << to_json(g).dump(2) << "\n";
    else print_graph(g);
    return 0;
  }
  IdealSystem system = load_system(cfg);
  if (cmd == "mld" || cmd == "classify") {
    ResolutionGraph g = log_resolution(system, opts);
    BoundarySpec b{parse_rational(cfg.sD), parse_rational(cfg.tM), std::nullopt};
    b.validate();
    MldReport r = cmd == "mld" ? mld_on_graph(g, b) : classify(system, opts);
    if (json) std::cout << to_json(r, g).dump(2) << "\n";
    else print_report(r, g);
    return 0;
  }
  if (cmd == "resolve") {
    ResolutionGraph g = log_resolution(system, opts);
    if (!cfg.dot.empty()) {
      std::ofstream out(cfg.dot);
      if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + cfg.dot);
      out << to_dot(g);
    }
    if (json) std::cout << to_json(g).dump(2) << "\n";
    else print_graph(g);
    return 0;
  }
  if (cmd == "certificate") {
    StabilityCertificate c = compute_constants(system, opts);
    if (json) {
      std::cout << to_json(c).dump(2) << "\n";
      return 0;
    }
    std::cout << "c = " << to_string(c.c) << "\ns = " << to_string(c.s) << "\nt = " << to_string(c.t)
              << "\nt' = " << to_string(c.tPrime) << "\nl = " << c.l << "\nF = E" << c.F << "\n";
    for (const auto& d : c.D) std::cout << "D: " << d.str() << "\n";
    for (const auto& row : c.perDivisorRatios) {
      std::cout << "E" << row.divisor << " ordM=" << row.ordM << " ordD=" << row.ordD << " ratios=(";
      for (std::size_t j = 0; j < row.ratios.size(); ++j) std::cout << (j ? ", " : "") << to_string(row.ratios[j]);
      std::cout << ")\n";
    }
    return 0;
  }
  if (cmd == "verify") {
    VerifyOptions v;
    v.resolve = opts;
    VerificationReport r = verify_semicontinuity(system, cfg.samples, cfg.seed, v);
    if (json) std::cout << to_json(r).dump(2) << "\n";
    else {
      std::size_t passed = 0;
      for (const auto& s : r.samples) passed += s.pass;
      std::cout << "mld = " << to_string(r.original.value) << " (" << to_string(r.original.classification) << ")\n";
      std::cout << "level = " << r.level << " (" << r.levelSource << ")\n";
      std::cout << passed << "/" << r.samples.size() << " samples at mld " << to_string(r.original.value) << "\n";
      if (!r.skipped.empty()) std::cout << r.skipped.size() << " degenerate draws skipped\n";
      for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
      for (const auto& s : r.samples)
        if (!s.pass)
          std::cout << "counterexample #" << s.index << ": " << s.perturbed.str() << " mld " << to_string(s.mld)
                    << (s.equivalent ? "" : " (not equivalent)") << "\n";
      std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    return r.pass ? 0 : 2;
  }
  if (cmd == "min-level") {
    MinLevelReport r = empirical_min_level(system, cfg.samples, cfg.seed, opts);
    if (json) std::cout << to_json(r).dump(2) << "\n";
    else {
      for (const auto& t : r.trials)
        std::cout << "l = " << t.level << ": " << t.failures << "/" << t.evaluated << " failures\n";
      std::cout << "empirical level = " << r.level << "\nsufficient level = " << r.sufficientLevel << "\n";
      if (r.counterexampleBelow)
        std::cout << "counterexample below: " << r.counterexampleBelow->perturbed.str() << " mld "
                  << to_string(r.counterexampleBelow->mld) << "\n";
      std::cout << r.note << "\n";
    }
    return 0;
  }
  throw UsageError("unknown command " + cmd);
}

int exit_code(ErrorKind k) {
  switch (k) {
  case ErrorKind::BudgetExceeded:
  case ErrorKind::NotResolved:
  case ErrorKind::InternalInvariant:
  case ErrorKind::ChartExpressionError:
  case ErrorKind::TooManyDivisorsThroughPoint:
  case ErrorKind::PointNotOverOrigin:
  case ErrorKind::PointNotOnExceptionalLocus:
  case ErrorKind::UnknownDivisor:
    return 1;
  default:
    return kInput;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal log discrepancies of ideal systems on the plane"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--ideal", cfg.ideals, "generators \"(g1, g2, ...)\"; repeat, paired with --exp");
    sub->add_option("--exp", cfg.exps, "exponent p/q for the preceding --ideal");
    sub->add_option("--file", cfg.file, "JSON system document");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  };
  auto* mld = app.add_subcommand("mld", "mld at the origin");
  add_common(mld);
  mld->add_option("--sD", cfg.sD, "coefficient of the boundary D");
  mld->add_option("--tM", cfg.tM, "exponent of the maximal ideal");
  add_common(app.add_subcommand("classify", "klt / plt / lc classification"));
  auto* resolve = app.add_subcommand("resolve", "log resolution over the origin");
  add_common(resolve);
  resolve->add_option("--dot", cfg.dot, "write the dual graph in DOT format");
  resolve->add_option("--replay", cfg.replayPath, "replay a resolve --format json document");
  add_common(app.add_subcommand("certificate", "stability constants of a plt triple"));
  auto* verify = app.add_subcommand("verify", "seeded semicontinuity check");
  add_common(verify);
  verify->add_option("--samples", cfg.samples);
  verify->add_option("--seed", cfg.seed);
  auto* minLevel = app.add_subcommand("min-level", "empirical least stable level");
  add_common(minLevel);
  minLevel->add_option("--samples", cfg.samples, "samples per level");
  minLevel->add_option("--seed", cfg.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run_command(cmd, cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
