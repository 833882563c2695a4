#pragma once

#include "mldlab/mld.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mldlab {

enum class Strategy { Truncate, AddTails, AddGenerators, Mixed };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

/// Edits turning a into some b with b =_l a.
struct Perturbation {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  Strategy strategy = Strategy::AddTails;
  long level = 1;
  /// Per factor: whether its generators are truncated below degree l,
  /// one tail per generator (terms of degree >= l), extra generators in m^l.
  std::vector<bool> truncate;
  std::vector<std::vector<BiPoly>> tails;
  std::vector<std::vector<BiPoly>> extraGenerators;
};

struct PerturbResult {
  Perturbation perturbation;
  std::optional<IdealSystem> system; // empty for a degenerate sample
  std::string skipReason;
};

/// Deterministic in (seed, index).
PerturbResult perturb(const IdealSystem& system, long l, std::uint64_t seed, Strategy strategy,
                      std::uint64_t index = 0);

std::optional<IdealSystem> apply(const IdealSystem& system, const Perturbation& p, std::string* why = nullptr);

/// a_j + m^l == b_j + m^l for all j, by exact linear algebra in the
/// truncated polynomial ring. Throws FactorCountMismatch.
bool equiv_l_check(const IdealSystem& a, const IdealSystem& b, long l);

struct SampleResult {
  std::uint64_t index = 0;
  Strategy strategy = Strategy::AddTails;
  IdealSystem perturbed;
  bool equivalent = false;
  ExtRational mld;
  bool pass = false;
  std::optional<std::pair<ExtRational, ExtRational>> auxiliary;
};

struct SkippedSample {
  std::uint64_t index = 0;
  Strategy strategy = Strategy::AddTails;
  std::string reason;
};

struct VerificationReport {
  std::string digest;
  IdealSystem system;
  MldReport original;
  long level = 0;
  std::string levelSource;  // certificate | computing-divisor | all-divisors | not-lc
  std::optional<StabilityCertificate> certificate;
  std::vector<SampleResult> samples;
  std::vector<SkippedSample> skipped;
  std::vector<std::string> notes;
  bool pass = false;
};

struct VerifyOptions {
  ResolveOptions resolve;
  /// Draw at most this many candidates per requested sample.
  std::size_t attemptFactor = 4;
};

VerificationReport verify_semicontinuity(const IdealSystem& system, std::size_t samples, std::uint64_t seed,
                                         VerifyOptions options = {});

/// (mld(X, sD, b m^t'), mld(X, b m^t)) on fresh resolutions of b, with the
/// certificate's D kept fixed.
std::pair<ExtRational, ExtRational> verify_auxiliary(const StabilityCertificate& cert, const IdealSystem& b,
                                                 ResolveOptions options = {});

/// 1 when p avoids the strict transforms of C and D, 2 on D, 3 on C (and
/// then on F). p must lie on the chart's own exceptional divisor.
int centre_case(const ResolutionGraph& graph, const RationalPoint& p);

/// Stability level used by the harness for an lc input: certificate level
/// for plt, the computing divisor's ratio bound for mld 0, the all-divisor
/// ratio bound for klt.
std::pair<long, std::string> stability_level(const IdealSystem& system, ResolveOptions options = {});

struct LevelTrial {
  long level = 0;
  std::size_t evaluated = 0;
  std::size_t failures = 0;
  std::optional<SampleResult> counterexample;
};

struct MinLevelReport {
  long level = 0;            // least level without a counterexample found
  long sufficientLevel = 0;  // the proven level
  std::vector<LevelTrial> trials;
  std::optional<SampleResult> counterexampleBelow;
  std::string note = "heuristic: absence of counterexamples is evidence, not proof";
};

MinLevelReport empirical_min_level(const IdealSystem& system, std::size_t budget, std::uint64_t seed,
                                   ResolveOptions options = {});

/// Points of the refined graph used for order comparisons: rational
/// points on each divisor away from C, D and blown-up points.
std::vector<RationalPoint> generic_sample_points(const ResolutionGraph& graph, std::size_t perDivisor = 2);

} // namespace mldlab
