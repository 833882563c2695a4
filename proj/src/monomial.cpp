#include "mldlab/error.hpp"
#include "mldlab/mld.hpp"

#include <algorithm>
#include <numeric>

namespace mldlab {

namespace {

struct Weight {
  long w1, w2;
};

Monomial single_term(const BiPoly& g) {
  if (g.terms().size() != 1 || g.terms().begin()->second == 0)
    throw Error(ErrorKind::NonMonomialInput, "'" + g.str() + "' is not a monomial");
  return g.terms().begin()->first;
}

} // namespace

// The log discrepancy of the monomial valuation with weights w is a convex,
// positively homogeneous, piecewise-linear function f(w). Its linearity
// cones are bounded by the axes, the diagonal (from m) and the normals of
// segments between generator exponents. If f is negative on a ray it tends
// to -infinity along it; otherwise the minimum over lattice points in the
// open quadrant is attained at a Hilbert basis element of some cone, whose
// L1 norm is at most the sum of the norms of the two bounding rays.
ExtRational monomial_mld(const IdealSystem& system, const BoundarySpec& boundary) {
  system.validate();
  boundary.validate();
  std::vector<std::vector<Monomial>> supports;
  std::vector<Rational> exps;
  for (const auto& f : system.factors) {
    std::vector<Monomial> pts;
    for (const auto& g : f.generators)
      if (!g.is_zero()) pts.push_back(single_term(g));
    supports.push_back(std::move(pts));
    exps.push_back(f.exponent);
  }

  // D: x and/or y when their coefficient lies in (0, 1).
  Rational dx = 0, dy = 0;
  for (std::size_t j = 0; j < supports.size(); ++j) {
    int mi = kInfinity, mj = kInfinity;
    for (const auto& m : supports[j]) {
      mi = std::min(mi, m.i);
      mj = std::min(mj, m.j);
    }
    dx += exps[j] * mi;
    dy += exps[j] * mj;
  }
  long dWeightX = 0, dWeightY = 0;
  if (boundary.explicitD) {
    for (const auto& d : *boundary.explicitD) {
      Monomial m = single_term(d);
      dWeightX += m.i;
      dWeightY += m.j;
    }
  } else {
    dWeightX = (dx > 0 && dx < 1) ? 1 : 0;
    dWeightY = (dy > 0 && dy < 1) ? 1 : 0;
  }

  auto f = [&](long w1, long w2) {
    Rational v = Rational(w1 + w2);
    for (std::size_t j = 0; j < supports.size(); ++j) {
      long best = kInfinity;
      for (const auto& m : supports[j]) best = std::min(best, w1 * m.i + w2 * m.j);
      v -= exps[j] * best;
    }
    v -= boundary.tM * std::min(w1, w2);
    v -= boundary.sD * (w1 * dWeightX + w2 * dWeightY);
    return v;
  };

  std::vector<Weight> rays{{1, 0}, {0, 1}, {1, 1}};
  Rational sumDeg = 0;
  for (std::size_t j = 0; j < supports.size(); ++j) {
    int maxdeg = 0;
    for (const auto& a : supports[j]) maxdeg = std::max(maxdeg, a.degree());
    sumDeg += exps[j] * maxdeg;
    for (const auto& a : supports[j])
      for (const auto& b : supports[j]) {
        long di = b.i - a.i, dj = b.j - a.j;
        if (di > 0 && dj < 0) {
          long g = std::gcd(di, -dj);
          rays.push_back({-dj / g, di / g});
        }
      }
  }
  long maxNorm = 0;
  for (const auto& r : rays) {
    if (f(r.w1, r.w2) < 0) return ExtRational::minus_infinity();
    maxNorm = std::max(maxNorm, r.w1 + r.w2);
  }
  long bound = std::max<long>(floor(2 * (1 + sumDeg)).get_si(), 2 * maxNorm + 2);

  std::optional<Rational> best;
  for (long total = 2; total <= bound; ++total)
    for (long w1 = 1; w1 < total; ++w1) {
      long w2 = total - w1;
      if (std::gcd(w1, w2) != 1) continue;
      Rational v = f(w1, w2);
      if (!best || v < *best) best = v;
    }
  if (*best < 0) return ExtRational::minus_infinity();
  return *best;
}

} // namespace mldlab
