#include "mldlab/algebra.hpp"
#include "mldlab/error.hpp"

#include <algorithm>

namespace mldlab {

namespace {

using YPoly = std::vector<UPoly>;

// Raised while computing over Q[x]/(modulus) when a coefficient is a zero
// divisor: the modulus splits as factor * (modulus / factor).
struct ModulusSplit {
  UPoly factor;
};

class QuotientRing {
public:
  explicit QuotientRing(UPoly modulus) : modulus_(std::move(modulus)) {}

  UPoly reduce(const UPoly& p) const { return p % modulus_; }

  // Inverse of a nonzero residue, or throws ModulusSplit.
  UPoly inverse(const UPoly& p) const {
    ExtendedGcd e = extended_gcd(p, modulus_);
    if (e.g.degree() > 0) throw ModulusSplit{e.g};
    return reduce(e.s);
  }

  void normalize(YPoly& p) const {
    for (auto& c : p) c = reduce(c);
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  }

  YPoly rem(YPoly a, const YPoly& b) const {
    UPoly inv = inverse(b.back());
    const int db = static_cast<int>(b.size()) - 1;
    normalize(a);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
      UPoly factor = reduce(a.back() * inv);
      int shift = static_cast<int>(a.size()) - 1 - db;
      for (int k = 0; k <= db; ++k)
        a[static_cast<std::size_t>(k + shift)] -= factor * b[static_cast<std::size_t>(k)];
      normalize(a);
    }
    return a;
  }

  YPoly gcd(YPoly a, YPoly b) const {
    normalize(a);
    normalize(b);
    if (!b.empty()) inverse(b.back());
    while (!b.empty()) {
      YPoly r = rem(a, b);
      if (!r.empty()) inverse(r.back());
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.empty()) inverse(a.back());
    return a;
  }

private:
  UPoly modulus_;
};

// Whether the generators have a common zero (x0, y0) over the algebraic
// closure with modulus(x0) = 0. modulus is squarefree.
bool common_zero_over_roots(const UPoly& modulus, const std::vector<YPoly>& gens) {
  QuotientRing ring(modulus);
  try {
    YPoly g;
    for (const auto& p : gens) g = ring.gcd(g, p);
    // Zero residue: every generator vanishes on the vertical lines.
    return g.empty() || g.size() >= 2;
  } catch (const ModulusSplit& split) {
    UPoly other = divmod(modulus, split.factor).first;
    return common_zero_over_roots(split.factor.monic(), gens) ||
           common_zero_over_roots(other.monic(), gens);
  }
}

UPoly eval_x(const BiPoly& f, const Rational& x0) {
  std::vector<Rational> v;
  for (const auto& c : f.coeffs_in_y()) v.push_back(c.eval(x0));
  return UPoly(std::move(v));
}

} // namespace

std::vector<RationalPoint> rational_cosupport(std::span<const BiPoly> gens, CosupportOptions options) {
  if (gens.empty()) throw Error(ErrorKind::EmptyGeneratorList, "rational_cosupport needs generators");
  std::vector<BiPoly> nz;
  int maxdeg = 0;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      nz.push_back(g);
      maxdeg = std::max(maxdeg, g.total_degree());
    }
  if (nz.empty()) throw Error(ErrorKind::PositiveDimensionalCosupport, "all generators are zero");
  int bound = options.degree_bound > 0 ? options.degree_bound : 2 * maxdeg;
  if (maxdeg > bound)
    throw Error(ErrorKind::InvalidArgument, "generator degree " + std::to_string(maxdeg) +
                                                " exceeds the degree bound " + std::to_string(bound));
  for (const auto& g : nz)
    if (g.is_constant()) return {};
  BiPoly h = gcd(std::span<const BiPoly>(nz));
  if (!h.is_constant())
    throw Error(ErrorKind::PositiveDimensionalCosupport, "generators share the factor " + h.str());

  // Two coprime combinations cut out a finite superset of the cosupport.
  BiPoly l1, l2;
  bool found = false;
  for (std::size_t i = 0; i < nz.size() && !found; ++i)
    for (std::size_t j = i + 1; j < nz.size() && !found; ++j)
      if (gcd(nz[i], nz[j]).is_constant()) {
        l1 = nz[i];
        l2 = nz[j];
        found = true;
      }
  for (long a = 2; !found; ++a) {
    BiPoly c1, c2;
    Rational pa(1), pb(1);
    for (const auto& g : nz) {
      c1 += g * pa;
      c2 += g * pb;
      pa *= a;
      pb *= a + 1;
    }
    if (!c1.is_zero() && !c2.is_zero() && gcd(c1, c2).is_constant()) {
      l1 = c1;
      l2 = c2;
      found = true;
    }
    if (a > 64) throw Error(ErrorKind::InvalidArgument, "internal: no coprime combination found");
  }

  UPoly res = resultant_y(l1, l2);
  std::vector<RationalPoint> points;
  if (res.degree() <= 0) return points;
  RootSplit rs = rational_roots(res);
  for (const auto& r : rs.roots) {
    UPoly g;
    for (const auto& f : nz) g = gcd(g, eval_x(f, r.root));
    if (g.is_zero())
      throw Error(ErrorKind::PositiveDimensionalCosupport, "vertical line in the cosupport");
    if (g.degree() <= 0) continue;
    RootSplit ys = rational_roots(g);
    if (ys.remainder.degree() > 0)
      throw Error(ErrorKind::IrrationalBasePoint,
                  "common zeros at x = " + to_string(r.root) + " with y a root of " + ys.remainder.str('y'));
    for (const auto& y : ys.roots) points.push_back({"base", r.root, y.root});
  }
  if (rs.remainder.degree() > 0) {
    std::vector<std::vector<UPoly>> ygens;
    for (const auto& f : nz) ygens.push_back(f.coeffs_in_y());
    UPoly q = squarefree_part(rs.remainder);
    if (common_zero_over_roots(q, ygens))
      throw Error(ErrorKind::IrrationalBasePoint,
                  "common zeros with x a root of " + q.str('x') + " (not rational)");
  }
  std::sort(points.begin(), points.end(), [](const RationalPoint& a, const RationalPoint& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return points;
}

} // namespace mldlab
