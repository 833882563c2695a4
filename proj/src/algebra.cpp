#include "mldlab/algebra.hpp"
#include "mldlab/error.hpp"

#include <algorithm>

namespace mldlab {

std::string to_string(const RationalPoint& p) {
  return p.chart + ":(" + to_string(p.u) + ", " + to_string(p.v) + ")";
}

int order_at(const RationalPoint& p, const BiPoly& f) { return f.translate(p.u, p.v).order(); }

int ideal_order_at(const RationalPoint& p, std::span<const BiPoly> gens) {
  if (gens.empty()) throw Error(ErrorKind::EmptyGeneratorList, "ideal_order_at needs generators");
  int best = kInfinity;
  for (const auto& g : gens) best = std::min(best, order_at(p, g));
  return best;
}

std::optional<BiPoly> exact_divide(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  BiPoly rem = f, quot;
  const Monomial lg = g.leading_monomial();
  const Rational inv = 1 / g.leading_coeff();
  while (!rem.is_zero()) {
    Monomial lr = rem.leading_monomial();
    if (lr.i < lg.i || lr.j < lg.j) return std::nullopt;
    BiPoly t = BiPoly::term(rem.leading_coeff() * inv, lr.i - lg.i, lr.j - lg.j);
    quot += t;
    rem -= t * g;
  }
  return quot;
}

UPoly content_in_y(const BiPoly& f) {
  UPoly c;
  for (const auto& coeff : f.coeffs_in_y()) c = gcd(c, coeff);
  return c;
}

namespace {

using YPoly = std::vector<UPoly>; // coefficients in Q[x] of y^0, y^1, ...

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int ydeg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

// Pseudo-remainder of a by b in Q[x][y].
YPoly prem(YPoly a, const YPoly& b) {
  const UPoly& lb = b.back();
  int db = ydeg(b);
  while (ydeg(a) >= db && !a.empty()) {
    UPoly la = a.back();
    int shift = ydeg(a) - db;
    for (auto& c : a) c *= lb;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= la * b[static_cast<std::size_t>(k)];
    trim(a);
  }
  return a;
}

YPoly primitive(YPoly p) {
  UPoly c;
  for (const auto& q : p) c = gcd(c, q);
  if (c.is_zero()) return p;
  for (auto& q : p) q = divmod(q, c).first;
  return p;
}

} // namespace

BiPoly gcd(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  UPoly cf = content_in_y(f), cg = content_in_y(g);
  UPoly cont = gcd(cf, cg);
  YPoly a = primitive(f.coeffs_in_y());
  YPoly b = primitive(g.coeffs_in_y());
  if (ydeg(a) < ydeg(b)) std::swap(a, b);
  while (!b.empty() && ydeg(b) > 0) {
    YPoly r = primitive(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  // b empty: a is the primitive gcd. b of degree 0 (nonzero): gcd is 1.
  YPoly pp = b.empty() ? a : YPoly{UPoly(1)};
  return (BiPoly::from_x(cont) * BiPoly::from_coeffs_in_y(pp)).monic();
}

BiPoly gcd(std::span<const BiPoly> polys) {
  BiPoly g;
  for (const auto& p : polys) {
    g = gcd(g, p);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

UPoly resultant_y(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::InvalidArgument, "resultant of zero polynomial");
  YPoly a = f.coeffs_in_y(), b = g.coeffs_in_y();
  int m = ydeg(a), n = ydeg(b);
  if (m == 0 && n == 0) return UPoly(1);
  auto power = [](const UPoly& p, int e) {
    UPoly r(1);
    for (int k = 0; k < e; ++k) r *= p;
    return r;
  };
  if (m == 0) return power(a[0], n);
  if (n == 0) return power(b[0], m);
  const int size = m + n;
  std::vector<std::vector<UPoly>> M(static_cast<std::size_t>(size), std::vector<UPoly>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[r][static_cast<std::size_t>(r + k)] = a[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = b[static_cast<std::size_t>(n - k)];
  // Fraction-free Bareiss elimination over Q[x].
  int sign = 1;
  UPoly prev(1);
  for (int k = 0; k < size - 1; ++k) {
    if (M[k][k].is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < size; ++r)
        if (!M[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return UPoly();
      std::swap(M[k], M[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i)
      for (int j = k + 1; j < size; ++j)
        M[i][j] = divmod(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev).first;
    prev = M[k][k];
  }
  UPoly det = M[size - 1][size - 1];
  return sign < 0 ? -det : det;
}

namespace {

std::vector<std::pair<UPoly, int>> yun_univariate(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() <= 0) return out;
  UPoly a = gcd(f, f.derivative());
  UPoly b = divmod(f, a).first;
  UPoly c = divmod(f.derivative(), a).first;
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

BiPoly must_divide(const BiPoly& f, const BiPoly& g) {
  auto q = exact_divide(f, g);
  if (!q) throw Error(ErrorKind::InvalidArgument, "internal: inexact polynomial division");
  return *q;
}

// Yun's algorithm with respect to y; p must be primitive in y.
std::vector<std::pair<BiPoly, int>> yun_in_y(const BiPoly& p) {
  std::vector<std::pair<BiPoly, int>> out;
  if (p.degree_y() <= 0) return out;
  BiPoly dp = p.diff_y();
  BiPoly a = gcd(p, dp);
  BiPoly b = must_divide(p, a);
  BiPoly c = must_divide(dp, a);
  BiPoly d = c - b.diff_y();
  for (int i = 1; b.degree_y() > 0; ++i) {
    a = gcd(b, d);
    if (!a.is_constant()) out.emplace_back(a.monic(), i);
    b = must_divide(b, a);
    c = must_divide(d, a);
    d = c - b.diff_y();
  }
  return out;
}

bool less_poly(const BiPoly& a, const BiPoly& b) {
  Monomial la = a.leading_monomial(), lb = b.leading_monomial();
  if (la != lb) return grlex_less(la, lb);
  return a.str() < b.str();
}

// Splits a univariate (in the given variable) polynomial into its rational
// linear factors and a remainder without rational roots.
void split_univariate(const UPoly& p, int mult, bool in_x, std::vector<CurveComponent>& out) {
  if (p.degree() <= 0) return;
  RootSplit rs = rational_roots(p);
  auto embed = [&](const UPoly& u) { return in_x ? BiPoly::from_x(u) : BiPoly::from_y(u); };
  for (const auto& r : rs.roots) out.push_back({embed(UPoly::linear(r.root)).monic(), mult * r.multiplicity});
  if (rs.remainder.degree() > 0) out.push_back({embed(rs.remainder).monic(), mult});
}

} // namespace

std::vector<std::pair<BiPoly, int>> squarefree_decomposition(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "squarefree decomposition of zero");
  UPoly cont = content_in_y(f);
  BiPoly prim = must_divide(f, BiPoly::from_x(cont));
  std::vector<std::pair<BiPoly, int>> parts;
  for (auto& [u, i] : yun_univariate(cont)) parts.emplace_back(BiPoly::from_x(u).monic(), i);
  for (auto& [q, i] : yun_in_y(prim)) parts.emplace_back(q, i);
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : less_poly(a.first, b.first);
  });
  return parts;
}

std::vector<CurveComponent> curve_components(const BiPoly& f) {
  std::vector<CurveComponent> out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    if (part.degree_y() <= 0) {
      split_univariate(part.restrict_y_zero(), mult, true, out);
      continue;
    }
    // Primitive in y; peel off its content in Q[y].
    BiPoly swapped = part.swap_xy();
    UPoly ycont = content_in_y(swapped);
    BiPoly rest = part;
    if (ycont.degree() > 0) {
      split_univariate(ycont, mult, false, out);
      rest = must_divide(part, BiPoly::from_y(ycont));
    }
    if (!rest.is_constant()) out.push_back({rest.monic(), mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return less_poly(a.poly, b.poly); });
  return out;
}

std::vector<BiPoly> coprime_basis(std::vector<BiPoly> polys) {
  std::vector<BiPoly> basis;
  for (auto& p : polys)
    if (!p.is_constant()) basis.push_back(p.monic());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        BiPoly g = gcd(basis[i], basis[j]);
        if (g.is_constant()) continue;
        BiPoly a = must_divide(basis[i], g), b = must_divide(basis[j], g);
        std::vector<BiPoly> next;
        for (std::size_t k = 0; k < basis.size(); ++k)
          if (k != i && k != j) next.push_back(basis[k]);
        for (BiPoly* q : {&g, &a, &b})
          if (!q->is_constant()) next.push_back(q->monic());
        basis = std::move(next);
        changed = true;
      }
    }
  }
  std::sort(basis.begin(), basis.end(), less_poly);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

DivisorialSplit divisorial_split(std::span<const BiPoly> gens) {
  if (gens.empty()) throw Error(ErrorKind::EmptyGeneratorList, "divisorial_split needs generators");
  DivisorialSplit out;
  out.h = gcd(gens);
  if (out.h.is_zero()) throw Error(ErrorKind::AllZeroGenerators, "all generators are zero");
  for (const auto& g : gens)
    if (!g.is_zero()) out.residual.push_back(must_divide(g, out.h));
  if (!out.h.is_constant()) out.components = curve_components(out.h);
  return out;
}

} // namespace mldlab
