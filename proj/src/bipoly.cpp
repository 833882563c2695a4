#include "mldlab/bipoly.hpp"
#include "mldlab/error.hpp"

#include <algorithm>

namespace mldlab {

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.i < b.i;
}

BiPoly::BiPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

BiPoly BiPoly::x() { return term(1, 1, 0); }
BiPoly BiPoly::y() { return term(1, 0, 1); }

BiPoly BiPoly::term(const Rational& c, int i, int j) {
  BiPoly p;
  p.add_term(c, i, j);
  return p;
}

BiPoly BiPoly::from_x(const UPoly& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term(p.coeff(i), i, 0);
  return r;
}

BiPoly BiPoly::from_y(const UPoly& p) {
  BiPoly r;
  for (int j = 0; j <= p.degree(); ++j) r.add_term(p.coeff(j), 0, j);
  return r;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(const Rational& c, int i, int j) {
  if (c == 0) return;
  if (i < 0 || j < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  auto [it, inserted] = terms_.emplace(Monomial{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.i);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.j);
  return d;
}

int BiPoly::order() const {
  int d = kInfinity;
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

long BiPoly::weighted_order(long w1, long w2) const {
  long d = kInfinity;
  for (const auto& [m, c] : terms_) d = std::min(d, w1 * m.i + w2 * m.j);
  return d;
}

Monomial BiPoly::leading_monomial() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "leading term of zero polynomial");
  Monomial best = terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    if (grlex_less(best, m)) best = m;
  return best;
}

const Rational& BiPoly::leading_coeff() const { return terms_.at(leading_monomial()); }

BiPoly BiPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading_coeff());
}

BiPoly BiPoly::homogeneous_part(int d) const {
  BiPoly r;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

BiPoly BiPoly::truncate_below(int l) const {
  BiPoly r;
  for (const auto& [m, c] : terms_)
    if (m.degree() < l) r.terms_.emplace(m, c);
  return r;
}

namespace {
Rational rpow(const Rational& base, int e) {
  Rational r(1);
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}
} // namespace

Rational BiPoly::eval(const Rational& x0, const Rational& y0) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) acc += c * rpow(x0, m.i) * rpow(y0, m.j);
  return acc;
}

BiPoly BiPoly::translate(const Rational& a, const Rational& b) const {
  if (a == 0 && b == 0) return *this;
  BiPoly X = x() + BiPoly(a);
  BiPoly Y = y() + BiPoly(b);
  return substitute(X, Y);
}

BiPoly BiPoly::substitute(const BiPoly& X, const BiPoly& Y) const {
  // Cache powers; most inputs have small degree.
  std::vector<BiPoly> xp{BiPoly(1)}, yp{BiPoly(1)};
  BiPoly result;
  for (const auto& [m, c] : terms_) {
    while (static_cast<int>(xp.size()) <= m.i) xp.push_back(xp.back() * X);
    while (static_cast<int>(yp.size()) <= m.j) yp.push_back(yp.back() * Y);
    result += xp[static_cast<std::size_t>(m.i)] * yp[static_cast<std::size_t>(m.j)] * c;
  }
  return result;
}

UPoly BiPoly::restrict_x_zero() const {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_y(), 0)) + 1);
  for (const auto& [m, c] : terms_)
    if (m.i == 0) v[static_cast<std::size_t>(m.j)] += c;
  return UPoly(std::move(v));
}

UPoly BiPoly::restrict_y_zero() const {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_x(), 0)) + 1);
  for (const auto& [m, c] : terms_)
    if (m.j == 0) v[static_cast<std::size_t>(m.i)] += c;
  return UPoly(std::move(v));
}

BiPoly BiPoly::divide_monomial(int a, int b) const {
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.i < a || m.j < b)
      throw Error(ErrorKind::InvalidArgument, "monomial does not divide polynomial");
    r.terms_.emplace(Monomial{m.i - a, m.j - b}, c);
  }
  return r;
}

BiPoly BiPoly::swap_xy() const {
  BiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.j, m.i}, c);
  return r;
}

BiPoly BiPoly::diff_x() const {
  BiPoly r;
  for (const auto& [m, c] : terms_)
    if (m.i > 0) r.add_term(c * m.i, m.i - 1, m.j);
  return r;
}

BiPoly BiPoly::diff_y() const {
  BiPoly r;
  for (const auto& [m, c] : terms_)
    if (m.j > 0) r.add_term(c * m.j, m.i, m.j - 1);
  return r;
}

std::vector<UPoly> BiPoly::coeffs_in_y() const {
  int dy = degree_y();
  if (dy < 0) return {};
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(dy) + 1);
  for (const auto& [m, c] : terms_) {
    auto& row = raw[static_cast<std::size_t>(m.j)];
    if (static_cast<int>(row.size()) <= m.i) row.resize(static_cast<std::size_t>(m.i) + 1);
    row[static_cast<std::size_t>(m.i)] = c;
  }
  std::vector<UPoly> out;
  out.reserve(raw.size());
  for (auto& row : raw) out.emplace_back(std::move(row));
  return out;
}

BiPoly BiPoly::from_coeffs_in_y(const std::vector<UPoly>& c) {
  BiPoly r;
  for (std::size_t j = 0; j < c.size(); ++j)
    for (int i = 0; i <= c[j].degree(); ++i) r.add_term(c[j].coeff(i), i, static_cast<int>(j));
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m.i, m.j);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m.i, m.j);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma.i + mb.i, ma.j + mb.j);
  return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = *this * o; }

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

BiPoly BiPoly::pow(int e) const {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative power");
  BiPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  std::string out;
  for (const auto& [m, c] : sorted) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    bool constant = m.i == 0 && m.j == 0;
    std::string mono;
    auto var = [&](char v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var('x', m.i);
    var('y', m.j);
    if (constant) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

} // namespace mldlab
