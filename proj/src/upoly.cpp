#include "mldlab/upoly.hpp"
#include "mldlab/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mldlab {

namespace {
const Rational kZero(0);
} // namespace

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

UPoly UPoly::linear(const Rational& root) { return UPoly({-root, Rational(1)}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UPoly::leading() const { return is_zero() ? kZero : coeffs_.back(); }

Rational UPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly r = *this;
  Rational inv = 1 / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string UPoly::str(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    bool unit = a == 1;
    if (!unit || i == 0) out += a.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
  Rational inv = 1 / b.leading();
  for (int i = da; i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] * inv;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {UPoly(), UPoly(), UPoly()};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly squarefree_part(const UPoly& f) {
  if (f.degree() <= 0) return f.is_zero() ? UPoly() : UPoly(1);
  UPoly g = gcd(f, f.derivative());
  return divmod(f, g).first.monic();
}

namespace {

// Prime factorisation by trial division plus Pollard rho for the cofactor.
void factor_into(Integer n, std::map<Integer, int>& out);

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = abs(Integer(x - y));
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::map<Integer, int> primes;
  factor_into(n, primes);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : primes) {
    std::size_t count = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

} // namespace

RootSplit rational_roots(const UPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational_roots of zero polynomial");
  RootSplit out;
  UPoly rest = f.monic();
  // Roots of the squarefree part, tested by the rational root theorem on an
  // integer multiple of it.
  UPoly sf = squarefree_part(rest);
  std::vector<Rational> found;
  if (sf.coeff(0) == 0 && sf.degree() >= 1) {
    found.emplace_back(0);
    sf = divmod(sf, UPoly::linear(0)).first;
  }
  if (sf.degree() >= 1) {
    Integer lcm_den = 1;
    for (const auto& c : sf.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : sf.coeffs()) ints.push_back(Integer(c * lcm_den));
    auto num_divs = positive_divisors(ints.front());
    auto den_divs = positive_divisors(ints.back());
    std::set<Rational> candidates;
    for (const auto& p : num_divs)
      for (const auto& q : den_divs) {
        Rational r(p, q);
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(-r);
      }
    for (const auto& r : candidates)
      if (sf.eval(r) == 0) found.push_back(r);
  }
  std::sort(found.begin(), found.end());
  for (const auto& r : found) {
    int mult = 0;
    UPoly lin = UPoly::linear(r);
    while (true) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.roots.push_back({r, mult});
  }
  out.remainder = rest.monic();
  return out;
}

} // namespace mldlab
