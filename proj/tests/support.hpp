#pragma once

#include "mldlab/error.hpp"
#include "mldlab/parse.hpp"
#include "mldlab/stability.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using namespace mldlab;

inline IdealSystem sys(const std::vector<std::pair<std::string, std::string>>& factors) {
  IdealSystem s;
  for (const auto& [g, e] : factors) s.factors.push_back({parse_generators(g), parse_rational(e)});
  return s;
}

inline Rational q(const std::string& s) { return parse_rational(s); }

inline ExtRational ext(const std::string& s) {
  return s == "-inf" ? ExtRational::minus_infinity() : ExtRational(parse_rational(s));
}

inline BiPoly random_poly(std::mt19937_64& rng, int maxDeg, int maxTerms, int coeffRange = 5) {
  BiPoly p;
  const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(maxTerms));
  for (int k = 0; k < terms; ++k) {
    const int d = static_cast<int>(rng() % static_cast<unsigned>(maxDeg + 1));
    const int i = static_cast<int>(rng() % static_cast<unsigned>(d + 1));
    long num = static_cast<long>(rng() % (2 * coeffRange + 1)) - coeffRange;
    long den = 1 + static_cast<long>(rng() % 3);
    p.add_term(Rational(num) / den, i, d - i);
  }
  return p;
}

// Applies the linear change of coordinates (x, y) -> (a x + b y, c x + d y).
inline IdealSystem substitute(const IdealSystem& s, const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d) {
  const BiPoly X = BiPoly::x() * a + BiPoly::y() * b;
  const BiPoly Y = BiPoly::x() * c + BiPoly::y() * d;
  IdealSystem out;
  for (const auto& f : s.factors) {
    IdealFactor g{{}, f.exponent};
    for (const auto& p : f.generators) g.generators.push_back(p.substitute(X, Y));
    out.factors.push_back(std::move(g));
  }
  return out;
}

} // namespace testing
