#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace testing;

namespace {

std::map<Monomial, Rational> support(const BiPoly& p) { return {p.terms().begin(), p.terms().end()}; }

// Brute-force binomial expansion of (a x + b y)^n, used as an oracle.
BiPoly binomial(const Rational& a, const Rational& b, int n) {
  BiPoly out;
  Integer c = 1;
  for (int k = 0; k <= n; ++k) {
    Rational term = Rational(c);
    for (int i = 0; i < n - k; ++i) term *= a;
    for (int i = 0; i < k; ++i) term *= b;
    out.add_term(term, n - k, k);
    c = c * (n - k) / (k + 1);
  }
  return out;
}

RationalPoint at(long u, long v) { return {"base", Rational(u), Rational(v)}; }

} // namespace

TEST_CASE("rationals are canonical") {
  Rational r = parse_rational("-4/6");
  CHECK(to_string(r) == "-2/3");
  CHECK(to_string(parse_rational("5")) == "5/1");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
  CHECK(ExtRational::minus_infinity() < ExtRational(Rational(-1000)));
  CHECK(to_string(ExtRational::minus_infinity()) == "-inf");
}

TEST_CASE("parse examples") {
  CHECK(support(poly_parse("x^2 + y^3")) == std::map<Monomial, Rational>{{{2, 0}, 1}, {{0, 3}, 1}});
  CHECK(poly_parse("x - x").is_zero());
  CHECK(poly_parse("(x+y)^2") == binomial(1, 1, 2));
  CHECK(poly_parse("(2*x - 1/3*y)^5") == binomial(2, q("-1/3"), 5));
  CHECK(poly_parse("x^2 - 3/2*x*y + y^3").str() == "y^3 + x^2 - 3/2*x*y");
}

TEST_CASE("parse errors") {
  try {
    poly_parse("x + * y");
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(poly_parse("x + z"), Error);
  try {
    poly_parse("x + z");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
  }
  CHECK_THROWS_AS(poly_parse("x^"), SyntaxError);
  CHECK_THROWS_AS(parse_generators("(x, y"), SyntaxError);
  CHECK(parse_generators("(x, y^2)").size() == 2);
  CHECK(parse_generators("(x+y)^2").size() == 1);
  CHECK(parse_generators("(x+y)^2").front() == binomial(1, 1, 2));
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 1000; ++n) {
    BiPoly p = random_poly(rng, 9, 8, 40);
    REQUIRE(poly_parse(p.str()) == p);
  }
}

TEST_CASE("order examples") {
  CHECK(order_at(at(0, 0), poly_parse("x^2 + y^3")) == 2);
  CHECK(order_at(at(0, 0), poly_parse("1 + x")) == 0);
  CHECK(order_at(at(1, 0), poly_parse("x^2 - x")) == 1);
  CHECK(order_at(at(0, 0), BiPoly()) == kInfinity);
  std::vector<BiPoly> g1{poly_parse("x^2"), poly_parse("x*y"), poly_parse("y^5")};
  CHECK(ideal_order_at(at(0, 0), g1) == 2);
  std::vector<BiPoly> g2{poly_parse("1 + x"), poly_parse("y")};
  CHECK(ideal_order_at(at(0, 0), g2) == 0);
  std::vector<BiPoly> g3{poly_parse("x"), poly_parse("y - 1")};
  CHECK(ideal_order_at(at(0, 1), g3) == 1);
  CHECK_THROWS_AS(ideal_order_at(at(0, 0), std::vector<BiPoly>{}), Error);
}

TEST_CASE("order is multiplicative and subadditive") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 300; ++n) {
    BiPoly f = random_poly(rng, 5, 5), g = random_poly(rng, 5, 5);
    RationalPoint p = at(static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2);
    // a polynomial vanishing at p to make orders non-trivial
    BiPoly h = poly_parse("x").translate(-p.u, -p.v) * poly_parse("y").translate(-p.u, -p.v);
    f = f * h;
    const int of = order_at(p, f), og = order_at(p, g);
    if (of != kInfinity && og != kInfinity) CHECK(order_at(p, f * g) == of + og);
    CHECK(order_at(p, f + g) >= std::min(of, og));
  }
}

TEST_CASE("univariate roots and gcd") {
  UPoly f = UPoly::linear(q("1/2")) * UPoly::linear(q("1/2")) * UPoly::linear(-3) * UPoly(std::vector<Rational>{2, 0, 1});
  RootSplit s = rational_roots(f);
  REQUIRE(s.roots.size() == 2);
  CHECK(to_string(s.roots[0].root) == "-3/1");
  CHECK(s.roots[1].multiplicity == 2);
  CHECK(s.remainder == UPoly(std::vector<Rational>{2, 0, 1}));
  auto e = extended_gcd(f, f.derivative());
  CHECK(e.s * f + e.t * f.derivative() == e.g);
  CHECK(e.g == UPoly::linear(q("1/2")));
  CHECK(squarefree_part(f).degree() == 4);
}

TEST_CASE("bivariate gcd and resultant oracles") {
  BiPoly a = poly_parse("y - x^2 + 3*x"), g = poly_parse("x^3*y^2 - y + 2/5*x");
  // Res_y(y - a(x), g) = g(x, a(x))
  UPoly r = resultant_y(a, g);
  BiPoly expected = g.substitute(BiPoly::x(), poly_parse("x^2 - 3*x"));
  CHECK(BiPoly::from_x(r) == expected);
  BiPoly h = poly_parse("x*y + 1 - y^2");
  CHECK(gcd(a * h, g * h) == h.monic());
  CHECK(gcd(a, g) == BiPoly(1));
  CHECK(exact_divide(a * h, h) == a);
  CHECK_FALSE(exact_divide(a, h).has_value());
}

TEST_CASE("squarefree decomposition") {
  BiPoly s1 = poly_parse("y - x^2"), s2 = poly_parse("x + y + 1");
  BiPoly f = s1 * s2.pow(3) * BiPoly(7);
  auto d = squarefree_decomposition(f);
  REQUIRE(d.size() == 2);
  CHECK(d[0].first == s1.monic());
  CHECK(d[0].second == 1);
  CHECK(d[1].first == s2.monic());
  CHECK(d[1].second == 3);
}

TEST_CASE("divisorial split examples") {
  auto a = divisorial_split(parse_generators("(x^2, x*y^2)"));
  CHECK(a.h == BiPoly::x());
  CHECK(a.residual == parse_generators("(x, y^2)"));
  auto b = divisorial_split(parse_generators("(x, y)"));
  CHECK(b.h == BiPoly(1));
  CHECK(b.residual == parse_generators("(x, y)"));
  auto c = divisorial_split(parse_generators("(x^2*y + x*y^2)"));
  CHECK(c.h == poly_parse("x^2*y + x*y^2"));
  CHECK(c.residual == std::vector<BiPoly>{BiPoly(1)});
  std::set<std::string> comps;
  for (const auto& comp : c.components) {
    CHECK(comp.multiplicity == 1);
    comps.insert(comp.poly.str());
  }
  CHECK(comps == std::set<std::string>{"x", "y", "x + y"});
  CHECK_THROWS_AS(divisorial_split(parse_generators("(0, x - x)")), Error);
}

TEST_CASE("divisorial split preserves orders at rational points") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 60; ++n) {
    BiPoly h = random_poly(rng, 2, 2) + BiPoly::x();
    std::vector<BiPoly> gens{h * random_poly(rng, 3, 3), h * h * random_poly(rng, 3, 3)};
    if (gens[0].is_zero() || gens[1].is_zero()) continue;
    auto s = divisorial_split(gens);
    BiPoly hh(1);
    for (const auto& c : s.components) hh *= c.poly.pow(c.multiplicity);
    CHECK(hh == s.h);
    for (int k = 0; k < 5; ++k) {
      RationalPoint p = at(static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2);
      std::vector<BiPoly> again;
      for (const auto& r : s.residual) again.push_back(r * s.h);
      CHECK(ideal_order_at(p, again) == ideal_order_at(p, gens));
    }
  }
}

TEST_CASE("rational cosupport examples") {
  auto a = rational_cosupport(parse_generators("(x, y)"));
  REQUIRE(a.size() == 1);
  CHECK(a[0] == at(0, 0));
  auto b = rational_cosupport(parse_generators("(x^2 - 1, y)"));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == at(-1, 0));
  CHECK(b[1] == at(1, 0));
  try {
    rational_cosupport(parse_generators("(x^2 - 2, y)"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IrrationalBasePoint);
  }
  try {
    rational_cosupport(parse_generators("(x*y, x^2)"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PositiveDimensionalCosupport);
  }
  // a rational point plus an irrational pair on the same vertical line
  CHECK_THROWS_AS(rational_cosupport(parse_generators("(x, y^3 - 2*y)")), Error);
}

TEST_CASE("rational cosupport is complete on a grid") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int n = 0; n < 400; ++n) {
    // ideals with prescribed rational zeros
    const long a = static_cast<long>(rng() % 5) - 2, b = static_cast<long>(rng() % 5) - 2;
    BiPoly lx = BiPoly::x() - BiPoly(Rational(a)), ly = BiPoly::y() - BiPoly(Rational(b));
    std::vector<BiPoly> gens{lx * random_poly(rng, 2, 3) + ly * random_poly(rng, 2, 3),
                             lx * random_poly(rng, 2, 3) + ly.pow(2) * random_poly(rng, 1, 2)};
    std::vector<RationalPoint> pts;
    try {
      if (gens[0].is_zero() || gens[1].is_zero() || !gcd(gens[0], gens[1]).is_constant()) continue;
      pts = rational_cosupport(gens);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IrrationalBasePoint);
      continue;
    }
    ++checked;
    for (const auto& p : pts) CHECK(ideal_order_at(p, gens) >= 1);
    CHECK(std::find(pts.begin(), pts.end(), at(a, b)) != pts.end());
    for (long u = -6; u <= 6; ++u)
      for (long v = -6; v <= 6; ++v)
        for (long den : {1L, 2L, 3L}) {
          RationalPoint p{"base", Rational(u) / den, Rational(v) / den};
          bool zero = gens[0].eval(p.u, p.v) == 0 && gens[1].eval(p.u, p.v) == 0;
          if (zero) CHECK(std::find(pts.begin(), pts.end(), p) != pts.end());
        }
  }
  CHECK(checked > 40);
}
