#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace testing;

namespace {

std::string mld_of(const IdealSystem& s, const BoundarySpec& b = {}) { return to_string(mld_at_origin(s, b).value); }

// Log discrepancy of the monomial valuation with weights w at the origin,
// evaluated directly from the monomial generators.
Rational monomial_value(const IdealSystem& s, long w1, long w2) {
  Rational a = w1 + w2;
  for (const auto& f : s.factors) {
    long best = -1;
    for (const auto& g : f.generators) {
      long v = g.weighted_order(w1, w2);
      if (best < 0 || v < best) best = v;
    }
    a -= f.exponent * best;
  }
  return a;
}

// Brute force over a box of weights, with long rays standing in for the axes.
ExtRational brute_force(const IdealSystem& s) {
  std::optional<Rational> best;
  auto consider = [&](long w1, long w2) {
    Rational v = monomial_value(s, w1, w2);
    if (!best || v < *best) best = v;
  };
  for (long w1 = 1; w1 <= 40; ++w1)
    for (long w2 = 1; w1 + w2 <= 41; ++w2)
      if (std::gcd(w1, w2) == 1) consider(w1, w2);
  consider(1000, 1);
  consider(1, 1000);
  if (*best < 0) return ExtRational::minus_infinity();
  return *best;
}

} // namespace

TEST_CASE("log discrepancy examples") {
  IdealSystem cusp = sys({{"(x^2, y^3)", "5/6"}});
  ResolutionGraph g = log_resolution(cusp);
  CHECK(to_string(log_discrepancy(g, 3, cusp)) == "0/1");
  for (const auto& e : g.divisors) CHECK(log_discrepancy(g, e.id, IdealSystem{}) == 1 + e.k);
  IdealSystem s = sys({{"(x)", "1"}, {"(x, y)", "1/2"}});
  ResolutionGraph h = log_resolution(s);
  CHECK(to_string(log_discrepancy(h, 1, s, {0, q("1/2"), std::nullopt})) == "0/1");
  CHECK_THROWS_AS(log_discrepancy(h, 7, s), Error);
}

TEST_CASE("mld examples") {
  CHECK(mld_of(IdealSystem{}) == "2/1");
  MldReport line = mld_at_origin(sys({{"(x)", "1"}}));
  CHECK(to_string(line.value) == "1/1");
  CHECK(line.classification == Classification::PltWithCentre);
  CHECK(line.nonKltCentres == std::vector<int>{0});
  CHECK(mld_of(sys({{"(x)", "2"}})) == "-inf");
  CHECK(mld_at_origin(sys({{"(x)", "2"}})).classification == Classification::NotLc);
  // a boundary on D pushes a curve coefficient over 1
  CHECK(mld_of(sys({{"(x)", "1"}, {"(y)", "1/2"}}), {q("3/4"), 0, std::nullopt}) == "-inf");
}

TEST_CASE("classify examples") {
  MldReport k = classify(sys({{"(x, y^3)", "1"}}));
  CHECK(k.classification == Classification::Klt);
  MldReport p = classify(sys({{"(x)", "1"}}));
  CHECK(p.classification == Classification::PltWithCentre);
  CHECK(p.F == 1);
  MldReport c = classify(sys({{"(x^2, y^3)", "5/6"}}));
  CHECK(c.classification == Classification::LcNotPlt);
  CHECK(c.computedBy == "E3");
  CHECK(to_string(c.value) == "0/1");
  // a nodal d = 1 curve is lc but not plt
  CHECK(classify(sys({{"(x*y)", "1"}})).classification == Classification::LcNotPlt);
}

TEST_CASE("monomial oracle examples") {
  CHECK(to_string(monomial_mld(sys({{"(x, y)", "1"}}))) == "1/1");
  CHECK(to_string(monomial_mld(sys({{"(x^2, y^3)", "5/6"}}))) == "0/1");
  CHECK(to_string(monomial_mld(sys({{"(x, y^2)", "1/2"}}))) == "3/2");
  CHECK(to_string(monomial_value(sys({{"(x, y^2)", "1/2"}}), 2, 1)) == "2/1");
  CHECK(to_string(monomial_mld(sys({{"(x)", "2"}}))) == "-inf");
  CHECK_THROWS_AS(monomial_mld(sys({{"(x + y)", "1"}})), Error);
}

TEST_CASE("engine, monomial oracle and brute force agree") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 60; ++n) {
    IdealSystem s;
    const int factors = 1 + static_cast<int>(rng() % 2);
    for (int j = 0; j < factors; ++j) {
      IdealFactor f;
      const int gens = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < gens; ++k) {
        const int d = 1 + static_cast<int>(rng() % 4);
        const int i = static_cast<int>(rng() % (d + 1));
        f.generators.push_back(BiPoly::term(1, i, d - i));
      }
      f.exponent = Rational(1 + static_cast<long>(rng() % 6)) / 6;
      s.factors.push_back(f);
    }
    CAPTURE(s.str());
    ExtRational engine = mld_at_origin(s).value;
    CHECK(engine == monomial_mld(s));
    CHECK(engine == brute_force(s));
  }
}

TEST_CASE("monomial valuation data") {
  ResolutionGraph trivial = log_resolution(IdealSystem{});
  CHECK(to_string(monomial_valuation_data({1, 1}, IdealSystem{}, RationalPoint{}, trivial).logDiscrepancy) == "2/1");
  IdealSystem cusp = sys({{"(x^2, y^3)", "5/6"}});
  ResolutionGraph g = log_resolution(cusp);
  ValuationData base = monomial_valuation_data({3, 2}, cusp, RationalPoint{}, g);
  CHECK(to_string(base.logDiscrepancy) == "0/1");
  CHECK(base.factorOrders == std::vector<long>{6});
  CHECK(to_string(log_discrepancy(g, 1, cusp)) == "1/3");
  CHECK(to_string(log_discrepancy(g, 2, cusp)) == "1/2");
  // E1 meets E2 at the origin of E2.A; the (1, 1) valuation there is E3
  ValuationData corner = monomial_valuation_data({1, 1}, cusp, {"E2.A", 0, 0}, g);
  CHECK(to_string(corner.cornerTerm) == "5/6");
  CHECK(corner.logDiscrepancy == log_discrepancy(g, 3, cusp));
  CHECK_THROWS_AS(MonomialValuation(2, 4), Error);
  CHECK_THROWS_AS(monomial_valuation_data({1, 1}, cusp, {"base", 1, 0}, g), Error);
}

TEST_CASE("argmin consistency and boundary-free reduction") {
  const std::vector<std::vector<std::pair<std::string, std::string>>> systems = {
      {{"(x^2, y^3)", "5/6"}}, {{"(x)", "1"}, {"(y - x^2)", "1/2"}}, {{"(y^2 - x^5)", "1/3"}},
      {{"(x, y)", "3/2"}},     {{"(x^3, x*y, y^4)", "1/2"}},        {{"(x*y*(x - y))", "1/2"}}};
  for (const auto& s : systems) {
    IdealSystem system = sys(s);
    ResolutionGraph g = log_resolution(system);
    MldReport r = mld_on_graph(g);
    CHECK(r.value == mld_on_graph(g, {0, 0, std::nullopt}).value);
    if (!r.value.is_minus_infinity() && r.computedBy[0] == 'E') {
      CHECK(ExtRational(log_discrepancy(g, std::stoi(r.computedBy.substr(1)), system)) == r.value);
      for (const auto& e : g.divisors) CHECK(r.value.value() <= log_discrepancy(g, e.id, system));
    }
  }
}

TEST_CASE("monotonicity under adding generators") {
  std::mt19937_64 rng(41);
  for (int n = 0; n < 40; ++n) {
    IdealSystem s;
    s.factors.push_back({{random_poly(rng, 3, 3, 3) * BiPoly::x() + BiPoly::y().pow(2)}, Rational(1) / 2});
    s.factors.push_back({{BiPoly::x().pow(1 + static_cast<int>(rng() % 3))}, Rational(1) / 3});
    IdealSystem bigger = s;
    bigger.factors[0].generators.push_back(random_poly(rng, 3, 2, 3) + BiPoly::x().pow(2));
    try {
      ExtRational a = mld_at_origin(s).value, b = mld_at_origin(bigger).value;
      CHECK_FALSE(b < a);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IrrationalBasePoint);
    }
  }
}

TEST_CASE("automorphism invariance") {
  IdealSystem s = sys({{"(y^2 - x^3)", "1/2"}, {"(x)", "1/3"}});
  const ExtRational v = mld_at_origin(s).value;
  CHECK(mld_at_origin(substitute(s, 1, 2, 3, 1)).value == v);
  CHECK(mld_at_origin(substitute(s, 0, 1, 1, 0)).value == v);
  CHECK(mld_at_origin(substitute(s, q("1/2"), -1, 1, 1)).value == v);
}

TEST_CASE("certificate examples") {
  StabilityCertificate a = compute_constants(sys({{"(x)", "1"}, {"(x, y)", "1/2"}}));
  CHECK(to_string(a.c) == "1/2");
  CHECK(a.D.empty());
  CHECK(to_string(a.s) == "1/1");
  CHECK(to_string(a.t) == "1/2");
  CHECK(to_string(a.tPrime) == "1/2");
  CHECK(a.F == 1);
  CHECK(a.l == 2);

  StabilityCertificate b = compute_constants(sys({{"(x)", "1"}}));
  CHECK(to_string(b.c) == "1/1");
  CHECK(to_string(b.t) == "1/1");
  CHECK(b.l == 2);
  CHECK(b.F == 1);

  StabilityCertificate c = compute_constants(sys({{"(x)", "1"}, {"(y)", "1/4"}, {"(x, y)", "1/4"}}));
  CHECK(to_string(c.c) == "1/2");
  CHECK(to_string(c.s) == "1/2");
  CHECK(to_string(c.tPrime) == "0/1");
  CHECK(to_string(c.t) == "1/2");
  CHECK(c.l == 2);

  try {
    compute_constants(sys({{"(x^2, y^3)", "5/6"}}));
    FAIL("expected NotPlt");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPlt);
  }
}

TEST_CASE("level rounds integer ratios up") {
  ResolutionGraph g = log_resolution(sys({{"(x^2, y^2)", "1/2"}}));
  CHECK(level_above_ratios(g) == 3);
}
