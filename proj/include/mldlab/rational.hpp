#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mldlab {

/// Exact rational number. GMP keeps the value canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Always "p/q", including integers ("2/1").
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws Error(InvalidArgument) otherwise.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);

/// A rational value extended by -infinity, the only non-finite value a
/// minimal log discrepancy can take.
class ExtRational {
public:
  ExtRational() = default;
  ExtRational(Rational value) : value_(std::move(value)) {}

  static ExtRational minus_infinity() { return ExtRational(); }

  bool is_minus_infinity() const { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend bool operator<(const ExtRational& a, const ExtRational& b);

private:
  std::optional<Rational> value_;
};

std::string to_string(const ExtRational& q);

} // namespace mldlab
