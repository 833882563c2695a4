#include "mldlab/rational.hpp"
#include "mldlab/error.hpp"

#include <cctype>

namespace mldlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::UnknownVariable: return "UnknownVariable";
  case ErrorKind::EmptyGeneratorList: return "EmptyGeneratorList";
  case ErrorKind::AllZeroGenerators: return "AllZeroGenerators";
  case ErrorKind::IrrationalBasePoint: return "IrrationalBasePoint";
  case ErrorKind::PositiveDimensionalCosupport: return "PositiveDimensionalCosupport";
  case ErrorKind::InvalidFactor: return "InvalidFactor";
  case ErrorKind::PointNotOverOrigin: return "PointNotOverOrigin";
  case ErrorKind::TooManyDivisorsThroughPoint: return "TooManyDivisorsThroughPoint";
  case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  case ErrorKind::NotResolved: return "NotResolved";
  case ErrorKind::UnknownDivisor: return "UnknownDivisor";
  case ErrorKind::NonMonomialInput: return "NonMonomialInput";
  case ErrorKind::ChartExpressionError: return "ChartExpressionError";
  case ErrorKind::NotInScope: return "NotInScope";
  case ErrorKind::NotPlt: return "NotPlt";
  case ErrorKind::FactorCountMismatch: return "FactorCountMismatch";
  case ErrorKind::UnsupportedClassification: return "UnsupportedClassification";
  case ErrorKind::PointNotOnExceptionalLocus: return "PointNotOnExceptionalLocus";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+'))
      part.remove_prefix(1);
    if (part.empty()) return false;
    for (char ch : part)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + std::string(text) + "'");
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

const Rational& ExtRational::value() const {
  if (!value_) throw Error(ErrorKind::InvalidArgument, "value is -infinity");
  return *value_;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.is_minus_infinity() || b.is_minus_infinity())
    return a.is_minus_infinity() == b.is_minus_infinity();
  return *a.value_ == *b.value_;
}

bool operator<(const ExtRational& a, const ExtRational& b) {
  if (b.is_minus_infinity()) return false;
  if (a.is_minus_infinity()) return true;
  return *a.value_ < *b.value_;
}

std::string to_string(const ExtRational& q) {
  return q.is_minus_infinity() ? std::string("-inf") : to_string(q.value());
}

} // namespace mldlab
