#include "mldlab/ideal_system.hpp"
#include "mldlab/error.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

namespace mldlab {

void IdealFactor::validate() const {
  if (generators.empty()) throw Error(ErrorKind::InvalidFactor, "factor without generators");
  if (std::all_of(generators.begin(), generators.end(), [](const BiPoly& g) { return g.is_zero(); }))
    throw Error(ErrorKind::InvalidFactor, "all generators of a factor are zero");
  if (exponent <= 0) throw Error(ErrorKind::InvalidFactor, "exponent must be positive, got " + to_string(exponent));
}

std::string IdealFactor::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (k) out += ", ";
    out += generators[k].str();
  }
  return out + ")^" + to_string(exponent);
}

void IdealSystem::validate() const {
  for (const auto& f : factors) f.validate();
}

std::string IdealSystem::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += " * ";
    out += factors[k].str();
  }
  return out;
}

std::string IdealSystem::digest() const {
  // FNV-1a over the canonical text.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

IdealSystem IdealSystem::with_factor(IdealFactor f) const {
  IdealSystem s = *this;
  s.factors.push_back(std::move(f));
  return s;
}

IdealFactor maximal_ideal(const Rational& exponent) { return {{BiPoly::x(), BiPoly::y()}, exponent}; }

} // namespace mldlab
