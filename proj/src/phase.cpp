#include "fusion/phase.hpp"

namespace fusion {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r) {
  // boost::rational keeps the denominator positive.
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

Phase::Phase(std::int64_t num, std::int64_t den) : Phase(Rational(num, den)) {}

Phase::Phase(const Rational& value) : value_(value - Rational(floor(value))) {}

std::string Phase::to_string() const { return fusion::to_string(value_); }

}  // namespace fusion
