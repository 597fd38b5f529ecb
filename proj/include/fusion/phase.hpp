#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace fusion {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

/// Largest integer not exceeding r.
std::int64_t floor(const Rational& r);

/// An exact rational taken modulo 1, always stored in [0, 1).
///
/// Ribbon twists and double braidings only enter through e^{2 pi i h},
/// so everything here is arithmetic in Q/Z.
class Phase {
 public:
  Phase() = default;
  Phase(std::int64_t num, std::int64_t den);
  explicit Phase(const Rational& value);

  const Rational& value() const noexcept { return value_; }
  std::int64_t num() const noexcept { return value_.numerator(); }
  std::int64_t den() const noexcept { return value_.denominator(); }
  bool is_zero() const noexcept { return value_.numerator() == 0; }

  Phase operator+(const Phase& o) const { return Phase(value_ + o.value_); }
  Phase operator-(const Phase& o) const { return Phase(value_ - o.value_); }
  Phase operator-() const { return Phase(-value_); }
  Phase& operator+=(const Phase& o) { return *this = *this + o; }

  friend bool operator==(const Phase&, const Phase&) = default;

  std::string to_string() const;

 private:
  Rational value_{0};
};

}  // namespace fusion
