#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace adapt_meter {

// Reduced fraction with a positive denominator. Arithmetic returns nullopt
// instead of overflowing, so callers can fall back to the double value.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  // nullopt for a zero denominator.
  static std::optional<Rational> make(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "7/24", or "0" / "1" for whole numbers.
  std::string to_string() const;

  friend std::optional<Rational> operator+(const Rational& a, const Rational& b);
  friend std::optional<Rational> operator*(const Rational& a, const Rational& b);
  std::optional<Rational> divided_by(std::int64_t n) const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::optional<Rational> operator+(const std::optional<Rational>& a,
                                  const std::optional<Rational>& b);

}  // namespace adapt_meter
