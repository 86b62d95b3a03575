#include "adapt_meter/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace adapt_meter {
namespace {

__extension__ typedef __int128 Wide;

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<Rational> reduce(Wide num, Wide den) {
  if (den == 0) return std::nullopt;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || -num > kMax || den > kMax) return std::nullopt;
  return Rational::make(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  auto r = reduce(num, den);
  if (!r) throw std::invalid_argument("Rational with zero denominator");
  *this = *r;
}

std::optional<Rational> Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) return std::nullopt;
  if (den < 0) {
    if (num == std::numeric_limits<std::int64_t>::min() ||
        den == std::numeric_limits<std::int64_t>::min()) {
      return reduce(num, den);
    }
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  Rational r;
  r.num_ = num / g;
  r.den_ = den / g;
  return r;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> operator+(const Rational& a, const Rational& b) {
  return reduce(
      static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
      static_cast<Wide>(a.den_) * b.den_);
}

std::optional<Rational> operator*(const Rational& a, const Rational& b) {
  return reduce(static_cast<Wide>(a.num_) * b.num_,
                static_cast<Wide>(a.den_) * b.den_);
}

std::optional<Rational> Rational::divided_by(std::int64_t n) const {
  return reduce(num_, static_cast<Wide>(den_) * n);
}

std::optional<Rational> operator+(const std::optional<Rational>& a,
                                  const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace adapt_meter
