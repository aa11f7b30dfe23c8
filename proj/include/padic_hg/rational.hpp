#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace padic_hg {

/// Reduced fraction num/den with den > 0.
///
/// Used for hypergeometric parameters (where only the fractional part
/// matters) and for exact function values, which always have denominator
/// 1 or p. Arithmetic throws std::overflow_error if a reduced result leaves
/// the 64-bit range.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Parses "a" or "a/b".
Rational parse_rational(const std::string& text);

struct FracFloor {
  Rational frac;  // in [0, 1)
  std::int64_t floor;
};

/// Splits q into floor(q) + <q> exactly.
FracFloor frac_floor(const Rational& q);

inline Rational frac(const Rational& q) { return frac_floor(q).frac; }
inline std::int64_t floor(const Rational& q) { return frac_floor(q).floor; }

}  // namespace padic_hg
