#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace extremal {

/// Exact nonnegative 128-bit count. Every arithmetic operation is checked and
/// throws std::overflow_error (or std::domain_error for negative results and
/// division by zero) instead of wrapping.
class CountValue {
 public:
  using raw_type = unsigned __int128;

  constexpr CountValue() noexcept = default;
  constexpr CountValue(std::uint64_t v) noexcept : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr CountValue from_raw(raw_type v) noexcept {
    CountValue c;
    c.value_ = v;
    return c;
  }
  static CountValue parse(std::string_view decimal);

  constexpr raw_type raw() const noexcept { return value_; }
  bool fits_u64() const noexcept { return value_ <= UINT64_MAX; }
  std::uint64_t to_u64() const;

  CountValue& operator+=(CountValue rhs);
  CountValue& operator-=(CountValue rhs);
  CountValue& operator*=(CountValue rhs);
  CountValue& operator/=(CountValue rhs);
  CountValue& operator%=(CountValue rhs);

  friend CountValue operator+(CountValue a, CountValue b) { return a += b; }
  friend CountValue operator-(CountValue a, CountValue b) { return a -= b; }
  friend CountValue operator*(CountValue a, CountValue b) { return a *= b; }
  friend CountValue operator/(CountValue a, CountValue b) { return a /= b; }
  friend CountValue operator%(CountValue a, CountValue b) { return a %= b; }

  friend constexpr bool operator==(CountValue a, CountValue b) noexcept { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(CountValue a, CountValue b) noexcept {
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  raw_type value_ = 0;
};

std::ostream& operator<<(std::ostream& os, CountValue c);

CountValue max(CountValue a, CountValue b) noexcept;

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
 public:
  using raw_type = __int128;

  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t integer) noexcept : num_(integer) {}  // NOLINT(google-explicit-constructor)
  Rational(raw_type num, raw_type den);

  /// Accepts "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  raw_type numerator() const noexcept { return num_; }
  raw_type denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  raw_type num_ = 0;
  raw_type den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace extremal
