#include "extremal/count_value.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace extremal {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
  return r;
}

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
  return r;
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

CountValue CountValue::parse(std::string_view decimal) {
  if (decimal.empty()) throw std::invalid_argument("empty count");
  CountValue out;
  for (char ch : decimal) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("invalid count: " + std::string(decimal));
    out *= CountValue(10);
    out += CountValue(static_cast<std::uint64_t>(ch - '0'));
  }
  return out;
}

std::uint64_t CountValue::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("count exceeds 64 bits");
  return static_cast<std::uint64_t>(value_);
}

CountValue& CountValue::operator+=(CountValue rhs) {
  if (__builtin_add_overflow(value_, rhs.value_, &value_)) throw std::overflow_error("count overflow in addition");
  return *this;
}

CountValue& CountValue::operator-=(CountValue rhs) {
  if (rhs.value_ > value_) throw std::domain_error("negative count in subtraction");
  value_ -= rhs.value_;
  return *this;
}

CountValue& CountValue::operator*=(CountValue rhs) {
  if (__builtin_mul_overflow(value_, rhs.value_, &value_)) throw std::overflow_error("count overflow in multiplication");
  return *this;
}

CountValue& CountValue::operator/=(CountValue rhs) {
  if (rhs.value_ == 0) throw std::domain_error("count division by zero");
  value_ /= rhs.value_;
  return *this;
}

CountValue& CountValue::operator%=(CountValue rhs) {
  if (rhs.value_ == 0) throw std::domain_error("count division by zero");
  value_ %= rhs.value_;
  return *this;
}

std::string CountValue::to_string() const { return u128_to_string(value_); }

std::ostream& operator<<(std::ostream& os, CountValue c) { return os << c.to_string(); }

CountValue max(CountValue a, CountValue b) noexcept { return a < b ? b : a; }

Rational::Rational(raw_type num, raw_type den) : num_(num), den_(den) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const i128 g = gcd128(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> i128 {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("invalid rational: " + std::string(text));
    i128 v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("invalid rational: " + std::string(text));
      v = checked_add(checked_mul(v, 10), ch - '0');
    }
    return neg ? -v : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& rhs) {
  *this = Rational(checked_add(checked_mul(num_, rhs.den_), checked_mul(rhs.num_, den_)), checked_mul(den_, rhs.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = Rational(checked_add(checked_mul(num_, rhs.den_), -checked_mul(rhs.num_, den_)), checked_mul(den_, rhs.den_));
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  // Cross-reduce first to keep intermediates small.
  const i128 g1 = gcd128(num_, rhs.den_);
  const i128 g2 = gcd128(rhs.num_, den_);
  const i128 a = g1 > 1 ? num_ / g1 : num_;
  const i128 d = g1 > 1 ? rhs.den_ / g1 : rhs.den_;
  const i128 c = g2 > 1 ? rhs.num_ / g2 : rhs.num_;
  const i128 b = g2 > 1 ? den_ / g2 : den_;
  *this = Rational(checked_mul(a, c), checked_mul(b, d));
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= Rational(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

std::string Rational::to_string() const {
  std::string s = num_ < 0 ? "-" + u128_to_string(static_cast<u128>(-num_)) : u128_to_string(static_cast<u128>(num_));
  if (den_ != 1) s += "/" + u128_to_string(static_cast<u128>(den_));
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace extremal
