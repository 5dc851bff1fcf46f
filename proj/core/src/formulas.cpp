#include "extremal/formulas.hpp"

#include <string>

#include "extremal/errors.hpp"

namespace extremal {

CountValue falling_factorial(std::int64_t k, int t) {
  if (t < 0) throw ParameterError("falling factorial needs t >= 0");
  if (t == 0) return 1;
  if (k < 0) throw ParameterError("falling factorial needs k >= 0");
  if (k < t) return 0;
  CountValue out = 1;
  for (int i = 0; i < t; ++i) out *= CountValue(static_cast<std::uint64_t>(k - i));
  return out;
}

CountValue binomial(std::int64_t a, int b) {
  if (b < 0) throw ParameterError("binomial needs b >= 0");
  if (b == 0) return 1;
  if (a < b) return 0;
  if (b > a - b) b = static_cast<int>(a - b);
  // C(a, i+1) = C(a, i) * (a-i) / (i+1) stays integral at every step.
  CountValue out = 1;
  for (int i = 0; i < b; ++i) {
    out *= CountValue(static_cast<std::uint64_t>(a - i));
    out /= CountValue(static_cast<std::uint64_t>(i + 1));
  }
  return out;
}

Rational gen_binom(const Rational& a, int b) {
  if (b < 0) throw ParameterError("binomial needs b >= 0");
  if (b == 0) return 1;
  if (a < Rational(b - 1)) return 0;
  Rational out = 1;
  for (int i = 0; i < b; ++i) {
    out *= a - Rational(i);
    out /= Rational(i + 1);
  }
  return out;
}

CountValue extremal_edges(int n, int d) {
  if (n < 0 || d < 0 || d > n) {
    throw ParameterError("extremal_edges needs 0 <= d <= n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
  return binomial(n - d, 2) + CountValue(static_cast<std::uint64_t>(d)) * CountValue(static_cast<std::uint64_t>(d));
}

CountValue extremal_cliques(int n, int x, int k) {
  if (n < 0 || x < 0 || x > n) {
    throw ParameterError("extremal_cliques needs 0 <= x <= n, got n=" + std::to_string(n) + " x=" + std::to_string(x));
  }
  if (k < 2) throw ParameterError("extremal_cliques needs k >= 2");
  return binomial(n - x, k) + CountValue(static_cast<std::uint64_t>(x)) * binomial(x, k - 1);
}

namespace {

void check_degree_range(int n, int d) {
  if (d < 1 || d > max_degree_bound(n)) {
    throw ParameterError("need 1 <= d <= floor((n-1)/2), got n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
}

}  // namespace

CountValue edge_bound(int n, int d) {
  check_degree_range(n, d);
  return max(extremal_edges(n, d), extremal_edges(n, max_degree_bound(n)));
}

CountValue clique_bound(int n, int d, int k) {
  check_degree_range(n, d);
  return max(extremal_cliques(n, d, k), extremal_cliques(n, max_degree_bound(n), k));
}

int degree_threshold(int n) {
  if (n < 3) throw ParameterError("degree_threshold needs n >= 3");
  const int num = n % 2 == 1 ? n + 1 : n + 4;
  return (num + 5) / 6;
}

std::int64_t large_order_threshold(int d, int t) {
  if (d < 1 || t < 3) throw ParameterError("large_order_threshold needs d >= 1 and t >= 3");
  const std::int64_t dd = d;
  const std::int64_t tt = t;
  return 4 * dd * tt + 3 * dd * dd + 5 * tt;
}

CountValue star_count(std::span<const int> degrees, int t) {
  if (t < 2) throw ParameterError("star pattern needs t >= 2");
  CountValue out;
  for (int deg : degrees) out += falling_factorial(deg, t - 1);
  return out;
}

CountValue star_count_unlabeled(std::span<const int> degrees, int t) {
  if (t < 3) throw ParameterError("unlabeled star count needs t >= 3");
  CountValue out;
  for (int deg : degrees) out += binomial(deg, t - 1);
  return out;
}

}  // namespace extremal
