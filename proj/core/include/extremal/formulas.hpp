#pragma once

#include <cstdint>
#include <span>

#include "extremal/count_value.hpp"

namespace extremal {

/// Scalar parameters threaded through the bound formulas.
struct ExtremalParams {
  int n = 0;  ///< graph order
  int d = 0;  ///< minimum-degree bound
  int k = 0;  ///< clique order
  int t = 0;  ///< pattern order
  int r = 0;  ///< size of a low-degree vertex set
};

/// floor((n-1)/2): the largest admissible minimum-degree bound.
constexpr int max_degree_bound(int n) noexcept { return (n - 1) / 2; }

/// k(k-1)...(k-t+1); 1 for t = 0 and 0 for 0 <= k < t. Negative k is
/// rejected when t > 0.
CountValue falling_factorial(std::int64_t k, int t);

/// Integer binomial with the polynomial convention: C(a, 0) = 1 for every a,
/// C(a, b) = 0 when a < b (including negative a) for b > 0.
CountValue binomial(std::int64_t a, int b);

/// Generalised binomial over the rationals: 1 when b = 0, otherwise
/// a(a-1)...(a-b+1)/b! when a >= b-1 and 0 below that.
Rational gen_binom(const Rational& a, int b);

/// C(n-d, 2) + d^2, the edge count of the clique-plus-independent-set graph.
/// Requires 0 <= d <= n.
CountValue extremal_edges(int n, int d);

/// C(n-x, k) + x * C(x, k-1), the k-clique count of the same graph.
/// Requires 0 <= x <= n and k >= 2.
CountValue extremal_cliques(int n, int x, int k);

/// max{extremal_edges(n, d), extremal_edges(n, floor((n-1)/2))}.
/// Requires 1 <= d <= floor((n-1)/2).
CountValue edge_bound(int n, int d);

/// max{extremal_cliques(n, d, k), extremal_cliques(n, floor((n-1)/2), k)}.
CountValue clique_bound(int n, int d, int k);

/// Smallest d at which edge_bound(n, d) stops decreasing:
/// ceil((n+1)/6) for odd n, ceil((n+4)/6) for even n. Requires n >= 3.
int degree_threshold(int n);

/// 4dt + 3d^2 + 5t: order above which the clique-plus-independent-set graph
/// maximises copies of every t-vertex pattern. Requires d >= 1, t >= 3.
std::int64_t large_order_threshold(int d, int t);

/// Labeled copies of the star K_{1,t-1}: sum over v of (d(v))_{t-1}.
CountValue star_count(std::span<const int> degrees, int t);

/// Unlabeled copies of K_{1,t-1} for t >= 3: sum over v of C(d(v), t-1).
CountValue star_count_unlabeled(std::span<const int> degrees, int t);

}  // namespace extremal
