#include "extremal/counting.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "extremal/errors.hpp"
#include "extremal/formulas.hpp"

namespace extremal {

namespace {

using u128 = unsigned __int128;

/// Pattern vertices in a greedy connected order: each next vertex has the
/// most edges back to the already placed ones (ties: larger degree, then
/// smaller index).
std::vector<Vertex> embedding_order(const Graph& pattern, Row vertices) {
  std::vector<Vertex> order;
  Row placed = 0;
  while ((vertices & ~placed) != 0) {
    Vertex best = -1;
    int best_back = -1;
    int best_deg = -1;
    for (Vertex v : VertexSet(vertices & ~placed)) {
      const int back = std::popcount(pattern.row(v) & placed);
      const int deg = std::popcount(pattern.row(v));
      if (back > best_back || (back == best_back && deg > best_deg)) {
        best = v;
        best_back = back;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

class EmbeddingCounter {
 public:
  EmbeddingCounter(const Graph& host, const Graph& pattern, const std::vector<Vertex>& order)
      : host_(host), depth_(static_cast<int>(order.size())) {
    std::array<int, kMaxOrder> position{};
    for (int i = 0; i < depth_; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < depth_; ++i) {
      const Vertex p = order[static_cast<std::size_t>(i)];
      Row back = 0;
      for (Vertex q : VertexSet(pattern.row(p))) {
        const int j = position[static_cast<std::size_t>(q)];
        if (j < i) back |= bit(j);
      }
      back_[static_cast<std::size_t>(i)] = back;
      Row eligible = 0;
      const int need = pattern.degree(p);
      for (int v = 0; v < host.order(); ++v) {
        if (host.degree(v) >= need) eligible |= bit(v);
      }
      eligible_[static_cast<std::size_t>(i)] = eligible;
    }
  }

  u128 count() {
    if (depth_ == 0) return 1;
    return extend(0, 0);
  }

 private:
  u128 extend(int i, Row used) {
    Row cand = eligible_[static_cast<std::size_t>(i)] & ~used;
    for (Vertex j : VertexSet(back_[static_cast<std::size_t>(i)])) cand &= host_.row(image_[static_cast<std::size_t>(j)]);
    if (i + 1 == depth_) return static_cast<u128>(std::popcount(cand));
    u128 total = 0;
    for (Vertex v : VertexSet(cand)) {
      image_[static_cast<std::size_t>(i)] = v;
      total += extend(i + 1, used | bit(v));
    }
    return total;
  }

  const Graph& host_;
  int depth_;
  std::array<Row, kMaxOrder> back_{};
  std::array<Row, kMaxOrder> eligible_{};
  std::array<Vertex, kMaxOrder> image_{};
};

u128 count_cliques_from(const Graph& g, Row cand, int remaining) {
  if (remaining == 1) return static_cast<u128>(std::popcount(cand));
  u128 total = 0;
  for (Vertex v : VertexSet(cand)) total += count_cliques_from(g, cand & g.row(v) & ~low_bits(v + 1), remaining - 1);
  return total;
}

}  // namespace

CountValue count_labeled_embeddings(const Graph& host, const Graph& pattern) {
  const int n = host.order();
  const int t = pattern.order();
  if (t > n) throw ParameterError("pattern has more vertices than host");
  Row non_isolated = 0;
  for (int v = 0; v < t; ++v) {
    if (pattern.row(v) != 0) non_isolated |= bit(v);
  }
  const int core = std::popcount(non_isolated);
  const auto order = embedding_order(pattern, non_isolated);
  EmbeddingCounter counter(host, pattern, order);
  const CountValue core_count = CountValue::from_raw(counter.count());
  // Isolated pattern vertices go anywhere unused: (n - core)_(t - core).
  return core_count * falling_factorial(n - core, t - core);
}

CountValue count_cliques(const Graph& g, int k) {
  if (k < 1) throw ParameterError("count_cliques needs k >= 1");
  if (k > g.order()) return 0;
  return CountValue::from_raw(count_cliques_from(g, low_bits(g.order()), k));
}

CountValue automorphism_count(const Graph& pattern) {
  if (pattern.order() > kMaxAutomorphismOrder) {
    throw ParameterError("automorphism_count supports patterns up to " + std::to_string(kMaxAutomorphismOrder) +
                         " vertices");
  }
  // An edge-preserving bijection of a finite graph onto itself maps E onto E.
  return count_labeled_embeddings(pattern, pattern);
}

CountValue EmbeddingCount::unlabeled() const {
  if (labeled % pattern_automorphisms != CountValue(0)) {
    throw std::logic_error("labeled count " + labeled.to_string() + " not divisible by |Aut| " +
                           pattern_automorphisms.to_string());
  }
  return labeled / pattern_automorphisms;
}

EmbeddingCount count_embeddings(const Graph& host, const Graph& pattern) {
  return EmbeddingCount{count_labeled_embeddings(host, pattern), pattern.order(), automorphism_count(pattern)};
}

CountValue count_unlabeled(const Graph& host, const Graph& pattern) { return count_embeddings(host, pattern).unlabeled(); }

}  // namespace extremal
