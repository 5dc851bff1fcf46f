#pragma once

#include "extremal/count_value.hpp"
#include "extremal/graph.hpp"

namespace extremal {

/// N(G, F): injections V(F) -> V(G) carrying every edge of F onto an edge of
/// G (non-induced). Throws ParameterError if F has more vertices than G.
CountValue count_labeled_embeddings(const Graph& host, const Graph& pattern);

/// Number of k-vertex subsets inducing a complete graph; k >= 1.
CountValue count_cliques(const Graph& g, int k);

/// Largest pattern order accepted by automorphism_count.
inline constexpr int kMaxAutomorphismOrder = 10;

/// |Aut(F)|; throws ParameterError for patterns above kMaxAutomorphismOrder.
CountValue automorphism_count(const Graph& pattern);

/// Labeled counts together with the pattern's automorphism count.
struct EmbeddingCount {
  CountValue labeled;
  int pattern_order = 0;
  CountValue pattern_automorphisms;

  /// labeled / |Aut|; throws std::logic_error on a nonzero remainder.
  CountValue unlabeled() const;
};

EmbeddingCount count_embeddings(const Graph& host, const Graph& pattern);

/// Unlabeled copies of `pattern` in `host`.
CountValue count_unlabeled(const Graph& host, const Graph& pattern);

}  // namespace extremal
