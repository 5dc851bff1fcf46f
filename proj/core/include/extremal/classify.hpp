#pragma once

#include <optional>
#include <vector>

#include "extremal/constructions.hpp"
#include "extremal/graph.hpp"

namespace extremal {

/// image[v] is the template vertex that vertex v of the subgraph maps to.
using Bijection = std::vector<Vertex>;

/// A bijection V(g) -> V(tmpl) carrying every edge of g onto an edge of
/// tmpl, or nullopt. Throws ParameterError when the orders differ.
std::optional<Bijection> spanning_subgraph_of(const Graph& g, const Graph& tmpl);

/// Specialised containment test for the clique-plus-independent-set graph:
/// g fits iff some d-set B, independent in g, has at most d neighbours.
std::optional<Bijection> spanning_subgraph_of_h(const Graph& g, int d);

bool is_spanning_embedding(const Graph& g, const Graph& tmpl, const Bijection& image);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Orders above which spanning_subgraph_of_h replaces the generic search for
/// H templates.
inline constexpr int kFastPathMinOrder = 17;

/// H(n,d), H(n,d+1), K'(n,d), K'(n,d+1), H'(n,d), then G'(n,2) when d = 2 or
/// F(n,3) when d = 3. Members may be undefined for small n.
std::vector<FamilyMember> stability_templates(int n, int d);

struct FamilyMatch {
  FamilyMember member;
  Bijection witness;
};

struct ClassificationResult {
  std::vector<FamilyMatch> matches;
  /// Templates skipped because their parameters are out of range at this n.
  std::vector<FamilyMember> skipped;

  bool empty() const noexcept { return matches.empty(); }
  bool contains(FamilyKind kind, int d) const noexcept;
};

/// Tests g against every defined stability template for (n, d).
/// Requires 1 <= d <= floor((n-1)/2).
ClassificationResult classify(const Graph& g, int d);

/// Containment in one template, picking the fast path where it applies.
std::optional<Bijection> contained_in(const Graph& g, const FamilyMember& member);

}  // namespace extremal
