#pragma once

#include <optional>
#include <span>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

/// Exact hamiltonicity. Graphs on fewer than 3 vertices have no hamiltonian
/// cycle.
bool is_hamiltonian(const Graph& g);

/// A hamiltonian cycle as a vertex sequence starting at 0 (the closing edge
/// back to 0 is implied), or nullopt when none exists.
std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Graph& g);

/// A hamiltonian path from `from` to `to`, or nullopt. Returns nullopt when
/// from == to.
std::optional<std::vector<Vertex>> hamiltonian_path_between(const Graph& g, Vertex from, Vertex to);

bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle);
bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> path, Vertex from, Vertex to);

/// Adds nonedges in lexicographic (u, v) order whenever the addition keeps
/// the graph nonhamiltonian. Throws ParameterError if g is hamiltonian.
Graph saturate(const Graph& g);

/// Nonhamiltonian, and adding any nonedge creates a hamiltonian cycle.
bool is_saturated(const Graph& g);

/// Every nonedge uv with d(u) + d(v) >= n. Empty on saturated graphs.
std::vector<Edge> ore_check(const Graph& g);

/// r vertices of degree at most r, witnessing Posa's condition.
struct PosaCertificate {
  int r = 0;
  VertexSet low_degree;  ///< every vertex of degree <= r; |low_degree| >= r
};

/// Smallest r in [1, floor((n-1)/2)] with at least r vertices of degree <= r.
/// Pure degree computation; nullopt when n < 3 or no such r exists.
std::optional<PosaCertificate> posa_certificate(const Graph& g);
bool validate(const Graph& g, const PosaCertificate& cert);

/// Vertex-disjoint paths covering every vertex.
struct PathPartition {
  std::vector<std::vector<Vertex>> paths;
};

/// Every nonedge xy satisfies d(x) + d(y) >= order - t.
bool path_partition_hypothesis(const Graph& h, int t);

/// Joins a universal t-clique, finds a hamiltonian cycle and deletes the
/// clique. Under path_partition_hypothesis the result has at most t paths.
/// nullopt only when the augmented graph has no hamiltonian cycle.
std::optional<PathPartition> path_partition(const Graph& h, int t);
bool validate(const Graph& h, const PathPartition& p);

}  // namespace extremal
