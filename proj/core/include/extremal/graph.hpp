#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace extremal {

using Vertex = int;
using Row = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr Row bit(Vertex v) noexcept { return Row{1} << v; }
constexpr Row low_bits(int n) noexcept { return n >= 64 ? ~Row{0} : (Row{1} << n) - 1; }

struct Edge {
  Vertex u;
  Vertex v;
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Subset of the vertices of some host graph, one bit per vertex.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(Row rest) noexcept : rest_(rest) {}
    constexpr Vertex operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator a, iterator b) noexcept { return a.rest_ == b.rest_; }

   private:
    Row rest_ = 0;
  };

  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(Row bits) noexcept : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) noexcept {
    for (Vertex v : vs) bits_ |= bit(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) noexcept { return VertexSet(low_bits(n)); }
  /// {first, ..., last-1}
  static constexpr VertexSet interval(int first, int last) noexcept {
    return VertexSet(low_bits(last) & ~low_bits(first));
  }

  constexpr Row bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(Vertex v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr Vertex front() const noexcept { return std::countr_zero(bits_); }

  constexpr VertexSet& insert(Vertex v) noexcept {
    bits_ |= bit(v);
    return *this;
  }
  constexpr VertexSet& erase(Vertex v) noexcept {
    bits_ &= ~bit(v);
    return *this;
  }

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) noexcept = default;

 private:
  Row bits_ = 0;
};

/// Undirected simple graph on at most 64 vertices stored as symmetric
/// adjacency bit rows. Values are immutable; every "mutation" returns a new
/// graph.
class Graph {
 public:
  Graph() noexcept = default;

  /// Throws ParameterError on n > 64, endpoints >= n, or loops. Duplicate
  /// edges collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Rows must be symmetric, loop free and confined to the first n bits.
  static Graph from_rows(int n, std::span<const Row> rows);

  int order() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return VertexSet::range(n_); }
  Row row(Vertex v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  VertexSet neighbors(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::size_t edge_count() const noexcept;
  int min_degree() const noexcept;
  int max_degree() const noexcept;
  std::vector<int> degree_sequence() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;

  bool is_independent(VertexSet s) const;
  bool is_clique(VertexSet s) const;
  bool is_connected() const noexcept;

  /// Adding an existing edge returns an equal graph.
  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  Graph complement() const noexcept;
  /// Keeps the vertices of `s`, renumbered 0.. in ascending original order.
  Graph induced(VertexSet s) const;
  /// Vertex v of this graph becomes vertex `image[v]` of the result.
  Graph relabeled(std::span<const Vertex> image) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  void check_vertex(Vertex v) const;
#ifndef NDEBUG
  void assert_valid() const;
#else
  void assert_valid() const {}
#endif

  int n_ = 0;
  std::array<Row, kMaxOrder> rows_{};
};

Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,leaves} with the centre at vertex 0.
Graph star_graph(int leaves);

}  // namespace extremal
