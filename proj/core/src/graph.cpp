#include "extremal/graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw ParameterError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
  }
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  Graph g;
  g.n_ = n;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw ParameterError("edge endpoint out of range: (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    if (e.u == e.v) throw ParameterError("loop edge at vertex " + std::to_string(e.u));
    g.rows_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    g.rows_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  g.assert_valid();
  return g;
}

Graph Graph::from_rows(int n, std::span<const Row> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n)) throw ParameterError("row count does not match order");
  Graph g;
  g.n_ = n;
  const Row mask = low_bits(n);
  for (int v = 0; v < n; ++v) {
    const Row r = rows[static_cast<std::size_t>(v)];
    if ((r & ~mask) != 0) throw ParameterError("adjacency row references a vertex >= order");
    if ((r & bit(v)) != 0) throw ParameterError("loop at vertex " + std::to_string(v));
    g.rows_[static_cast<std::size_t>(v)] = r;
  }
  for (int u = 0; u < n; ++u) {
    for (Vertex v : VertexSet(g.rows_[static_cast<std::size_t>(u)])) {
      if ((g.rows_[static_cast<std::size_t>(v)] & bit(u)) == 0) throw ParameterError("adjacency rows are not symmetric");
    }
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

#ifndef NDEBUG
void Graph::assert_valid() const {
  for (int v = 0; v < n_; ++v) {
    const Row r = rows_[static_cast<std::size_t>(v)];
    assert((r & bit(v)) == 0);
    assert((r & ~low_bits(n_)) == 0);
    for (Vertex u : VertexSet(r)) {
      assert(rows_[static_cast<std::size_t>(u)] & bit(v));
      (void)u;
    }
  }
}
#endif

VertexSet Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return VertexSet(row(v));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (row(u) & bit(v)) != 0;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return std::popcount(row(v));
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(std::popcount(row(v)));
  return twice / 2;
}

int Graph::min_degree() const noexcept {
  int best = n_ == 0 ? 0 : kMaxOrder;
  for (int v = 0; v < n_; ++v) best = std::min(best, std::popcount(row(v)));
  return best;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, std::popcount(row(v)));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = std::popcount(row(v));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (Vertex v : VertexSet(row(u) & ~low_bits(u + 1))) out.push_back({u, v});
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (Vertex v : VertexSet(~row(u) & low_bits(n_) & ~low_bits(u + 1))) out.push_back({u, v});
  }
  return out;
}

bool Graph::is_independent(VertexSet s) const {
  if (!s.subset_of(vertices())) throw ParameterError("vertex set exceeds graph order");
  for (Vertex v : s) {
    if ((row(v) & s.bits()) != 0) return false;
  }
  return true;
}

bool Graph::is_clique(VertexSet s) const {
  if (!s.subset_of(vertices())) throw ParameterError("vertex set exceeds graph order");
  for (Vertex v : s) {
    if ((s.bits() & ~bit(v) & ~row(v)) != 0) return false;
  }
  return true;
}

bool Graph::is_connected() const noexcept {
  if (n_ <= 1) return true;
  Row seen = bit(0);
  Row frontier = bit(0);
  while (frontier != 0) {
    Row next = 0;
    for (Vertex v : VertexSet(frontier)) next |= row(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == low_bits(n_);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ParameterError("loop edge at vertex " + std::to_string(u));
  Graph g = *this;
  g.rows_[static_cast<std::size_t>(u)] |= bit(v);
  g.rows_[static_cast<std::size_t>(v)] |= bit(u);
  g.assert_valid();
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.rows_[static_cast<std::size_t>(u)] &= ~bit(v);
  g.rows_[static_cast<std::size_t>(v)] &= ~bit(u);
  g.assert_valid();
  return g;
}

Graph Graph::complement() const noexcept {
  Graph g;
  g.n_ = n_;
  const Row mask = low_bits(n_);
  for (int v = 0; v < n_; ++v) g.rows_[static_cast<std::size_t>(v)] = ~row(v) & mask & ~bit(v);
  g.assert_valid();
  return g;
}

Graph Graph::induced(VertexSet s) const {
  if (s.empty()) throw ParameterError("induced subgraph of an empty vertex set");
  if (!s.subset_of(vertices())) throw ParameterError("vertex set exceeds graph order");
  std::array<Vertex, kMaxOrder> index{};
  int k = 0;
  for (Vertex v : s) index[static_cast<std::size_t>(v)] = k++;
  Graph g;
  g.n_ = k;
  for (Vertex v : s) {
    Row r = 0;
    for (Vertex u : VertexSet(row(v) & s.bits())) r |= bit(index[static_cast<std::size_t>(u)]);
    g.rows_[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])] = r;
  }
  g.assert_valid();
  return g;
}

Graph Graph::relabeled(std::span<const Vertex> image) const {
  if (image.size() != static_cast<std::size_t>(n_)) throw ParameterError("relabeling size does not match order");
  Row used = 0;
  for (Vertex w : image) {
    if (w < 0 || w >= n_ || (used & bit(w)) != 0) throw ParameterError("relabeling is not a permutation");
    used |= bit(w);
  }
  Graph g;
  g.n_ = n_;
  for (int v = 0; v < n_; ++v) {
    Row r = 0;
    for (Vertex u : VertexSet(row(v))) r |= bit(image[static_cast<std::size_t>(u)]);
    g.rows_[static_cast<std::size_t>(image[static_cast<std::size_t>(v)])] = r;
  }
  g.assert_valid();
  return g;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  if (a.n_ != b.n_) return false;
  return std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

Graph complete_graph(int n) {
  if (n < 1 || n > kMaxOrder) throw ParameterError("complete graph order must be in 1..64");
  std::vector<Row> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = low_bits(n) & ~bit(v);
  return Graph::from_rows(n, rows);
}

Graph edgeless_graph(int n) {
  std::vector<Edge> none;
  return Graph::from_edges(n, none);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, es);
}

Graph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int v = 1; v <= leaves; ++v) es.push_back({0, v});
  return Graph::from_edges(leaves + 1, es);
}

}  // namespace extremal
