#include "extremal/hamilton.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "extremal/errors.hpp"
#include "extremal/formulas.hpp"

namespace extremal {

namespace {

bool connected_within(const Graph& g, Row set) {
  if (set == 0) return true;
  Row seen = set & (~set + 1);
  Row frontier = seen;
  while (frontier != 0) {
    Row next = 0;
    for (Vertex v : VertexSet(frontier)) next |= g.row(v);
    next &= set;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == set;
}

/// Necessary conditions for a hamiltonian cycle that are cheap to test.
bool cycle_precheck(const Graph& g) {
  const int n = g.order();
  const Row all = low_bits(n);
  Row degree_two = 0;
  for (int v = 0; v < n; ++v) {
    const int deg = std::popcount(g.row(v));
    if (deg < 2) return false;
    if (deg == 2) degree_two |= bit(v);
  }
  if (!connected_within(g, all)) return false;
  // Both edges at a degree-2 vertex are forced; no vertex can take three.
  for (int v = 0; v < n; ++v) {
    if (std::popcount(g.row(v) & degree_two) > 2) return false;
  }
  // Cut vertices.
  for (int v = 0; v < n; ++v) {
    if (!connected_within(g, all & ~bit(v))) return false;
  }
  return true;
}

/// Depth-first extension of a path from a fixed start vertex.
///
/// Cycle mode: the last vertex must be adjacent to the start, and the
/// orientation is fixed by requiring second < last. Path mode: the path must
/// end at `target_`.
///
/// Twins (vertices with equal neighbourhoods up to each other) are
/// interchangeable by an automorphism fixing the anchors, so within each twin
/// class the search only ever enters the lowest-index unvisited member.
class PathSearch {
 public:
  PathSearch(const Graph& g, Vertex start, std::optional<Vertex> target)
      : g_(g), n_(g.order()), all_(low_bits(g.order())), start_(start), target_(target) {
    Row anchors = bit(start);
    if (target_) anchors |= bit(*target_);
    for (int v = 0; v < n_; ++v) {
      if ((anchors & bit(v)) != 0) continue;
      for (int u = 0; u < v; ++u) {
        if ((anchors & bit(u)) != 0) continue;
        const Row diff = (g.row(u) ^ g.row(v)) & ~(bit(u) | bit(v));
        if (diff == 0) smaller_twins_[static_cast<std::size_t>(v)] |= bit(u);
      }
    }
    path_.reserve(static_cast<std::size_t>(n_));
  }

  std::optional<std::vector<Vertex>> run() {
    path_.assign(1, start_);
    if (extend(start_, bit(start_))) return path_;
    return std::nullopt;
  }

 private:
  bool cycle_mode() const noexcept { return !target_.has_value(); }

  bool extend(Vertex cur, Row visited) {
    const Row rest = all_ & ~visited;
    if (rest == 0) {
      if (cycle_mode()) return (g_.row(cur) & bit(start_)) != 0 && cur > path_[1];
      return cur == *target_;
    }

    Row cand = g_.row(cur) & rest;
    if (cand == 0) return false;
    if (cycle_mode() && (g_.row(start_) & rest) == 0) return false;

    // Every unvisited vertex still needs two usable neighbours (one for the
    // path target). A vertex with exactly the minimum pins its edges.
    // At the root of a cycle search cur is the start, so a pinned vertex may
    // be either the second or the last vertex of the cycle.
    const bool at_root = cycle_mode() && cur == start_;
    const Row usable = rest | bit(cur) | (cycle_mode() ? bit(start_) : 0);
    Row forced_next = 0;
    int forced_on_start = 0;
    for (Vertex u : VertexSet(rest)) {
      const Row avail = g_.row(u) & usable;
      const int need = (target_ && u == *target_) ? 1 : 2;
      const int have = std::popcount(avail);
      if (have < need) return false;
      if (have == need) {
        if ((avail & bit(cur)) != 0) forced_next |= bit(u);
        if (cycle_mode() && !at_root && (avail & bit(start_)) != 0) ++forced_on_start;
      }
    }
    if (at_root) {
      if (std::popcount(forced_next) > 2) return false;
      if (std::popcount(forced_next) == 2) cand &= forced_next;
    } else {
      if (std::popcount(forced_next) > 1 || forced_on_start > 1) return false;
      if (forced_next != 0) {
        // The pinned vertex must come next.
        cand &= forced_next;
        if (cand == 0) return false;
      }
    }
    if (!connected_within(g_, rest)) return false;

    if (target_ && rest != bit(*target_)) cand &= ~bit(*target_);

    std::array<Vertex, kMaxOrder> order{};
    int count = 0;
    for (Vertex w : VertexSet(cand)) {
      if ((smaller_twins_[static_cast<std::size_t>(w)] & rest) != 0) continue;
      if (cycle_mode() && path_.size() == 1) {
        // Orientation: some neighbour of start above w must remain to close.
        if ((g_.row(start_) & rest & ~bit(w) & ~low_bits(w + 1)) == 0) continue;
      }
      order[static_cast<std::size_t>(count++)] = w;
    }
    // Fewest onward options first.
    std::sort(order.begin(), order.begin() + count, [&](Vertex a, Vertex b) {
      const int da = std::popcount(g_.row(a) & rest);
      const int db = std::popcount(g_.row(b) & rest);
      return da != db ? da < db : a < b;
    });
    for (int i = 0; i < count; ++i) {
      const Vertex w = order[static_cast<std::size_t>(i)];
      path_.push_back(w);
      if (extend(w, visited | bit(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int n_;
  Row all_;
  Vertex start_;
  std::optional<Vertex> target_;
  std::array<Row, kMaxOrder> smaller_twins_{};
  std::vector<Vertex> path_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Graph& g) {
  if (g.order() < 3) return std::nullopt;
  if (!cycle_precheck(g)) return std::nullopt;
  return PathSearch(g, 0, std::nullopt).run();
}

bool is_hamiltonian(const Graph& g) { return find_hamiltonian_cycle(g).has_value(); }

std::optional<std::vector<Vertex>> hamiltonian_path_between(const Graph& g, Vertex from, Vertex to) {
  const int n = g.order();
  if (from < 0 || to < 0 || from >= n || to >= n) throw ParameterError("path endpoint out of range");
  if (from == to) return std::nullopt;
  if (g.degree(from) < 1 || g.degree(to) < 1) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (v != from && v != to && g.degree(v) < 2) return std::nullopt;
  }
  if (!g.is_connected()) return std::nullopt;
  return PathSearch(g, from, to).run();
}

bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const int n = g.order();
  if (n < 3 || cycle.size() != static_cast<std::size_t>(n)) return false;
  Row seen = 0;
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || (seen & bit(v)) != 0) return false;
    seen |= bit(v);
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> path, Vertex from, Vertex to) {
  const int n = g.order();
  if (path.size() != static_cast<std::size_t>(n) || n == 0) return false;
  if (path.front() != from || path.back() != to) return false;
  Row seen = 0;
  for (Vertex v : path) {
    if (v < 0 || v >= n || (seen & bit(v)) != 0) return false;
    seen |= bit(v);
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) return false;
  }
  return true;
}

Graph saturate(const Graph& g) {
  if (is_hamiltonian(g)) throw ParameterError("saturate: input graph is already hamiltonian");
  // A nonedge rejected once stays rejected: supergraphs of a hamiltonian
  // graph are hamiltonian, so a single lexicographic pass suffices.
  Graph out = g;
  for (const Edge& e : g.non_edges()) {
    Graph candidate = out.with_edge(e.u, e.v);
    if (!is_hamiltonian(candidate)) out = candidate;
  }
  return out;
}

bool is_saturated(const Graph& g) {
  if (is_hamiltonian(g)) return false;
  for (const Edge& e : g.non_edges()) {
    if (!is_hamiltonian(g.with_edge(e.u, e.v))) return false;
  }
  return true;
}

std::vector<Edge> ore_check(const Graph& g) {
  std::vector<Edge> out;
  const int n = g.order();
  for (const Edge& e : g.non_edges()) {
    if (g.degree(e.u) + g.degree(e.v) >= n) out.push_back(e);
  }
  return out;
}

std::optional<PosaCertificate> posa_certificate(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  for (int r = 1; r <= max_degree_bound(n); ++r) {
    VertexSet low;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) <= r) low.insert(v);
    }
    if (low.size() >= r) return PosaCertificate{r, low};
  }
  return std::nullopt;
}

bool validate(const Graph& g, const PosaCertificate& cert) {
  const int n = g.order();
  if (cert.r < 1 || cert.r > max_degree_bound(n)) return false;
  if (!cert.low_degree.subset_of(g.vertices()) || cert.low_degree.size() < cert.r) return false;
  for (Vertex v : cert.low_degree) {
    if (g.degree(v) > cert.r) return false;
  }
  return true;
}

bool path_partition_hypothesis(const Graph& h, int t) {
  const int r = h.order();
  for (const Edge& e : h.non_edges()) {
    if (h.degree(e.u) + h.degree(e.v) < r - t) return false;
  }
  return true;
}

std::optional<PathPartition> path_partition(const Graph& h, int t) {
  if (t < 1) throw ParameterError("path_partition needs t >= 1");
  const int r = h.order();
  if (r == 0) return PathPartition{};
  if (r + t > kMaxOrder) throw ParameterError("path_partition: order + t exceeds 64");
  if (r + t < 3) {
    // Only r = t = 1: a single vertex is its own path.
    return PathPartition{{{0}}};
  }

  std::vector<Row> rows(static_cast<std::size_t>(r + t));
  const Row clique = low_bits(r + t) & ~low_bits(r);
  for (int v = 0; v < r; ++v) rows[static_cast<std::size_t>(v)] = h.row(v) | clique;
  for (int v = r; v < r + t; ++v) rows[static_cast<std::size_t>(v)] = low_bits(r + t) & ~bit(v);
  const Graph augmented = Graph::from_rows(r + t, rows);

  const auto cycle = find_hamiltonian_cycle(augmented);
  if (!cycle) return std::nullopt;

  // Rotate so the cycle starts right after a clique vertex, then cut at
  // every clique vertex.
  std::vector<Vertex> seq = *cycle;
  const auto first_clique = std::find_if(seq.begin(), seq.end(), [&](Vertex v) { return v >= r; });
  std::rotate(seq.begin(), first_clique, seq.end());
  PathPartition out;
  std::vector<Vertex> current;
  for (Vertex v : seq) {
    if (v >= r) {
      if (!current.empty()) out.paths.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(v);
    }
  }
  if (!current.empty()) out.paths.push_back(std::move(current));
  return out;
}

bool validate(const Graph& h, const PathPartition& p) {
  Row seen = 0;
  for (const auto& path : p.paths) {
    if (path.empty()) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const Vertex v = path[i];
      if (v < 0 || v >= h.order() || (seen & bit(v)) != 0) return false;
      seen |= bit(v);
      if (i > 0 && !h.has_edge(path[i - 1], v)) return false;
    }
  }
  return seen == low_bits(h.order());
}

}  // namespace extremal
