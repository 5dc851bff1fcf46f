#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

namespace {

std::vector<Vertex> iota_vec(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

bool preserves_edges(const Graph& g, const Graph& tmpl, const std::vector<Vertex>& image) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v) && !tmpl.has_edge(image[u], image[v])) return false;
    }
  }
  return true;
}

void injections(const Graph& host, const Graph& pattern, std::vector<Vertex>& image, std::vector<bool>& used,
                std::uint64_t& count) {
  const int i = static_cast<int>(image.size());
  if (i == pattern.order()) {
    if (preserves_edges(pattern, host, image)) ++count;
    return;
  }
  for (int w = 0; w < host.order(); ++w) {
    if (used[w]) continue;
    used[w] = true;
    image.push_back(w);
    injections(host, pattern, image, used, count);
    image.pop_back();
    used[w] = false;
  }
}

}  // namespace

bool hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<Vertex> rest = iota_vec(n);
  rest.erase(rest.begin());
  do {
    bool ok = g.has_edge(0, rest.front()) && g.has_edge(rest.back(), 0);
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.has_edge(rest[i], rest[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

bool hamiltonian_path(const Graph& g, Vertex from, Vertex to) {
  if (from == to) return false;
  std::vector<Vertex> inner;
  for (int v = 0; v < g.order(); ++v) {
    if (v != from && v != to) inner.push_back(v);
  }
  do {
    std::vector<Vertex> path{from};
    path.insert(path.end(), inner.begin(), inner.end());
    path.push_back(to);
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < path.size(); ++i) ok = g.has_edge(path[i], path[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(inner.begin(), inner.end()));
  return false;
}

std::uint64_t labeled_embeddings(const Graph& host, const Graph& pattern) {
  std::vector<Vertex> image;
  std::vector<bool> used(static_cast<std::size_t>(host.order()), false);
  std::uint64_t count = 0;
  injections(host, pattern, image, used, count);
  return count;
}

std::uint64_t cliques(const Graph& g, int k) {
  const int n = g.order();
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) != k) continue;
    bool ok = true;
    for (int u = 0; ok && u < n; ++u) {
      for (int v = u + 1; ok && v < n; ++v) {
        if (((s >> u) & 1U) && ((s >> v) & 1U)) ok = g.has_edge(u, v);
      }
    }
    if (ok) ++count;
  }
  return count;
}

std::uint64_t automorphisms(const Graph& pattern) {
  std::vector<Vertex> p = iota_vec(pattern.order());
  std::uint64_t count = 0;
  do {
    if (preserves_edges(pattern, pattern, p)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

bool spanning_subgraph(const Graph& g, const Graph& tmpl) {
  if (g.order() != tmpl.order()) return false;
  std::vector<Vertex> p = iota_vec(g.order());
  do {
    if (preserves_edges(g, tmpl, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && spanning_subgraph(a, b);
}

std::uint64_t min_code(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> p = iota_vec(n);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    // Vertex i of the relabeled graph is p[i]; pairs in column-major order,
    // first pair most significant.
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(p[i], p[j]) ? 1U : 0U);
    }
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::vector<std::uint64_t> isomorphism_class_codes(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::set<std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<extremal::Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) edges.push_back({pairs[k].first, pairs[k].second});
    }
    seen.insert(min_code(Graph::from_edges(n, edges)));
  }
  return {seen.begin(), seen.end()};
}

int min_path_cover(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> p = iota_vec(n);
  int best = n;
  do {
    int paths = 1;
    for (int i = 0; i + 1 < n; ++i) {
      if (!g.has_edge(p[i], p[i + 1])) ++paths;
    }
    best = std::min(best, paths);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::string graph6(const Graph& g) {
  const int n = g.order();
  std::vector<int> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (std::size_t b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
    out += static_cast<char>(value + 63);
  }
  return out;
}

bool saturated(const Graph& g) {
  if (hamiltonian(g)) return false;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v) && !hamiltonian(g.with_edge(u, v))) return false;
    }
  }
  return true;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<extremal::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace oracle
