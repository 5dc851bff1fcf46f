#include "extremal/classify.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "extremal/errors.hpp"
#include "extremal/formulas.hpp"

namespace extremal {

namespace {

std::vector<int> sorted_degrees_desc(const Graph& g) {
  auto d = g.degree_sequence();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

/// Backtracking over bijections. Subgraph vertices are placed in a greedy
/// connected order; a vertex of degree a may only go to a template vertex of
/// degree >= a, tried in ascending template degree.
class SpanningSearch {
 public:
  SpanningSearch(const Graph& g, const Graph& tmpl) : g_(g), t_(tmpl), n_(g.order()) {
    Row placed = 0;
    std::array<int, kMaxOrder> position{};
    for (int i = 0; i < n_; ++i) {
      Vertex best = -1;
      int best_back = -1;
      int best_deg = -1;
      for (Vertex v : VertexSet(low_bits(n_) & ~placed)) {
        const int back = std::popcount(g.row(v) & placed);
        const int deg = g.degree(v);
        if (back > best_back || (back == best_back && deg > best_deg)) {
          best = v;
          best_back = back;
          best_deg = deg;
        }
      }
      order_[static_cast<std::size_t>(i)] = best;
      position[static_cast<std::size_t>(best)] = i;
      placed |= bit(best);
    }
    for (int i = 0; i < n_; ++i) {
      const Vertex v = order_[static_cast<std::size_t>(i)];
      Row back = 0;
      for (Vertex u : VertexSet(g.row(v))) {
        if (position[static_cast<std::size_t>(u)] < i) back |= bit(u);
      }
      back_[static_cast<std::size_t>(i)] = back;
      Row eligible = 0;
      for (int w = 0; w < n_; ++w) {
        if (tmpl.degree(w) >= g.degree(v)) eligible |= bit(w);
      }
      eligible_[static_cast<std::size_t>(i)] = eligible;
    }
    for (int w = 0; w < n_; ++w) by_degree_.push_back(w);
    std::stable_sort(by_degree_.begin(), by_degree_.end(),
                     [&](Vertex a, Vertex b) { return tmpl.degree(a) < tmpl.degree(b); });
    image_.assign(static_cast<std::size_t>(n_), -1);
  }

  std::optional<Bijection> run() {
    if (extend(0, 0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(int i, Row used) {
    if (i == n_) return true;
    const Vertex v = order_[static_cast<std::size_t>(i)];
    Row cand = eligible_[static_cast<std::size_t>(i)] & ~used;
    for (Vertex u : VertexSet(back_[static_cast<std::size_t>(i)])) cand &= t_.row(image_[static_cast<std::size_t>(u)]);
    if (cand == 0) return false;
    for (Vertex w : by_degree_) {
      if ((cand & bit(w)) == 0) continue;
      image_[static_cast<std::size_t>(v)] = w;
      if (extend(i + 1, used | bit(w))) return true;
    }
    image_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& t_;
  int n_;
  std::array<Vertex, kMaxOrder> order_{};
  std::array<Row, kMaxOrder> back_{};
  std::array<Row, kMaxOrder> eligible_{};
  std::vector<Vertex> by_degree_;
  Bijection image_;
};

}  // namespace

std::optional<Bijection> spanning_subgraph_of(const Graph& g, const Graph& tmpl) {
  if (g.order() != tmpl.order()) throw ParameterError("spanning containment needs equal orders");
  if (g.edge_count() > tmpl.edge_count()) return std::nullopt;
  const auto dg = sorted_degrees_desc(g);
  const auto dt = sorted_degrees_desc(tmpl);
  for (std::size_t i = 0; i < dg.size(); ++i) {
    if (dg[i] > dt[i]) return std::nullopt;
  }
  return SpanningSearch(g, tmpl).run();
}

std::optional<Bijection> spanning_subgraph_of_h(const Graph& g, int d) {
  const int n = g.order();
  if (!family_defined(FamilyKind::H, n, d)) throw ParameterError("H template undefined for these parameters");
  // B maps onto the d added vertices, so its members have degree <= d.
  std::vector<Vertex> low;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) <= d) low.push_back(v);
  }
  if (static_cast<int>(low.size()) < d) return std::nullopt;

  std::vector<int> pick(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pick[static_cast<std::size_t>(i)] = i;
  const int m = static_cast<int>(low.size());
  while (true) {
    Row b = 0;
    for (int i : pick) b |= bit(low[static_cast<std::size_t>(i)]);
    Row nb = 0;
    for (Vertex v : VertexSet(b)) nb |= g.row(v);
    if ((nb & b) == 0 && std::popcount(nb) <= d) {
      // Attachment set: N(B) padded with the lowest other vertices.
      Row attach = nb;
      for (int v = 0; v < n && std::popcount(attach) < d; ++v) {
        if (((b | attach) & bit(v)) == 0) attach |= bit(v);
      }
      Bijection image(static_cast<std::size_t>(n), -1);
      int next_attach = 0;
      int next_clique = d;
      int next_added = n - d;
      for (int v = 0; v < n; ++v) {
        if ((b & bit(v)) != 0) {
          image[static_cast<std::size_t>(v)] = next_added++;
        } else if ((attach & bit(v)) != 0) {
          image[static_cast<std::size_t>(v)] = next_attach++;
        } else {
          image[static_cast<std::size_t>(v)] = next_clique++;
        }
      }
      return image;
    }
    // Next d-combination of [0, m).
    int i = d - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - d + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return std::nullopt;
}

bool is_spanning_embedding(const Graph& g, const Graph& tmpl, const Bijection& image) {
  const int n = g.order();
  if (tmpl.order() != n || image.size() != static_cast<std::size_t>(n)) return false;
  Row used = 0;
  for (Vertex w : image) {
    if (w < 0 || w >= n || (used & bit(w)) != 0) return false;
    used |= bit(w);
  }
  for (const Edge& e : g.edges()) {
    if (!tmpl.has_edge(image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)])) return false;
  }
  return true;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (sorted_degrees_desc(a) != sorted_degrees_desc(b)) return false;
  return spanning_subgraph_of(a, b).has_value();
}

std::vector<FamilyMember> stability_templates(int n, int d) {
  std::vector<FamilyMember> out = {
      {FamilyKind::H, n, d},      {FamilyKind::H, n, d + 1},      {FamilyKind::Kprime, n, d},
      {FamilyKind::Kprime, n, d + 1}, {FamilyKind::Hprime, n, d},
  };
  if (d == 2) out.push_back({FamilyKind::Gprime2, n, 2});
  if (d == 3) out.push_back({FamilyKind::F3, n, 3});
  return out;
}

bool ClassificationResult::contains(FamilyKind kind, int d) const noexcept {
  return std::any_of(matches.begin(), matches.end(),
                     [&](const FamilyMatch& m) { return m.member.kind == kind && m.member.d == d; });
}

std::optional<Bijection> contained_in(const Graph& g, const FamilyMember& member) {
  if (member.kind == FamilyKind::H && g.order() >= kFastPathMinOrder) return spanning_subgraph_of_h(g, member.d);
  return spanning_subgraph_of(g, build_family(member));
}

ClassificationResult classify(const Graph& g, int d) {
  const int n = g.order();
  if (d < 1 || d > max_degree_bound(n)) throw ParameterError("classify needs 1 <= d <= floor((n-1)/2)");
  ClassificationResult out;
  for (const FamilyMember& m : stability_templates(n, d)) {
    if (!family_defined(m.kind, m.n, m.d)) {
      out.skipped.push_back(m);
      continue;
    }
    if (auto w = contained_in(g, m)) out.matches.push_back({m, std::move(*w)});
  }
  return out;
}

}  // namespace extremal
