#include "extremal/enumerate.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>

#include "extremal/errors.hpp"
#include "extremal/graph6.hpp"
#include "extremal/hamilton.hpp"

namespace extremal {

namespace {

/// Column j of the relabeled graph: bit i set iff image[i] ~ w, for i < j.
Row column_of(const Graph& g, const std::array<Vertex, kMaxOrder>& image, int j, Vertex w) {
  Row col = 0;
  const Row rw = g.row(w);
  for (int i = 0; i < j; ++i) {
    if ((rw >> image[static_cast<std::size_t>(i)]) & 1U) col |= bit(i);
  }
  return col;
}

/// <0, 0, >0 comparing two columns as bit strings read from row 0 upward.
int compare_columns(Row a, Row b) {
  const Row diff = a ^ b;
  if (diff == 0) return 0;
  return (a & (diff & (~diff + 1))) != 0 ? 1 : -1;
}

/// Searches for a relabeling whose bit string is strictly smaller than g's
/// own, extending the permutation one position (one column) at a time.
class SmallerLabeling {
 public:
  explicit SmallerLabeling(const Graph& g) : g_(g), n_(g.order()) {}

  bool exists() { return search(0, 0); }

 private:
  bool search(int j, Row used) {
    if (j == n_) return false;
    const Row own = g_.row(j) & low_bits(j);
    for (Vertex w : VertexSet(low_bits(n_) & ~used)) {
      const int cmp = compare_columns(column_of(g_, image_, j, w), own);
      if (cmp > 0) continue;
      if (cmp < 0) return true;
      image_[static_cast<std::size_t>(j)] = w;
      if (search(j + 1, used | bit(w))) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::array<Vertex, kMaxOrder> image_{};
};

class InternalEnumeration final : public GraphStream {
 public:
  explicit InternalEnumeration(int n) : n_(n) {
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) pairs_.push_back({i, j});
    }
    limit_ = std::uint64_t{1} << pairs_.size();
  }

  std::optional<Graph> next() override {
    const std::size_t m = pairs_.size();
    while (code_ < limit_) {
      const std::uint64_t code = code_++;
      // Pair 0 is the most significant bit, so numeric order is string order.
      std::array<Row, kMaxOrder> rows{};
      for (std::size_t k = 0; k < m; ++k) {
        if ((code >> (m - 1 - k)) & 1U) {
          rows[static_cast<std::size_t>(pairs_[k].u)] |= bit(pairs_[k].v);
          rows[static_cast<std::size_t>(pairs_[k].v)] |= bit(pairs_[k].u);
        }
      }
      Graph g = Graph::from_rows(n_, std::span<const Row>(rows.data(), static_cast<std::size_t>(n_)));
      if (!SmallerLabeling(g).exists()) return g;
    }
    return std::nullopt;
  }

 private:
  int n_;
  std::vector<Edge> pairs_;
  std::uint64_t code_ = 0;
  std::uint64_t limit_ = 0;
};

class Graph6Stream final : public GraphStream {
 public:
  explicit Graph6Stream(std::istream& in) : reader_(in) {}
  explicit Graph6Stream(std::unique_ptr<std::istream> owned) : owned_(std::move(owned)), reader_(*owned_) {}

  std::optional<Graph> next() override { return reader_.next(); }

 private:
  std::unique_ptr<std::istream> owned_;
  Graph6Reader reader_;
};

class VectorStream final : public GraphStream {
 public:
  explicit VectorStream(std::shared_ptr<const std::vector<Graph>> graphs) : graphs_(std::move(graphs)) {}

  std::optional<Graph> next() override {
    if (pos_ >= graphs_->size()) return std::nullopt;
    return (*graphs_)[pos_++];
  }

 private:
  std::shared_ptr<const std::vector<Graph>> graphs_;
  std::size_t pos_ = 0;
};

class FilteredStream final : public GraphStream {
 public:
  FilteredStream(std::unique_ptr<GraphStream> in, StreamFilters f) : in_(std::move(in)), f_(f) {}

  std::optional<Graph> next() override {
    while (auto g = in_->next()) {
      if (g->order() > 0 && g->min_degree() < f_.min_degree) continue;
      if (f_.require_connected && !g->is_connected()) continue;
      if (f_.require_nonhamiltonian && is_hamiltonian(*g)) continue;
      return g;
    }
    return std::nullopt;
  }

 private:
  std::unique_ptr<GraphStream> in_;
  StreamFilters f_;
};

/// Minimum bit string over relabelings that list vertices by non-decreasing
/// degree. The restriction is isomorphism invariant, so the minimum is a
/// canonical form.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    std::array<int, kMaxOrder> degs{};
    for (int v = 0; v < n_; ++v) degs[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<int> sorted(degs.begin(), degs.begin() + n_);
    std::sort(sorted.begin(), sorted.end());
    for (int a = 0; a < n_; ++a) {
      for (int v = 0; v < n_; ++v) {
        if (degs[static_cast<std::size_t>(v)] == sorted[static_cast<std::size_t>(a)]) slot_[static_cast<std::size_t>(a)] |= bit(v);
      }
    }
  }

  Graph run() {
    search(0, 0);
    std::vector<Vertex> relabel(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a) relabel[static_cast<std::size_t>(best_image_[static_cast<std::size_t>(a)])] = a;
    return g_.relabeled(relabel);
  }

 private:
  // Compares cur[0..j] against best[0..j].
  int compare_prefix(int j) const {
    for (int c = 0; c <= j; ++c) {
      const int cmp = compare_columns(cur_[static_cast<std::size_t>(c)], best_[static_cast<std::size_t>(c)]);
      if (cmp != 0) return cmp;
    }
    return 0;
  }

  void search(int j, Row used) {
    if (j == n_) {
      if (!have_best_ || compare_prefix(n_ - 1) < 0) {
        best_ = cur_;
        best_image_ = image_;
        have_best_ = true;
      }
      return;
    }
    for (Vertex w : VertexSet(slot_[static_cast<std::size_t>(j)] & ~used)) {
      cur_[static_cast<std::size_t>(j)] = column_of(g_, image_, j, w);
      if (have_best_ && compare_prefix(j) > 0) continue;
      image_[static_cast<std::size_t>(j)] = w;
      search(j + 1, used | bit(w));
    }
  }

  const Graph& g_;
  int n_;
  std::array<Row, kMaxOrder> slot_{};
  std::array<Row, kMaxOrder> cur_{};
  std::array<Row, kMaxOrder> best_{};
  std::array<Vertex, kMaxOrder> image_{};
  std::array<Vertex, kMaxOrder> best_image_{};
  bool have_best_ = false;
};

}  // namespace

std::unique_ptr<GraphStream> enumerate_nonisomorphic(int n) {
  if (n < 1 || n > kMaxInternalOrder) {
    throw ParameterError("internal enumeration supports 1 <= n <= " + std::to_string(kMaxInternalOrder) +
                         "; supply a graph6 file for larger orders");
  }
  return std::make_unique<InternalEnumeration>(n);
}

bool is_minimal_labeling(const Graph& g) { return !SmallerLabeling(g).exists(); }

std::unique_ptr<GraphStream> stream_graph6(const std::string& path) {
  auto file = std::make_unique<std::ifstream>(path);
  if (!*file) throw std::runtime_error("cannot open graph6 file: " + path);
  return std::make_unique<Graph6Stream>(std::move(file));
}

std::unique_ptr<GraphStream> stream_graph6(std::istream& in) { return std::make_unique<Graph6Stream>(in); }

std::unique_ptr<GraphStream> stream_graphs(std::vector<Graph> graphs) {
  return std::make_unique<VectorStream>(std::make_shared<const std::vector<Graph>>(std::move(graphs)));
}

std::unique_ptr<GraphStream> apply_filters(std::unique_ptr<GraphStream> in, StreamFilters filters) {
  return std::make_unique<FilteredStream>(std::move(in), filters);
}

std::vector<Graph> collect(GraphStream& stream) {
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

GraphSource GraphSource::internal(int n) {
  if (n < 1 || n > kMaxInternalOrder) {
    throw ParameterError("internal enumeration supports 1 <= n <= " + std::to_string(kMaxInternalOrder));
  }
  GraphSource s;
  s.kind_ = Kind::Internal;
  s.order_ = n;
  return s;
}

GraphSource GraphSource::file(std::string path) {
  GraphSource s;
  s.kind_ = Kind::File;
  s.path_ = std::move(path);
  return s;
}

GraphSource GraphSource::memory(std::vector<Graph> graphs) {
  GraphSource s;
  s.kind_ = Kind::Memory;
  s.graphs_ = std::make_shared<const std::vector<Graph>>(std::move(graphs));
  return s;
}

std::unique_ptr<GraphStream> GraphSource::open() const {
  switch (kind_) {
    case Kind::Internal: return enumerate_nonisomorphic(order_);
    case Kind::File: return stream_graph6(path_);
    case Kind::Memory: return std::make_unique<VectorStream>(graphs_);
  }
  throw std::logic_error("unknown graph source");
}

std::string GraphSource::description() const {
  switch (kind_) {
    case Kind::Internal: return "internal:" + std::to_string(order_);
    case Kind::File: return "file:" + path_;
    case Kind::Memory: return "memory:" + std::to_string(graphs_->size());
  }
  return "?";
}

Graph canonical_form(const Graph& g) {
  if (g.order() == 0) return g;
  return CanonicalSearch(g).run();
}

std::vector<Graph> extend_classes(std::span<const Graph> classes) {
  std::set<std::string> seen;
  for (const Graph& g : classes) {
    const int n = g.order();
    if (n + 1 > kMaxOrder) throw ParameterError("extension would exceed 64 vertices");
    if (n > 20) throw ParameterError("extend_classes enumerates 2^n neighbourhoods; n > 20 is not supported");
    std::vector<Row> rows(static_cast<std::size_t>(n + 1));
    for (Row s = 0; s < (Row{1} << n); ++s) {
      for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = g.row(v) | (((s >> v) & 1U) << n);
      rows[static_cast<std::size_t>(n)] = s;
      seen.insert(to_graph6(canonical_form(Graph::from_rows(n + 1, rows))));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(from_graph6(s));
  return out;
}

}  // namespace extremal
