#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

/// Pull-based, single-consumer stream of graphs.
class GraphStream {
 public:
  virtual ~GraphStream() = default;
  virtual std::optional<Graph> next() = 0;
};

/// Largest order the internal generator accepts.
inline constexpr int kMaxInternalOrder = 7;

/// One representative per isomorphism class on n vertices: the labeled graph
/// whose upper-triangle bit string (graph6 column order) is lexicographically
/// smallest among all n! relabelings. Yields representatives in increasing
/// bit-string order. Throws ParameterError unless 1 <= n <= 7.
std::unique_ptr<GraphStream> enumerate_nonisomorphic(int n);

/// True iff g is the representative enumerate_nonisomorphic would yield.
bool is_minimal_labeling(const Graph& g);

/// Lazily decodes a graph6 file. Throws std::runtime_error when the file
/// cannot be opened and ParseError (with line number) on a malformed line.
std::unique_ptr<GraphStream> stream_graph6(const std::string& path);
/// Same over a caller-owned stream.
std::unique_ptr<GraphStream> stream_graph6(std::istream& in);

std::unique_ptr<GraphStream> stream_graphs(std::vector<Graph> graphs);

struct StreamFilters {
  int min_degree = 0;
  bool require_nonhamiltonian = false;
  bool require_connected = false;
};

/// Drops graphs failing a filter. Degree and connectivity are checked before
/// hamiltonicity.
std::unique_ptr<GraphStream> apply_filters(std::unique_ptr<GraphStream> in, StreamFilters filters);

std::vector<Graph> collect(GraphStream& stream);

/// Restartable description of where graphs come from. Verification opens one
/// independent stream per worker.
class GraphSource {
 public:
  static GraphSource internal(int n);
  static GraphSource file(std::string path);
  static GraphSource memory(std::vector<Graph> graphs);

  std::unique_ptr<GraphStream> open() const;
  std::string description() const;

 private:
  enum class Kind { Internal, File, Memory };
  Kind kind_ = Kind::Internal;
  int order_ = 0;
  std::string path_;
  std::shared_ptr<const std::vector<Graph>> graphs_;
};

/// Relabeling of g that minimises the upper-triangle bit string among all
/// relabelings placing vertices in non-decreasing degree order. Two graphs
/// are isomorphic iff their canonical forms are equal.
Graph canonical_form(const Graph& g);

/// All isomorphism classes on n+1 vertices, given one representative of every
/// class on n vertices. Output is in canonical form sorted by graph6 string.
std::vector<Graph> extend_classes(std::span<const Graph> classes);

}  // namespace extremal
