#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "extremal/graph.hpp"

namespace extremal {

// graph6: header byte n+63 (n <= 62) or 126 followed by the 18-bit order in
// three 6-bit groups; then the strict upper triangle packed column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, most significant
// first, zero padded, each group offset by 63.

std::string to_graph6(const Graph& g);

/// Throws ParseError on a malformed header, truncated or oversized payload,
/// nonzero padding, or an order above 64. Also accepts the two-byte header
/// 126, n+63 for n in 63..64.
Graph from_graph6(std::string_view text);

/// Newline-delimited graph6 reader. Blank lines are skipped, a leading
/// ">>graph6<<" marker is tolerated, and errors carry the 1-based line number.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(&in) {}

  std::optional<Graph> next();
  std::size_t line() const noexcept { return line_; }

 private:
  std::istream* in_;
  std::size_t line_ = 0;
};

void write_graph6(std::ostream& out, const Graph& g);

}  // namespace extremal
