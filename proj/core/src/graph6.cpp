#include "extremal/graph6.hpp"

#include <istream>
#include <ostream>
#include <vector>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

constexpr int kOffset = 63;
constexpr int kLongHeader = 126;

std::size_t payload_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(kLongHeader));
    out.push_back(static_cast<char>(((n >> 12) & 0x3F) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 0x3F) + kOffset));
    out.push_back(static_cast<char>((n & 0x3F) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    const Row r = g.row(j);
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((r >> i) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string");
  auto group = [&](std::size_t pos) -> int {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kOffset || c > kLongHeader) throw ParseError("invalid graph6 byte at offset " + std::to_string(pos));
    return c - kOffset;
  };

  int n = 0;
  std::size_t pos = 0;
  const int first = static_cast<unsigned char>(text[0]);
  if (first < kOffset || first > kLongHeader) throw ParseError("invalid graph6 header byte");
  if (first < kLongHeader) {
    n = first - kOffset;
    pos = 1;
  } else if (first == kLongHeader && text.size() >= 2 &&
             (static_cast<unsigned char>(text[1]) == kLongHeader || static_cast<unsigned char>(text[1]) == kLongHeader + 1)) {
    // Two-byte form 126, n+63.
    n = static_cast<unsigned char>(text[1]) - kOffset;
    pos = 2;
  } else {
    if (text.size() < 4) throw ParseError("truncated graph6 header");
    n = (group(1) << 12) | (group(2) << 6) | group(3);
    pos = 4;
  }
  if (n > kMaxOrder) throw ParseError("graph6 order " + std::to_string(n) + " above 64");

  const std::size_t need = payload_bytes(n);
  if (text.size() < pos + need) throw ParseError("truncated graph6 payload");
  if (text.size() > pos + need) throw ParseError("trailing bytes after graph6 payload");

  std::vector<Row> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;  // bit index into the payload
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int g = group(pos + k / 6);
      if ((g >> (5 - static_cast<int>(k % 6))) & 1) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  if (k % 6 != 0) {
    const int g = group(pos + k / 6);
    if ((g & ((1 << (6 - static_cast<int>(k % 6))) - 1)) != 0) throw ParseError("nonzero graph6 padding bits");
  }
  return Graph::from_rows(n, rows);
}

std::optional<Graph> Graph6Reader::next() {
  std::string buf;
  while (std::getline(*in_, buf)) {
    ++line_;
    std::string_view s = buf;
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    constexpr std::string_view marker = ">>graph6<<";
    if (s.substr(0, marker.size()) == marker) s.remove_prefix(marker.size());
    if (s.empty()) continue;
    try {
      return from_graph6(s);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_);
    } catch (const ParameterError& e) {
      throw ParseError(e.what(), line_);
    }
  }
  return std::nullopt;
}

void write_graph6(std::ostream& out, const Graph& g) { out << to_graph6(g) << '\n'; }

}  // namespace extremal
