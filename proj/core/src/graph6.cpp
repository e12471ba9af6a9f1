#include <string>

#include "tfsub/errors.hpp"
#include "tfsub/io.hpp"

namespace tfsub {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::size_t kMaxOrder = 20000;

std::size_t read_byte(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError(pos, "graph6 data ends early");
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError(pos, "graph6 byte outside 63..126");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (text.ends_with("\r\n")) {
    text.remove_suffix(2);
  } else if (text.ends_with('\n')) {
    text.remove_suffix(1);
  }

  std::size_t n = 0;
  if (pos >= text.size()) throw ParseError(pos, "graph6 data is empty");
  if (static_cast<unsigned char>(text[pos]) != 126) {
    n = read_byte(text, pos++);
  } else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
    const std::size_t start = pos;
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | read_byte(text, pos++);
    if (n <= 258047) throw ParseError(start, "graph6 order uses a non-canonical 8-byte encoding");
  } else {
    const std::size_t start = pos;
    pos += 1;
    for (int k = 0; k < 3; ++k) n = (n << 6) | read_byte(text, pos++);
    if (n <= 62) throw ParseError(start, "graph6 order uses a non-canonical 4-byte encoding");
  }
  if (n > kMaxOrder) throw ParseError(0, "graph6 order " + std::to_string(n) + " exceeds supported maximum");

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError(std::min(text.size(), pos + bytes),
                     "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(bytes));
  }
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t byte = read_byte(text, pos + k / 6);
      if (byte & (std::size_t{1} << (5 - k % 6))) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = read_byte(text, pos + bytes - 1);
    const std::size_t pad_mask = (std::size_t{1} << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw ParseError(pos + bytes - 1, "graph6 padding bits are not zero");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace tfsub
