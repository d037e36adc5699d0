#include <string>

#include "lapspread/error.hpp"
#include "lapspread/graph.hpp"

// graph6 short form: byte n+63, then the upper triangle in column-major
// order x(0,1) x(0,2) x(1,2) x(0,3) ..., six bits per byte (MSB first),
// each byte offset by 63, final byte zero-padded.

namespace lapspread {

namespace {
constexpr int kOffset = 63;
constexpr int kMaxShortN = 62;

std::size_t body_length(int n) {
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}
}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (unsigned char c : text)
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside [63,126]");

  const int n = static_cast<unsigned char>(text[0]) - kOffset;
  if (n > kMaxShortN) throw ParseError("graph6: long form (n > 62) not supported");
  if (n < 2) throw ParseError("graph6: graphs need at least 2 vertices");
  if (text.size() != 1 + body_length(n))
    throw ParseError("graph6: expected " + std::to_string(1 + body_length(n)) + " bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size()));

  SimpleGraph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = static_cast<unsigned char>(text[1 + bit / 6]) - kOffset;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  if (bit % 6 != 0) {
    int last = static_cast<unsigned char>(text.back()) - kOffset;
    int pad_bits = 6 - static_cast<int>(bit % 6);
    if (last & ((1 << pad_bits) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::string emit_graph6(const SimpleGraph& g) {
  const int n = g.n();
  if (n > kMaxShortN) throw DomainError("graph6: long form (n > 62) not supported");
  std::string out(1 + body_length(n), static_cast<char>(kOffset));
  out[0] = static_cast<char>(n + kOffset);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
  return out;
}

}  // namespace lapspread
