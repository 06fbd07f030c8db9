#pragma once

#include <string>
#include <vector>

#include "hollow/graph.hpp"

namespace hollow {

// graph6 interchange format: header N(n), then the upper triangle of the
// adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),... packed
// big-endian six bits per byte, each byte offset by 63.

inline std::string graph6_encode(const Graph& g) {
  long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw ParameterError("graph6 encoding limited to order <= 258047 here");
  }
  long long bits = n * (n - 1) / 2;
  long long nbytes = (bits + 5) / 6;
  std::vector<int> body(nbytes, 0);
  long long pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if (g.has_edge(i, j)) body[pos / 6] |= 1 << (5 - pos % 6);
  for (int b : body) out.push_back(static_cast<char>(b + 63));
  return out;
}

inline Graph graph6_decode(const std::string& text) {
  std::size_t pos = 0;
  auto sixbits = [&](const char* what) {
    if (pos >= text.size()) throw ParseError(std::string("truncated ") + what, pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw ParseError(std::string("byte out of graph6 range in ") + what, pos);
    ++pos;
    return static_cast<long long>(c - 63);
  };

  if (text.empty()) throw ParseError("empty graph6 string", 0);
  long long n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    ++pos;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
      throw ParseError("graph6 orders above 258047 are not supported", pos);
    long long a = sixbits("order"), b = sixbits("order"), c = sixbits("order");
    n = (a << 12) | (b << 6) | c;
    if (n <= 62) throw ParseError("non-canonical long order header", 1);
  } else {
    n = sixbits("order");
  }
  if (n < 1) throw ParseError("graph6 order must be at least 1", 0);
  if (n > 100000) throw ParseError("graph6 order too large", 0);

  long long bits = n * (n - 1) / 2;
  std::vector<VertexPair> edges;
  long long done = 0;
  int i = 0, j = 1;
  while (done < bits) {
    std::size_t byte_at = pos;
    long long v = sixbits("edge bits");
    for (int k = 5; k >= 0 && done < bits; --k, ++done) {
      if (v & (1 << k)) edges.push_back({i, j});
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
    // padding bits of the final byte must be zero
    if (done == bits) {
      int pad = static_cast<int>(6 - (bits % 6)) % 6;
      if (pad > 0 && (v & ((1 << pad) - 1)) != 0)
        throw ParseError("nonzero padding bits", byte_at);
    }
  }
  if (pos != text.size()) throw ParseError("trailing bytes after graph6 data", pos);
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace hollow
