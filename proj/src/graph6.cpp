#include "listdist/graph6.hpp"

#include <algorithm>

namespace listdist {

namespace {
constexpr int kLo = 63;   // '?'
constexpr int kHi = 126;  // '~'
}  // namespace

Graph parse_graph6(const std::string& line) {
  std::string s = line;
  if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.empty()) fail(ErrorCode::InvalidGraph6, "empty input");
  for (char c : s)
    if (c < kLo || c > kHi) fail(ErrorCode::InvalidGraph6, "byte out of printable range");

  std::size_t pos = 0;
  long n;
  if (s[pos] != kHi) {
    n = s[pos] - kLo;
    pos += 1;
  } else if (s.size() >= 4 && s[pos + 1] != kHi) {
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[pos + i] - kLo);
    pos += 4;
  } else if (s.size() >= 8) {
    n = 0;
    for (int i = 2; i <= 7; ++i) n = (n << 6) | (s[pos + i] - kLo);
    pos += 8;
  } else {
    fail(ErrorCode::InvalidGraph6, "truncated size header");
  }
  if (n < 0 || n >= (1 << 16)) fail(ErrorCode::InvalidGraph6, "vertex count out of range");

  long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != need) fail(ErrorCode::InvalidGraph6, "bad body length");

  std::vector<Edge> edges;
  long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = s[pos + bit / 6] - kLo;
      if (byte & (1 << (5 - bit % 6))) edges.push_back({i, j});
    }
  // padding bits must be zero
  for (long b = bits; b < static_cast<long>(need) * 6; ++b) {
    int byte = s[pos + b / 6] - kLo;
    if (byte & (1 << (5 - b % 6))) fail(ErrorCode::InvalidGraph6, "nonzero padding");
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kLo));
  } else {
    out.push_back(static_cast<char>(kHi));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kLo));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kLo));
    out.push_back(static_cast<char>((n & 0x3f) + kLo));
  }
  long bits = static_cast<long>(n) * (n - 1) / 2;
  std::vector<char> bit(bits, 0);
  long idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if (g.has_edge(i, j)) bit[idx] = 1;
  for (long b = 0; b < bits; b += 6) {
    int byte = 0;
    for (int o = 0; o < 6; ++o)
      if (b + o < bits && bit[b + o]) byte |= 1 << (5 - o);
    out.push_back(static_cast<char>(byte + kLo));
  }
  return out;
}

}  // namespace listdist
