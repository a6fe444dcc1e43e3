#include "kstab/graph6.hpp"

#include <stdexcept>

namespace kstab {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) throw std::invalid_argument(std::string("graph6: invalid character '") + c + "'");
  return value;
}

}  // namespace

std::string g6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph g6_decode(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  int n = 0;
  std::size_t pos = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') throw std::invalid_argument("graph6: vertex count exceeds 64");
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated size prefix");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) throw std::invalid_argument("graph6: non-canonical long size prefix");
    pos = 4;
  } else {
    n = sextet(text[0]);
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph6: vertex count " + std::to_string(n) + " unsupported");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    throw std::invalid_argument("graph6: expected " + std::to_string(body) + " body bytes, got " +
                                std::to_string(text.size() - pos));
  }

  Rows rows{};
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = sextet(text[pos + k / 6]);
      if ((value >> (5 - k % 6)) & 1) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  if (body > 0) {
    const int last = sextet(text[pos + body - 1]);
    const int pad = static_cast<int>(body * 6 - bits);
    if (last & ((1 << pad) - 1)) throw std::invalid_argument("graph6: non-zero padding bits");
  }
  return make_graph_unchecked(n, rows);
}

std::vector<Graph> g6_read_all(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(g6_decode(line));
  }
  return out;
}

}  // namespace kstab
