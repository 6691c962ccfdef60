#include "oldsets/graph6.hpp"

#include "oldsets/errors.hpp"

namespace oldsets {

namespace {

constexpr int kBias = 63;

int sextet(char c, std::size_t pos) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) {
    throw Graph6Error("character " + std::to_string(u) + " at offset " + std::to_string(pos) +
                      " is outside 63..126");
  }
  return u - kBias;
}

// Size field; advances `pos` past it.
std::size_t decode_order(std::string_view rec, std::size_t& pos) {
  if (rec.empty()) throw Graph6Error("empty graph6 record");
  if (rec[0] != '~') {
    pos = 1;
    return static_cast<std::size_t>(sextet(rec[0], 0));
  }
  std::size_t width = 3;
  pos = 1;
  if (rec.size() > 1 && rec[1] == '~') {
    width = 6;
    pos = 2;
  }
  if (rec.size() < pos + width) throw Graph6Error("truncated multi-byte size field");
  std::size_t n = 0;
  for (std::size_t i = 0; i < width; ++i, ++pos) {
    const int s = sextet(rec[pos], pos);
    n = (n << 6) | static_cast<std::size_t>(s);
  }
  // The long forms are only valid for orders the shorter form cannot hold.
  if ((width == 3 && n < 63) || (width == 6 && n < 258048)) {
    throw Graph6Error("non-minimal size field for order " + std::to_string(n));
  }
  return n;
}

}  // namespace

Graph parse_graph6(std::string_view rec) {
  std::size_t pos = 0;
  const std::size_t n = decode_order(rec, pos);
  if (n > kMaxOrder) {
    throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds supported maximum " +
                      std::to_string(kMaxOrder));
  }
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nchars = (nbits + 5) / 6;
  if (rec.size() - pos < nchars) throw Graph6Error("graph6 body too short");
  if (rec.size() - pos > nchars) throw Graph6Error("trailing characters after graph6 body");

  std::vector<VertexSet> rows(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int s = sextet(rec[pos + bit / 6], pos + bit / 6);
      if ((s >> (5 - bit % 6)) & 1) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  }
  if (nchars > 0) {
    const int last = sextet(rec[pos + nchars - 1], pos + nchars - 1);
    const std::size_t used = nbits - (nchars - 1) * 6;
    if ((last & ((1 << (6 - used)) - 1)) != 0) throw Graph6Error("nonzero padding bits");
  }
  return Graph::from_rows(rows);
}

std::string to_graph6(const Graph& g) {
  const unsigned n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.row(i).contains(j) ? 1 : 0);
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

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    out.push_back({number, line});
  }
  return out;
}

}  // namespace oldsets
