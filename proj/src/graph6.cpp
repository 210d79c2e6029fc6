#include "zf/graph6.hpp"

#include <bit>
#include <cstdint>
#include <string_view>
#include <vector>

namespace zf {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

// Keeps a hostile length prefix from provoking a giant allocation.
constexpr long long kMaxVertices = 65535;

void strip_header(std::string_view& s, std::string_view header) {
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
}

int decode_char(std::string_view s, std::size_t i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126)
    throw FormatError("character " + std::to_string(int(c)) + " at position " +
                      std::to_string(i) + " outside printable range 63..126");
  return c - 63;
}

// Decodes the N(n) length prefix and advances pos past it.
long long decode_order(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw FormatError("missing length prefix");
  int c = decode_char(s, pos);
  if (c < 63) {
    ++pos;
    return c;
  }
  // 63 encodes the multi-character forms.
  ++pos;
  int width = 3;
  if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
    ++pos;
    width = 6;
  }
  if (pos + width > s.size()) throw FormatError("malformed length prefix");
  long long n = 0;
  for (int i = 0; i < width; ++i) n = (n << 6) | decode_char(s, pos++);
  if (width == 3 && n < 63) throw FormatError("non-minimal length prefix");
  if (width == 6 && n < 258048) throw FormatError("non-minimal length prefix");
  return n;
}

// Reads 6-bit groups MSB-first from graph6/sparse6 payload characters.
class BitReader {
 public:
  BitReader(std::string_view s, std::size_t pos) : s_(s), pos_(pos) {}

  long long bits_left() const {
    return static_cast<long long>(s_.size() - pos_) * 6 - used_;
  }
  int read1() {
    if (pos_ >= s_.size()) throw FormatError("unexpected end of line");
    if (used_ == 0) cur_ = decode_char(s_, pos_);
    int b = (cur_ >> (5 - used_)) & 1;
    if (++used_ == 6) {
      used_ = 0;
      ++pos_;
    }
    return b;
  }
  long long read(int k) {
    long long x = 0;
    while (k-- > 0) x = (x << 1) | read1();
    return x;
  }

 private:
  std::string_view s_;
  std::size_t pos_;
  int used_ = 0;
  int cur_ = 0;
};

}  // namespace

Graph parse_graph6(const std::string& line) {
  std::string_view s(line);
  strip_header(s, kGraph6Header);
  if (s.empty()) throw FormatError("empty input");
  if (s.front() == ':') throw FormatError("sparse6 line passed to graph6 parser");

  std::size_t pos = 0;
  long long n = decode_order(s, pos);
  if (n > kMaxVertices)
    throw FormatError("vertex count " + std::to_string(n) + " exceeds limit");

  long long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos < need) throw FormatError("truncated adjacency bits");
  if (s.size() - pos > need) throw FormatError("trailing garbage after adjacency bits");

  BitReader reader(s, pos);
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (reader.read1()) edges.emplace_back(i, j);
  if (reader.bits_left() > 0 && reader.read(static_cast<int>(reader.bits_left())) != 0)
    throw FormatError("nonzero padding bits");
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_sparse6(const std::string& line) {
  std::string_view s(line);
  strip_header(s, kSparse6Header);
  if (s.empty()) throw FormatError("empty input");
  if (s.front() == ';') throw FormatError("incremental sparse6 not supported");
  if (s.front() != ':') throw FormatError("sparse6 line must start with ':'");
  s.remove_prefix(1);
  if (s.empty()) throw FormatError("missing length prefix");

  std::size_t pos = 0;
  long long n = decode_order(s, pos);
  if (n > kMaxVertices)
    throw FormatError("vertex count " + std::to_string(n) + " exceeds limit");

  std::vector<std::pair<int, int>> edges;
  if (n > 1) {
    int k = std::max(1, static_cast<int>(
                            std::bit_width(static_cast<std::uint64_t>(n - 1))));
    BitReader reader(s, pos);
    long long v = 0;
    while (reader.bits_left() >= k + 1) {
      int b = reader.read1();
      long long x = reader.read(k);
      if (b) ++v;
      if (x >= n || v >= n) break;
      if (x > v) {
        v = x;
      } else if (x == v) {
        throw FormatError("sparse6 line encodes a self-loop");
      } else {
        edges.emplace_back(static_cast<int>(x), static_cast<int>(v));
      }
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_graph_line(const std::string& line) {
  std::string_view s(line);
  if (!s.empty() && (s.front() == ':' || s.substr(0, kSparse6Header.size()) == kSparse6Header))
    return parse_sparse6(line);
  return parse_graph6(line);
}

std::string write_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, static_cast<int>(j)) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

}  // namespace zf
