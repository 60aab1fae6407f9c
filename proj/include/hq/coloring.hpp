// Edge and vertex 2-colorings, and the coloring file format.

#pragma once

#include <boost/crc.hpp>

#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hq/graph.hpp"

namespace hq {

enum class Color : std::uint8_t { red = 0, blue = 1 };

class ColoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One bit per edge in canonical edge order; 1 = blue.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(std::size_t edges, Color fill = Color::red)
      : size_(edges), words_((edges + 63) / 64, fill == Color::blue ? ~0ull : 0ull) {
    trim();
  }

  static EdgeColoring uniform(std::size_t edges, std::uint64_t seed) {
    EdgeColoring c(edges);
    std::mt19937_64 rng(seed);
    for (auto& w : c.words_) w = rng();
    c.trim();
    return c;
  }

  std::size_t size() const { return size_; }
  bool blue(std::size_t e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  Color get(std::size_t e) const { return blue(e) ? Color::blue : Color::red; }
  void set(std::size_t e, Color c) {
    const std::uint64_t bit = 1ull << (e & 63);
    if (c == Color::blue) words_[e >> 6] |= bit; else words_[e >> 6] &= ~bit;
  }
  void flip(std::size_t e) { words_[e >> 6] ^= 1ull << (e & 63); }

  EdgeColoring swapped() const {
    EdgeColoring c = *this;
    for (auto& w : c.words_) w = ~w;
    c.trim();
    return c;
  }

  std::size_t blue_count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

  bool operator==(const EdgeColoring& o) const { return size_ == o.size_ && words_ == o.words_; }

 private:
  void trim() {
    if (size_ % 64 && !words_.empty()) words_.back() &= (1ull << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// One bit per vertex.
class VertexColoring {
 public:
  explicit VertexColoring(std::size_t n = 0) : bits_(n, 0) {}
  std::size_t size() const { return bits_.size(); }
  Color get(std::size_t v) const { return bits_[v] ? Color::blue : Color::red; }
  void set(std::size_t v, Color c) { bits_[v] = c == Color::blue; }

  /// Number of edges of g whose endpoints share a color.
  std::size_t monochromatic_edges(const Graph& g) const {
    if (g.vertex_count() != size()) throw ColoringError("vertex coloring size mismatch");
    std::size_t n = 0;
    for (const auto& [u, v] : g.edges()) n += bits_[u] == bits_[v];
    return n;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

/// CRC-32 of the graph's edge-list export; ties a coloring file to its graph.
inline std::uint32_t graph_checksum(const Graph& g) {
  const std::string s = edge_list_string(g);
  boost::crc_32_type crc;
  crc.process_bytes(s.data(), s.size());
  return crc.checksum();
}

/// Coloring file:
///   hq-coloring 1
///   q <q>
///   edges <m>
///   graph-crc32 <8 hex digits>
///   bits
///   <hex, 64 digits per line; byte j holds edges 8j..8j+7, lowest edge in the low bit>
inline void write_coloring(std::ostream& os, const EdgeColoring& c, std::uint32_t q, std::uint32_t checksum) {
  static const char* hex = "0123456789abcdef";
  char crc[9];
  std::snprintf(crc, sizeof crc, "%08x", checksum);
  os << "hq-coloring 1\nq " << q << "\nedges " << c.size() << "\ngraph-crc32 " << crc << "\nbits\n";
  const std::size_t bytes = (c.size() + 7) / 8;
  std::string line;
  for (std::size_t j = 0; j < bytes; ++j) {
    unsigned b = 0;
    for (std::size_t i = 0; i < 8 && 8 * j + i < c.size(); ++i) b |= unsigned(c.blue(8 * j + i)) << i;
    line += hex[b >> 4];
    line += hex[b & 15];
    if (line.size() == 64 || j + 1 == bytes) {
      os << line << '\n';
      line.clear();
    }
  }
}

struct ColoringFile {
  std::uint32_t q = 0;
  std::uint32_t checksum = 0;
  EdgeColoring coloring;
};

inline ColoringFile read_coloring(std::istream& is) {
  auto expect_key = [&](const char* key) {
    std::string k;
    if (!(is >> k) || k != key) throw ColoringError(std::string("coloring file: expected '") + key + "'");
  };
  std::string magic;
  int version = 0;
  if (!(is >> magic >> version) || magic != "hq-coloring" || version != 1)
    throw ColoringError("coloring file: bad header");
  ColoringFile f;
  std::size_t edges = 0;
  std::string crc;
  expect_key("q");
  if (!(is >> f.q)) throw ColoringError("coloring file: bad q");
  expect_key("edges");
  if (!(is >> edges)) throw ColoringError("coloring file: bad edge count");
  expect_key("graph-crc32");
  if (!(is >> crc) || crc.size() != 8) throw ColoringError("coloring file: bad checksum field");
  try {
    std::size_t used = 0;
    f.checksum = static_cast<std::uint32_t>(std::stoul(crc, &used, 16));
    if (used != 8) throw ColoringError("");
  } catch (const std::exception&) {
    throw ColoringError("coloring file: bad checksum field");
  }
  expect_key("bits");
  std::string hex, line;
  while (is >> line) hex += line;
  if (hex.size() != 2 * ((edges + 7) / 8)) throw ColoringError("coloring file: bit payload has wrong length");
  f.coloring = EdgeColoring(edges);
  auto nibble = [](char ch) -> unsigned {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw ColoringError("coloring file: non-hex character in payload");
  };
  for (std::size_t j = 0; 2 * j < hex.size(); ++j) {
    const unsigned b = nibble(hex[2 * j]) << 4 | nibble(hex[2 * j + 1]);
    for (std::size_t i = 0; i < 8; ++i) {
      if (!((b >> i) & 1)) continue;
      if (8 * j + i >= edges) throw ColoringError("coloring file: padding bits set");
      f.coloring.set(8 * j + i, Color::blue);
    }
  }
  return f;
}

/// Reads a coloring and checks it against the graph it claims to color.
inline EdgeColoring read_coloring_for(std::istream& is, const Graph& g, std::uint32_t q) {
  ColoringFile f = read_coloring(is);
  if (f.q != q) throw ColoringError("coloring file is for q=" + std::to_string(f.q));
  if (f.coloring.size() != g.edge_count()) throw ColoringError("coloring file edge count does not match graph");
  if (f.checksum != graph_checksum(g)) throw ColoringError("coloring file graph checksum mismatch");
  return std::move(f.coloring);
}

}  // namespace hq
