// Simple undirected graphs on dense bit-matrix adjacency, with a canonical edge
// order (lexicographic on (u, v), u < v) and edge-list / graph6 I/O.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hq {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square bit matrix; row r is a packed bitset over columns.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool test(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void reset(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] &= ~(std::uint64_t{1} << (c % 64)); }

  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

  std::size_t row_count(std::size_t r) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(row(r)[w]);
    return c;
  }
  std::size_t common_count(std::size_t a, std::size_t b) const {
    const std::uint64_t* ra = row(a);
    const std::uint64_t* rb = row(b);
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(ra[w] & rb[w]);
    return c;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Undirected simple graph. Neighbor lists are sorted; edges get dense ids in
/// canonical (u, v), u < v lexicographic order once `finalize` has run.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
    finalize();
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_u_.size(); }

  void add_edge(std::uint32_t u, std::uint32_t v) {
    if (u == v) throw GraphError("self-loop");
    if (u >= adj_.size() || v >= adj_.size()) throw GraphError("vertex out of range");
    adj_.set(u, v);
    adj_.set(v, u);
    finalized_ = false;
  }

  /// Builds neighbor lists and the canonical edge index.
  void finalize() {
    const std::size_t n = adj_.size();
    nbrs_.assign(n, {});
    incident_.assign(n, {});
    edge_u_.clear();
    edge_v_.clear();
    upper_offset_.assign(n + 1, 0);
    for (std::uint32_t u = 0; u < n; ++u) {
      const std::uint64_t* r = adj_.row(u);
      for (std::size_t w = 0; w < adj_.words_per_row(); ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
          const auto v = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
          bits &= bits - 1;
          nbrs_[u].push_back(v);
          if (v > u) {
            edge_u_.push_back(u);
            edge_v_.push_back(v);
          }
        }
      }
      upper_offset_[u + 1] = static_cast<std::uint32_t>(edge_u_.size());
    }
    // Neighbors of u below u are visited before u's own edges, so ids arrive in order.
    for (std::uint32_t id = 0; id < edge_u_.size(); ++id) {
      incident_[edge_u_[id]].push_back(id);
      incident_[edge_v_[id]].push_back(id);
    }
    for (std::uint32_t u = 0; u < n; ++u) {
      auto& inc = incident_[u];
      std::sort(inc.begin(), inc.end(), [&](std::uint32_t a, std::uint32_t b) {
        return other(a, u) < other(b, u);
      });
    }
    finalized_ = true;
  }

  bool adjacent(std::uint32_t u, std::uint32_t v) const { return adj_.test(u, v); }
  const BitMatrix& adjacency() const { return adj_; }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return nbrs_[v]; }
  std::size_t degree(std::uint32_t v) const { return nbrs_[v].size(); }
  std::size_t common_neighbors(std::uint32_t u, std::uint32_t v) const { return adj_.common_count(u, v); }

  Edge edge(std::size_t id) const { return {edge_u_[id], edge_v_[id]}; }
  std::uint32_t other(std::size_t id, std::uint32_t end) const { return edge_u_[id] == end ? edge_v_[id] : edge_u_[id]; }

  /// Edge ids incident to v, aligned with neighbors(v).
  const std::vector<std::uint32_t>& incident_edges(std::uint32_t v) const { return incident_[v]; }

  /// Canonical edge id of {u, v}; throws if not an edge.
  std::size_t edge_id(std::uint32_t u, std::uint32_t v) const {
    if (u > v) std::swap(u, v);
    const auto& nb = nbrs_[u];
    const auto first_upper = std::upper_bound(nb.begin(), nb.end(), u);
    const auto it = std::lower_bound(first_upper, nb.end(), v);
    if (it == nb.end() || *it != v) throw GraphError("not an edge");
    return upper_offset_[u] + static_cast<std::size_t>(it - first_upper);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out(edge_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = edge(i);
    return out;
  }

  bool finalized() const { return finalized_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  BitMatrix adj_;
  std::vector<std::vector<std::uint32_t>> nbrs_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::uint32_t> edge_u_, edge_v_;
  std::vector<std::uint32_t> upper_offset_;
  bool finalized_ = true;
};

// ---------------------------------------------------------------------------
// Small named graphs.

inline Graph cycle_graph(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph path_graph(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph complete_graph(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

// ---------------------------------------------------------------------------
// Edge-list text: one "u v" line per edge, u < v, canonical order. An optional
// first line "n <count>" records isolated trailing vertices.

inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << "n " << g.vertex_count() << '\n';
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edge(i);
    os << u << ' ' << v << '\n';
  }
}

inline std::string edge_list_string(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

inline Graph read_edge_list(std::istream& is) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  bool have_n = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (line[0] == 'n') {
      std::string tag;
      ls >> tag >> n;
      if (!ls) throw GraphError("bad vertex-count line " + std::to_string(lineno));
      have_n = true;
      continue;
    }
    long long u = -1, v = -1;
    ls >> u >> v;
    if (!ls || u < 0 || v < 0) throw GraphError("bad edge line " + std::to_string(lineno));
    edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    if (!have_n) n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  for (auto [u, v] : edges)
    if (u >= n || v >= n) throw GraphError("edge endpoint exceeds declared vertex count");
  return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// graph6 (McKay's format): N(n) followed by the upper triangle, column-major,
// packed 6 bits per printable byte (offset 63).

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw GraphError("graph6 export supports at most 258047 vertices");
  }
  int acc = 0, nbits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph from_graph6(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.rfind(">>graph6<<", 0) == 0) s.remove_prefix(10);
  if (s.empty()) throw GraphError("empty graph6 string");
  auto val = [&](std::size_t i) {
    const int c = static_cast<unsigned char>(s[i]) - 63;
    if (c < 0 || c > 63) throw GraphError("invalid graph6 character");
    return c;
  };
  std::size_t n = 0, pos = 0;
  if (s[0] != 126) {
    n = static_cast<std::size_t>(val(0));
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw GraphError("unsupported graph6 size header");
    n = (static_cast<std::size_t>(val(1)) << 12) | (static_cast<std::size_t>(val(2)) << 6) | static_cast<std::size_t>(val(3));
    pos = 4;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (s.size() - pos != (bits + 5) / 6) throw GraphError("graph6 length does not match vertex count");
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = val(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  }
  g.finalize();
  return g;
}

// ---------------------------------------------------------------------------
// Clique queries on arbitrary graphs.

inline std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t t = 0;
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    auto [u, v] = g.edge(id);
    for (std::uint32_t w : g.neighbors(v))
      if (w > v && g.adjacent(u, w)) ++t;
  }
  return t;
}

inline bool is_triangle_free(const Graph& g) { return count_triangles(g) == 0; }

/// Calls visit(a, b, c, d) with a < b < c < d for every K4 whose lowest edge
/// {a, b} has canonical id in [first_edge, last_edge).
template <class Visit>
void for_each_k4(const Graph& g, std::size_t first_edge, std::size_t last_edge, Visit&& visit) {
  const std::size_t words = g.adjacency().words_per_row();
  std::vector<std::uint64_t> common(words);
  for (std::size_t id = first_edge; id < last_edge; ++id) {
    auto [a, b] = g.edge(id);
    const std::uint64_t* ra = g.adjacency().row(a);
    const std::uint64_t* rb = g.adjacency().row(b);
    for (std::size_t w = 0; w < words; ++w) common[w] = ra[w] & rb[w];
    for (std::size_t w = b / 64; w < words; ++w) {
      std::uint64_t bits = common[w];
      if (w == b / 64) bits &= (b % 64 == 63) ? 0 : (~std::uint64_t{0} << (b % 64 + 1));
      while (bits) {
        const auto c = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* rc = g.adjacency().row(c);
        for (std::size_t x = c / 64; x < words; ++x) {
          std::uint64_t dbits = common[x] & rc[x];
          if (x == c / 64) dbits &= (c % 64 == 63) ? 0 : (~std::uint64_t{0} << (c % 64 + 1));
          while (dbits) {
            const auto d = static_cast<std::uint32_t>(x * 64 + std::countr_zero(dbits));
            dbits &= dbits - 1;
            visit(a, b, c, d);
          }
        }
      }
    }
  }
}

template <class Visit>
void for_each_k4(const Graph& g, Visit&& visit) {
  for_each_k4(g, 0, g.edge_count(), std::forward<Visit>(visit));
}

inline std::uint64_t count_k4(const Graph& g) {
  std::uint64_t c = 0;
  for_each_k4(g, [&](auto, auto, auto, auto) { ++c; });
  return c;
}

}  // namespace hq
