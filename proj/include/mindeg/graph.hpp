#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <concepts>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <mindeg/errors.hpp>

namespace mindeg {

// Simple undirected graph on vertices 0..V-1, immutable after construction.
// Edge identity is the position in the edge list; orderings of the random
// process are permutations of those positions, so the list order is part of
// the value.
class Graph {
 public:
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) {
      throw std::invalid_argument("graph: negative vertex count");
    }
    adjacency_.resize(vertex_count_);
    degree_.assign(vertex_count_, 0);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      const auto [u, v] = edges_[e];
      if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) {
        throw std::invalid_argument("graph: edge endpoint out of range");
      }
      if (u == v) {
        throw std::invalid_argument("graph: self-loop");
      }
      if (!index_.emplace(normalized(u, v), e).second) {
        throw std::invalid_argument("graph: duplicate edge");
      }
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
      ++degree_[u];
      ++degree_[v];
    }
  }

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<std::pair<int, int>>& edges() const noexcept {
    return edges_;
  }

  std::array<int, 2> edge_vertices(int e) const {
    const auto& [u, v] = edges_.at(e);
    return {u, v};
  }

  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }

  int degree(int v) const { return degree_.at(v); }

  int min_degree() const noexcept {
    if (vertex_count_ == 0) return 0;
    return *std::min_element(degree_.begin(), degree_.end());
  }

  bool has_edge(int u, int v) const noexcept {
    return index_.count(normalized(u, v)) != 0;
  }

  // Position of edge {u, v} in the edge list, -1 when absent.
  int edge_index(int u, int v) const noexcept {
    auto it = index_.find(normalized(u, v));
    return it == index_.end() ? -1 : it->second;
  }

 private:
  static std::pair<int, int> normalized(int u, int v) {
    return u < v ? std::pair{u, v} : std::pair{v, u};
  }

  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> degree_;
  std::map<std::pair<int, int>, int> index_;
};

// r-uniform hypergraph; each edge is a set of r distinct vertices, stored
// sorted. Edge list order is significant for the same reason as in Graph.
class UniformHypergraph {
 public:
  UniformHypergraph(int vertex_count, int arity,
                    std::vector<std::vector<int>> edges)
      : vertex_count_(vertex_count), arity_(arity), edges_(std::move(edges)) {
    if (vertex_count_ < 0) {
      throw std::invalid_argument("hypergraph: negative vertex count");
    }
    if (arity_ < 2) {
      throw std::invalid_argument("hypergraph: arity must be at least 2");
    }
    incidence_.resize(vertex_count_);
    degree_.assign(vertex_count_, 0);
    std::set<std::vector<int>> seen;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      auto& edge = edges_[e];
      if (static_cast<int>(edge.size()) != arity_) {
        throw std::invalid_argument("hypergraph: edge arity mismatch");
      }
      std::sort(edge.begin(), edge.end());
      if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
        throw std::invalid_argument("hypergraph: repeated vertex in edge");
      }
      if (edge.front() < 0 || edge.back() >= vertex_count_) {
        throw std::invalid_argument("hypergraph: edge endpoint out of range");
      }
      if (!seen.insert(edge).second) {
        throw std::invalid_argument("hypergraph: duplicate edge");
      }
      for (int v : edge) {
        incidence_[v].push_back(e);
        ++degree_[v];
      }
    }
  }

  int vertex_count() const noexcept { return vertex_count_; }
  int arity() const noexcept { return arity_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<std::vector<int>>& edges() const noexcept {
    return edges_;
  }

  std::span<const int> edge_vertices(int e) const { return edges_.at(e); }

  const std::vector<int>& incident_edges(int v) const {
    return incidence_.at(v);
  }

  int degree(int v) const { return degree_.at(v); }

  int min_degree() const noexcept {
    if (vertex_count_ == 0) return 0;
    return *std::min_element(degree_.begin(), degree_.end());
  }

 private:
  int vertex_count_;
  int arity_;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> incidence_;
  std::vector<int> degree_;
};

// Either structure can host the random process; all it needs is degrees and
// edge membership.
template <typename A>
concept EdgeAmbient = requires(const A& a, int e) {
  { a.vertex_count() } -> std::convertible_to<int>;
  { a.edge_count() } -> std::convertible_to<int>;
  { a.min_degree() } -> std::convertible_to<int>;
  { *std::begin(a.edge_vertices(e)) } -> std::convertible_to<int>;
};

// K_{n,n}: parts 0..n-1 and n..2n-1, the n^2 cross edges in row-major
// order, so edge (i, n+j) has index i*n + j.
inline Graph complete_bipartite(int n) {
  if (n < 1) {
    throw std::invalid_argument("complete_bipartite: n must be positive");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      edges.emplace_back(i, n + j);
    }
  }
  return Graph(2 * n, std::move(edges));
}

// K_m with edges in lexicographic order.
inline Graph complete_graph(int m) {
  if (m < 1) {
    throw std::invalid_argument("complete_graph: m must be positive");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      edges.emplace_back(u, v);
    }
  }
  return Graph(m, std::move(edges));
}

// Complete r-partite transversal hypergraph: r parts of size n (part i is
// the label range [i*n, (i+1)*n)), and the n^r edges taking one vertex from
// each part, in odometer order over the part offsets.
inline UniformHypergraph complete_rpartite_hypergraph(int n, int r) {
  if (n < 1 || r < 2) {
    throw std::invalid_argument(
        "complete_rpartite_hypergraph: need n >= 1 and r >= 2");
  }
  std::vector<std::vector<int>> edges;
  std::vector<int> offsets(r, 0);
  for (;;) {
    std::vector<int> edge(r);
    for (int i = 0; i < r; ++i) {
      edge[i] = i * n + offsets[i];
    }
    edges.push_back(std::move(edge));
    int i = r - 1;
    while (i >= 0 && ++offsets[i] == n) {
      offsets[i--] = 0;
    }
    if (i < 0) break;
  }
  return UniformHypergraph(r * n, r, std::move(edges));
}

// All C(rn, r) r-subsets of {0, ..., rn-1} in lexicographic order.
inline UniformHypergraph complete_hypergraph(int n, int r) {
  if (n < 1 || r < 2) {
    throw std::invalid_argument(
        "complete_hypergraph: need n >= 1 and r >= 2");
  }
  const int v = n * r;
  std::vector<std::vector<int>> edges;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  for (;;) {
    edges.push_back(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == v - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) {
      pick[j] = pick[j - 1] + 1;
    }
  }
  return UniformHypergraph(v, r, std::move(edges));
}

namespace detail {

struct NumericLine {
  std::size_t number;  // 1-based source line
  std::vector<long long> values;
};

// Splits into lines, strips '#' comments, parses whitespace-separated
// integers. Lines that are empty after stripping are dropped.
inline std::vector<NumericLine> numeric_lines(std::string_view text) {
  std::vector<NumericLine> result;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_number;
    pos = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    NumericLine parsed{line_number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[j]))) {
        ++j;
      }
      long long value = 0;
      auto [end, ec] =
          std::from_chars(line.data() + i, line.data() + j, value);
      if (ec != std::errc{} || end != line.data() + j) {
        throw ParseError(line_number, "expected an integer, got '" +
                                          std::string(line.substr(i, j - i)) +
                                          "'");
      }
      parsed.values.push_back(value);
      i = j;
    }
    if (!parsed.values.empty()) {
      result.push_back(std::move(parsed));
    }
    if (eol == text.size()) break;
  }
  return result;
}

inline constexpr long long kMaxFileDimension = 10'000'000;

inline void check_dimension(const NumericLine& line, long long value,
                            const char* what) {
  if (value < 0 || value > kMaxFileDimension) {
    throw ParseError(line.number, std::string(what) + " out of range");
  }
}

}  // namespace detail

// Format: header "V M", then M lines "u v" (0-based, u != v). '#' starts a
// comment; blank lines are ignored.
inline Graph parse_graph(std::string_view text) {
  const auto lines = detail::numeric_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "missing 'V M' header");
  }
  const auto& header = lines.front();
  if (header.values.size() != 2) {
    throw ParseError(header.number, "header must be 'V M'");
  }
  detail::check_dimension(header, header.values[0], "vertex count");
  detail::check_dimension(header, header.values[1], "edge count");
  const int v = static_cast<int>(header.values[0]);
  const auto m = static_cast<std::size_t>(header.values[1]);
  if (lines.size() - 1 != m) {
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(m) + " edge lines, got " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.values.size() != 2) {
      throw ParseError(line.number, "edge line must be 'u v'");
    }
    const long long u = line.values[0];
    const long long w = line.values[1];
    if (u < 0 || u >= v || w < 0 || w >= v) {
      throw ParseError(line.number, "edge endpoint out of range");
    }
    if (u == w) {
      throw ParseError(line.number, "self-loop");
    }
    auto key = std::minmax(static_cast<int>(u), static_cast<int>(w));
    if (!seen.insert({key.first, key.second}).second) {
      throw ParseError(line.number, "duplicate edge");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(w));
  }
  return Graph(v, std::move(edges));
}

// Format: header "V R M", then M lines of R distinct vertex indices.
inline UniformHypergraph parse_hypergraph(std::string_view text) {
  const auto lines = detail::numeric_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "missing 'V R M' header");
  }
  const auto& header = lines.front();
  if (header.values.size() != 3) {
    throw ParseError(header.number, "header must be 'V R M'");
  }
  detail::check_dimension(header, header.values[0], "vertex count");
  detail::check_dimension(header, header.values[2], "edge count");
  const int v = static_cast<int>(header.values[0]);
  const long long r = header.values[1];
  if (r < 2 || r > v) {
    throw ParseError(header.number, "arity out of range");
  }
  const auto m = static_cast<std::size_t>(header.values[2]);
  if (lines.size() - 1 != m) {
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(m) + " edge lines, got " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<int>> edges;
  edges.reserve(m);
  std::set<std::vector<int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.values.size() != static_cast<std::size_t>(r)) {
      throw ParseError(line.number, "edge line must list " +
                                        std::to_string(r) + " vertices");
    }
    std::vector<int> edge;
    edge.reserve(r);
    for (long long value : line.values) {
      if (value < 0 || value >= v) {
        throw ParseError(line.number, "edge endpoint out of range");
      }
      edge.push_back(static_cast<int>(value));
    }
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw ParseError(line.number, "repeated vertex in edge");
    }
    if (!seen.insert(edge).second) {
      throw ParseError(line.number, "duplicate edge");
    }
    edges.push_back(std::move(edge));
  }
  return UniformHypergraph(v, static_cast<int>(r), std::move(edges));
}

inline std::string to_text(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

inline std::string to_text(const UniformHypergraph& hg) {
  std::string out = std::to_string(hg.vertex_count()) + " " +
                    std::to_string(hg.arity()) + " " +
                    std::to_string(hg.edge_count()) + "\n";
  for (const auto& edge : hg.edges()) {
    for (std::size_t i = 0; i < edge.size(); ++i) {
      out += (i ? " " : "") + std::to_string(edge[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace mindeg
