#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <mindeg/errors.hpp>
#include <mindeg/graph.hpp>
#include <mindeg/rational.hpp>

namespace mindeg {

enum class CountTarget {
  kBipartiteMatchings,
  kPerfectMatchings,
  kHamiltonianCycles,
  kHypergraphMatchings,
};

// Permanent of the biadjacency matrix: inclusion-exclusion over column
// subsets, walked in Gray-code order so each step flips one column in the
// running row sums. Exact integers throughout.
inline BigInt count_bipartite_matchings(const Graph& g, int left_size) {
  const int v = g.vertex_count();
  if (left_size < 0 || 2 * left_size != v) {
    throw std::invalid_argument(
        "count_bipartite_matchings: parts must have equal sizes");
  }
  const int n = left_size;
  if (n > 20) {
    throw SizeCapError("count_bipartite_matchings: capped at 20 per side");
  }
  if (n == 0) return 1;
  std::vector<std::uint32_t> row(n, 0);  // row i = left vertex i, bit j = right n+j
  for (const auto& [a, b] : g.edges()) {
    const auto [u, w] = std::minmax(a, b);
    if (u >= n || w < n) {
      throw std::invalid_argument(
          "count_bipartite_matchings: edge does not cross the parts");
    }
    row[u] |= std::uint32_t{1} << (w - n);
  }

  std::vector<int> rowsum(n, 0);
  int zero_rows = n;
  BigInt total = 0;
  std::uint32_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto next_gray = static_cast<std::uint32_t>(k ^ (k >> 1));
    const std::uint32_t flipped = gray ^ next_gray;
    const bool added = (next_gray & flipped) != 0;
    gray = next_gray;
    for (int i = 0; i < n; ++i) {
      if (row[i] & flipped) {
        const int before = rowsum[i];
        rowsum[i] += added ? 1 : -1;
        if (before == 0) --zero_rows;
        if (rowsum[i] == 0) ++zero_rows;
      }
    }
    if (zero_rows > 0) continue;
    BigInt product = 1;
    for (int i = 0; i < n; ++i) {
      product *= rowsum[i];
    }
    const int parity = __builtin_popcount(gray);
    if ((n - parity) % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  return total;
}

// Backtracking on the lowest-indexed uncovered vertex; no memoization.
inline BigInt count_perfect_matchings(const Graph& g) {
  const int v = g.vertex_count();
  if (v % 2 != 0) return 0;
  if (v == 0) return 1;
  std::vector<char> covered(v, 0);
  BigInt total = 0;
  auto recurse = [&](auto&& self, int lowest) -> void {
    while (lowest < v && covered[lowest]) ++lowest;
    if (lowest == v) {
      ++total;
      return;
    }
    covered[lowest] = 1;
    for (int u : g.neighbors(lowest)) {
      if (covered[u]) continue;
      covered[u] = 1;
      self(self, lowest + 1);
      covered[u] = 0;
    }
    covered[lowest] = 0;
  };
  recurse(recurse, 0);
  return total;
}

// Subset DP over paths anchored at vertex 0; each undirected cycle is found
// in both directions, so the total is halved. Counts fit 64 bits for every
// graph under the cap ((V-1)!/2 bounds the count).
inline BigInt count_hamiltonian_cycles(const Graph& g) {
  const int v = g.vertex_count();
  if (v <= 2) return 0;
  if (v > 18) {
    throw SizeCapError("count_hamiltonian_cycles: capped at 18 vertices");
  }
  std::vector<std::uint32_t> adj(v, 0);
  for (const auto& [a, b] : g.edges()) {
    adj[a] |= std::uint32_t{1} << b;
    adj[b] |= std::uint32_t{1} << a;
  }
  const std::size_t masks = std::size_t{1} << v;
  // paths[mask * v + w] = walks 0 -> w visiting exactly `mask`
  std::vector<std::uint64_t> paths(masks * v, 0);
  paths[std::size_t{1} * v + 0] = 1;
  std::uint64_t cycles_doubled = 0;
  for (std::size_t mask = 1; mask < masks; mask += 2) {  // always contains 0
    for (int w = 0; w < v; ++w) {
      const std::uint64_t count = paths[mask * v + w];
      if (count == 0) continue;
      const auto full = mask == masks - 1;
      if (full && w != 0 && (adj[w] & 1)) {
        cycles_doubled += count;
      }
      if (full) continue;
      std::uint32_t candidates = adj[w] & ~static_cast<std::uint32_t>(mask);
      while (candidates) {
        const int next = std::countr_zero(candidates);
        candidates &= candidates - 1;
        paths[(mask | (std::uint32_t{1} << next)) * v + next] += count;
      }
    }
  }
  return BigInt(cycles_doubled / 2);
}

// Perfect matchings of an r-uniform hypergraph: backtracking on the lowest
// uncovered vertex, taking only edges whose vertices are all free.
inline BigInt count_hypergraph_matchings(const UniformHypergraph& hg) {
  const int v = hg.vertex_count();
  if (v % hg.arity() != 0) return 0;
  if (v == 0) return 1;
  std::vector<char> covered(v, 0);
  BigInt total = 0;
  auto recurse = [&](auto&& self, int lowest) -> void {
    while (lowest < v && covered[lowest]) ++lowest;
    if (lowest == v) {
      ++total;
      return;
    }
    for (int e : hg.incident_edges(lowest)) {
      const auto edge = hg.edge_vertices(e);
      if (std::any_of(edge.begin(), edge.end(),
                      [&](int u) { return covered[u]; })) {
        continue;
      }
      for (int u : edge) covered[u] = 1;
      self(self, lowest + 1);
      for (int u : edge) covered[u] = 0;
    }
  };
  recurse(recurse, 0);
  return total;
}

namespace detail {

inline void append_sorted_edge_set(std::vector<std::vector<int>>& out,
                                   std::vector<int> copy) {
  std::sort(copy.begin(), copy.end());
  out.push_back(std::move(copy));
}

// All perfect matchings of g as sorted edge-index sets.
inline std::vector<std::vector<int>> spanning_matchings(const Graph& g) {
  std::vector<std::vector<int>> out;
  const int v = g.vertex_count();
  if (v % 2 != 0) return out;
  std::vector<char> covered(v, 0);
  std::vector<int> picked;
  auto recurse = [&](auto&& self, int lowest) -> void {
    while (lowest < v && covered[lowest]) ++lowest;
    if (lowest == v) {
      append_sorted_edge_set(out, picked);
      return;
    }
    covered[lowest] = 1;
    for (int u : g.neighbors(lowest)) {
      if (covered[u]) continue;
      covered[u] = 1;
      picked.push_back(g.edge_index(lowest, u));
      self(self, lowest + 1);
      picked.pop_back();
      covered[u] = 0;
    }
    covered[lowest] = 0;
  };
  if (v > 0) recurse(recurse, 0);
  return out;
}

// All Hamiltonian cycles: paths anchored at vertex 0, one direction kept.
inline std::vector<std::vector<int>> spanning_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  const int v = g.vertex_count();
  if (v < 3) return out;
  std::vector<char> visited(v, 0);
  std::vector<int> path{0};
  visited[0] = 1;
  auto recurse = [&](auto&& self) -> void {
    const int last = path.back();
    if (static_cast<int>(path.size()) == v) {
      if (g.has_edge(last, 0) && path[1] < last) {
        std::vector<int> copy;
        copy.reserve(v);
        for (int i = 0; i + 1 < v; ++i) {
          copy.push_back(g.edge_index(path[i], path[i + 1]));
        }
        copy.push_back(g.edge_index(last, 0));
        append_sorted_edge_set(out, std::move(copy));
      }
      return;
    }
    for (int u : g.neighbors(last)) {
      if (visited[u]) continue;
      visited[u] = 1;
      path.push_back(u);
      self(self);
      path.pop_back();
      visited[u] = 0;
    }
  };
  recurse(recurse);
  return out;
}

// All Hamiltonian paths, each direction kept once.
inline std::vector<std::vector<int>> spanning_paths(const Graph& g) {
  std::vector<std::vector<int>> out;
  const int v = g.vertex_count();
  if (v < 2) return out;
  std::vector<char> visited(v, 0);
  std::vector<int> path;
  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == v) {
      if (path.front() < path.back()) {
        std::vector<int> copy;
        copy.reserve(v - 1);
        for (int i = 0; i + 1 < v; ++i) {
          copy.push_back(g.edge_index(path[i], path[i + 1]));
        }
        append_sorted_edge_set(out, std::move(copy));
      }
      return;
    }
    const int last = path.back();
    for (int u : g.neighbors(last)) {
      if (visited[u]) continue;
      visited[u] = 1;
      path.push_back(u);
      self(self);
      path.pop_back();
      visited[u] = 0;
    }
  };
  for (int start = 0; start < v; ++start) {
    visited[start] = 1;
    path.push_back(start);
    recurse(recurse);
    path.pop_back();
    visited[start] = 0;
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  const int v = g.vertex_count();
  if (v == 0) return true;
  std::vector<char> seen(v, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == v;
}

// Every bijection V(H) -> V(G) that maps E(H) into E(G), recorded as the
// image edge set. Distinct bijections often give the same copy, hence the
// set.
inline std::vector<std::vector<int>> spanning_copies_generic(const Graph& g,
                                                             const Graph& h) {
  if (g.vertex_count() > 10) {
    throw SizeCapError(
        "enumerate_spanning_copies: generic enumeration capped at 10 "
        "vertices");
  }
  const int v = g.vertex_count();
  std::vector<int> image(v);
  std::iota(image.begin(), image.end(), 0);
  std::set<std::vector<int>> copies;
  do {
    std::vector<int> copy;
    copy.reserve(h.edge_count());
    bool ok = true;
    for (const auto& [a, b] : h.edges()) {
      const int e = g.edge_index(image[a], image[b]);
      if (e < 0) {
        ok = false;
        break;
      }
      copy.push_back(e);
    }
    if (ok) {
      std::sort(copy.begin(), copy.end());
      copies.insert(std::move(copy));
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return {copies.begin(), copies.end()};
}

}  // namespace detail

// All spanning subgraphs of g isomorphic to h, each as a sorted set of
// g-edge indices, deduplicated and in lexicographic order. Perfect
// matchings, Hamiltonian cycles and Hamiltonian paths get dedicated
// enumerators; anything else goes through bijection enumeration (<= 10
// vertices).
inline std::vector<std::vector<int>> enumerate_spanning_copies(
    const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) {
    throw std::invalid_argument(
        "enumerate_spanning_copies: vertex counts differ");
  }
  const int v = g.vertex_count();
  std::vector<std::vector<int>> copies;
  const auto degree_is = [&](int d) {
    for (int u = 0; u < v; ++u) {
      if (h.degree(u) != d) return false;
    }
    return v > 0;
  };
  const auto path_degrees = [&] {
    int ones = 0;
    for (int u = 0; u < v; ++u) {
      if (h.degree(u) == 1) {
        ++ones;
      } else if (h.degree(u) != 2) {
        return false;
      }
    }
    return ones == 2;
  };
  if (degree_is(1)) {
    copies = detail::spanning_matchings(g);
  } else if (degree_is(2) && detail::is_connected(h)) {
    copies = detail::spanning_cycles(g);
  } else if (v >= 2 && path_degrees() && detail::is_connected(h)) {
    copies = detail::spanning_paths(g);
  } else {
    return detail::spanning_copies_generic(g, h);
  }
  std::sort(copies.begin(), copies.end());
  return copies;
}

inline BigInt count_for_target(const Graph& g, CountTarget target) {
  switch (target) {
    case CountTarget::kBipartiteMatchings:
      return count_bipartite_matchings(g, g.vertex_count() / 2);
    case CountTarget::kPerfectMatchings:
      return count_perfect_matchings(g);
    case CountTarget::kHamiltonianCycles:
      return count_hamiltonian_cycles(g);
    case CountTarget::kHypergraphMatchings:
      break;
  }
  throw std::invalid_argument("count_for_target: target needs a hypergraph");
}

inline BigInt count_for_target(const UniformHypergraph& hg,
                               CountTarget target) {
  if (target != CountTarget::kHypergraphMatchings) {
    throw std::invalid_argument("count_for_target: target needs a graph");
  }
  return count_hypergraph_matchings(hg);
}

}  // namespace mindeg
