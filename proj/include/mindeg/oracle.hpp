#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include <mindeg/counting.hpp>
#include <mindeg/errors.hpp>
#include <mindeg/graph.hpp>
#include <mindeg/process.hpp>
#include <mindeg/rational.hpp>

// Ground truth by definition: walk every one of the m! edge orderings in
// lexicographic order, replay the process, and tally. No sampling, no
// symmetry reduction; counts are integers divided by m! once at the end.

namespace mindeg {

inline constexpr int kOracleMaxEdges = 10;
inline constexpr int kOracleMaxHypergraphCountEdges = 8;

namespace detail {

template <EdgeAmbient Ambient>
void check_oracle_size(const Ambient& ambient, int max_edges) {
  if (ambient.edge_count() > max_edges) {
    throw SizeCapError("oracle: exhaustive enumeration capped at " +
                       std::to_string(max_edges) + " edges");
  }
}

// Stopping time of one explicit ordering. `degree` is scratch, reset here.
template <EdgeAmbient Ambient>
int replay_stopping_time(const Ambient& ambient,
                         std::span<const int> ordering, int delta,
                         std::vector<int>& degree) {
  degree.assign(ambient.vertex_count(), 0);
  int below_threshold = ambient.vertex_count();
  int k = 0;
  for (int e : ordering) {
    if (below_threshold == 0) break;
    ++k;
    for (int v : ambient.edge_vertices(e)) {
      if (++degree[v] == delta) {
        --below_threshold;
      }
    }
  }
  return k;
}

}  // namespace detail

// Pr(J contained in the stopped subgraph), exactly, by enumerating all
// orderings.
template <EdgeAmbient Ambient>
Rational exhaustive_inclusion_probability(const Ambient& ambient, int delta,
                                          std::span<const int> j_edges) {
  detail::check_process_preconditions(ambient, delta);
  detail::check_oracle_size(ambient, kOracleMaxEdges);
  detail::check_edge_subset(ambient.edge_count(), j_edges);
  const int m = ambient.edge_count();
  std::vector<int> ordering(m);
  std::iota(ordering.begin(), ordering.end(), 0);
  std::vector<char> in_j(m, 0);
  for (int e : j_edges) in_j[e] = 1;
  const auto j_size =
      static_cast<int>(std::count(in_j.begin(), in_j.end(), 1));
  std::vector<int> degree;
  BigInt orderings_containing = 0;
  BigInt total_orderings = 0;
  do {
    ++total_orderings;
    const int k = detail::replay_stopping_time(ambient, ordering, delta,
                                               degree);
    int seen = 0;
    for (int i = 0; i < k; ++i) {
      if (in_j[ordering[i]]) ++seen;
    }
    if (seen == j_size) ++orderings_containing;
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return make_rational(orderings_containing, total_orderings);
}

// Exact expected number of target structures in the stopped subgraph,
// averaged over all orderings.
template <EdgeAmbient Ambient>
Rational exhaustive_expected_count(const Ambient& ambient, int delta,
                                   CountTarget target) {
  detail::check_process_preconditions(ambient, delta);
  const bool hypergraph = target == CountTarget::kHypergraphMatchings;
  detail::check_oracle_size(
      ambient, hypergraph ? kOracleMaxHypergraphCountEdges : kOracleMaxEdges);
  const int m = ambient.edge_count();
  std::vector<int> ordering(m);
  std::iota(ordering.begin(), ordering.end(), 0);
  std::vector<int> degree;
  BigInt total_count = 0;
  BigInt total_orderings = 0;
  ProcessOutcome outcome;
  do {
    ++total_orderings;
    const int k = detail::replay_stopping_time(ambient, ordering, delta,
                                               degree);
    outcome.ordering_prefix.assign(ordering.begin(), ordering.begin() + k);
    outcome.stopping_time = k;
    total_count +=
        count_for_target(detail::prefix_structure(ambient, outcome), target);
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return make_rational(total_count, total_orderings);
}

// Exact map k -> Pr(J contained in the prefix AND the stop happens at k).
// Only stopping times with positive mass appear.
template <EdgeAmbient Ambient>
KDistribution exhaustive_k_distribution(const Ambient& ambient, int delta,
                                        std::span<const int> j_edges) {
  detail::check_process_preconditions(ambient, delta);
  detail::check_oracle_size(ambient, kOracleMaxEdges);
  detail::check_edge_subset(ambient.edge_count(), j_edges);
  const int m = ambient.edge_count();
  std::vector<int> ordering(m);
  std::iota(ordering.begin(), ordering.end(), 0);
  std::vector<char> in_j(m, 0);
  for (int e : j_edges) in_j[e] = 1;
  const auto j_size =
      static_cast<int>(std::count(in_j.begin(), in_j.end(), 1));
  std::vector<int> degree;
  std::map<long long, BigInt> counts;
  BigInt total_orderings = 0;
  do {
    ++total_orderings;
    const int k = detail::replay_stopping_time(ambient, ordering, delta,
                                               degree);
    int seen = 0;
    for (int i = 0; i < k; ++i) {
      if (in_j[ordering[i]]) ++seen;
    }
    if (seen == j_size) ++counts[k];
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  KDistribution distribution;
  for (const auto& [k, count] : counts) {
    distribution[k] = make_rational(count, total_orderings);
  }
  return distribution;
}

}  // namespace mindeg
