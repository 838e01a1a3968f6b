#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <mindeg/counting.hpp>
#include <mindeg/errors.hpp>
#include <mindeg/graph.hpp>
#include <mindeg/random.hpp>
#include <mindeg/rational.hpp>

// The random process itself: edges of the ambient structure arrive in a
// uniformly random order and the clock stops the first time every vertex
// has degree >= delta. Simulation is reproducible per trial (see
// random.hpp) and all estimator tallies are exact integers, reduced to
// doubles only at the very end, so results do not depend on how trials are
// scheduled.

namespace mindeg {

// The realized ordering prefix e_1 .. e_k and its stopping time k. The
// prefix always reaches minimum degree delta exactly at its last edge.
struct ProcessOutcome {
  std::vector<int> ordering_prefix;
  int stopping_time = 0;
};

// Monte Carlo mean with standard error (sample standard deviation divided
// by sqrt(trials)). Reproducible: (seed, trials, instance) determines it.
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long trials = 0;
  std::uint64_t seed = 0;
};

struct StoppingTimeSummary {
  double mean = 0.0;
  double stddev = 0.0;
  std::map<long long, long long> histogram;  // k -> trials stopping at k
};

namespace detail {

template <EdgeAmbient Ambient>
void check_process_preconditions(const Ambient& ambient, int delta) {
  if (delta < 1) {
    throw std::invalid_argument("run_process: delta must be positive");
  }
  if (ambient.min_degree() < delta) {
    throw PreconditionError(
        "run_process: threshold unreachable, ambient minimum degree " +
        std::to_string(ambient.min_degree()) + " < delta " +
        std::to_string(delta));
  }
}

inline void check_edge_subset(int edge_count, std::span<const int> edges) {
  for (int e : edges) {
    if (e < 0 || e >= edge_count) {
      throw std::invalid_argument("edge index " + std::to_string(e) +
                                  " out of range");
    }
  }
}

}  // namespace detail

// One realization for (seed, trial_index): a partial Fisher-Yates walk that
// draws the next edge uniformly from the unchosen remainder and stops as
// soon as no vertex is left below the threshold. The tail of the
// permutation is never materialized.
template <EdgeAmbient Ambient>
ProcessOutcome run_process(const Ambient& ambient, int delta,
                           std::uint64_t seed, std::uint64_t trial_index) {
  detail::check_process_preconditions(ambient, delta);
  const int m = ambient.edge_count();
  Xoshiro256 rng = trial_rng(seed, trial_index);
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> degree(ambient.vertex_count(), 0);
  int below_threshold = ambient.vertex_count();
  ProcessOutcome outcome;
  for (int i = 0; i < m && below_threshold > 0; ++i) {
    const auto j = i + static_cast<int>(rng.below(m - i));
    std::swap(pool[i], pool[j]);
    const int e = pool[i];
    outcome.ordering_prefix.push_back(e);
    for (int v : ambient.edge_vertices(e)) {
      if (++degree[v] == delta) {
        --below_threshold;
      }
    }
  }
  outcome.stopping_time = static_cast<int>(outcome.ordering_prefix.size());
  return outcome;
}

// True iff every edge of J appears in the realized prefix.
template <EdgeAmbient Ambient>
bool contains_edges(const Ambient& ambient, const ProcessOutcome& outcome,
                    std::span<const int> j_edges) {
  detail::check_edge_subset(ambient.edge_count(), j_edges);
  std::vector<char> in_prefix(ambient.edge_count(), 0);
  for (int e : outcome.ordering_prefix) {
    in_prefix[e] = 1;
  }
  for (int e : j_edges) {
    if (!in_prefix[e]) return false;
  }
  return true;
}

// Estimates Pr(J contained in the stopped subgraph).
template <EdgeAmbient Ambient>
Estimate monte_carlo_inclusion(const Ambient& ambient, int delta,
                               std::span<const int> j_edges, long long trials,
                               std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("monte_carlo_inclusion: need trials >= 1");
  }
  detail::check_process_preconditions(ambient, delta);
  detail::check_edge_subset(ambient.edge_count(), j_edges);
  std::vector<char> in_prefix(ambient.edge_count(), 0);
  long long hits = 0;
  for (long long t = 0; t < trials; ++t) {
    const ProcessOutcome outcome = run_process(ambient, delta, seed, t);
    for (int e : outcome.ordering_prefix) in_prefix[e] = 1;
    bool contained = true;
    for (int e : j_edges) {
      if (!in_prefix[e]) {
        contained = false;
        break;
      }
    }
    for (int e : outcome.ordering_prefix) in_prefix[e] = 0;
    hits += contained ? 1 : 0;
  }
  Estimate estimate;
  estimate.trials = trials;
  estimate.seed = seed;
  estimate.mean = to_double(make_rational(hits, trials));
  if (trials > 1) {
    // Indicator tallies: sum of squares equals the sum.
    const Rational variance =
        (make_rational(hits) - make_rational(BigInt(hits) * hits, trials)) /
        Rational(trials - 1);
    estimate.std_error = std::sqrt(to_double(variance) / trials);
  }
  return estimate;
}

namespace detail {

// Exact counting per trial becomes the bottleneck quickly; these caps keep
// a 10^5-trial run in the seconds range. Beyond them, estimate inclusion of
// a fixed copy instead and scale by the number of copies.
inline void check_count_cap(const Graph& g, CountTarget target) {
  const int v = g.vertex_count();
  const bool ok = (target == CountTarget::kBipartiteMatchings && v <= 24) ||
                  (target == CountTarget::kPerfectMatchings && v <= 16) ||
                  (target == CountTarget::kHamiltonianCycles && v <= 12);
  if (!ok) {
    throw SizeCapError(
        "monte_carlo_expected_count: instance too large for exact per-trial "
        "counting; use monte_carlo_inclusion on a fixed copy and scale by "
        "the copy count");
  }
}

inline void check_count_cap(const UniformHypergraph& hg, CountTarget target) {
  if (target != CountTarget::kHypergraphMatchings ||
      hg.vertex_count() > 16) {
    throw SizeCapError(
        "monte_carlo_expected_count: instance too large for exact per-trial "
        "counting; use monte_carlo_inclusion on a fixed copy and scale by "
        "the copy count");
  }
}

inline Graph prefix_structure(const Graph& g, const ProcessOutcome& outcome) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(outcome.ordering_prefix.size());
  for (int e : outcome.ordering_prefix) {
    const auto [u, v] = g.edge_vertices(e);
    edges.emplace_back(u, v);
  }
  return Graph(g.vertex_count(), std::move(edges));
}

inline UniformHypergraph prefix_structure(const UniformHypergraph& hg,
                                          const ProcessOutcome& outcome) {
  std::vector<std::vector<int>> edges;
  edges.reserve(outcome.ordering_prefix.size());
  for (int e : outcome.ordering_prefix) {
    const auto span = hg.edge_vertices(e);
    edges.emplace_back(span.begin(), span.end());
  }
  return UniformHypergraph(hg.vertex_count(), hg.arity(), std::move(edges));
}

}  // namespace detail

// Estimates the expected number of target structures in the stopped
// subgraph by exact counting per trial.
template <EdgeAmbient Ambient>
Estimate monte_carlo_expected_count(const Ambient& ambient, int delta,
                                    CountTarget target, long long trials,
                                    std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument(
        "monte_carlo_expected_count: need trials >= 1");
  }
  detail::check_process_preconditions(ambient, delta);
  detail::check_count_cap(ambient, target);
  BigInt sum = 0;
  BigInt sum_squares = 0;
  for (long long t = 0; t < trials; ++t) {
    const ProcessOutcome outcome = run_process(ambient, delta, seed, t);
    const BigInt count =
        count_for_target(detail::prefix_structure(ambient, outcome), target);
    sum += count;
    sum_squares += count * count;
  }
  Estimate estimate;
  estimate.trials = trials;
  estimate.seed = seed;
  estimate.mean = to_double(make_rational(sum, trials));
  if (trials > 1) {
    const Rational variance =
        (Rational(sum_squares) - make_rational(sum * sum, trials)) /
        Rational(trials - 1);
    estimate.std_error = std::sqrt(to_double(variance) / trials);
  }
  return estimate;
}

// Empirical statistics of the stopping time itself.
template <EdgeAmbient Ambient>
StoppingTimeSummary stopping_time_summary(const Ambient& ambient, int delta,
                                          long long trials,
                                          std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("stopping_time_summary: need trials >= 1");
  }
  detail::check_process_preconditions(ambient, delta);
  StoppingTimeSummary summary;
  BigInt sum = 0;
  BigInt sum_squares = 0;
  for (long long t = 0; t < trials; ++t) {
    const ProcessOutcome outcome = run_process(ambient, delta, seed, t);
    const long long k = outcome.stopping_time;
    ++summary.histogram[k];
    sum += k;
    sum_squares += BigInt(k) * k;
  }
  summary.mean = to_double(make_rational(sum, trials));
  if (trials > 1) {
    const Rational variance =
        (Rational(sum_squares) - make_rational(sum * sum, trials)) /
        Rational(trials - 1);
    summary.stddev = std::sqrt(to_double(variance));
  }
  return summary;
}

}  // namespace mindeg
