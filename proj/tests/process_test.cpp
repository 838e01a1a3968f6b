#include <mindeg/process.hpp>

#include <cmath>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include <mindeg/formulas.hpp>
#include <mindeg/oracle.hpp>

namespace mindeg {
namespace {

Rational rat(long long num, long long den) {
  return make_rational(BigInt(num), BigInt(den));
}

// Replays an outcome and checks the stopping-time minimality invariant:
// the full prefix reaches the threshold and the prefix minus its last edge
// does not.
template <typename Ambient>
void expect_minimal_stop(const Ambient& ambient, const ProcessOutcome& out,
                         int delta) {
  std::vector<int> degree(ambient.vertex_count(), 0);
  const int k = out.stopping_time;
  ASSERT_EQ(k, static_cast<int>(out.ordering_prefix.size()));
  for (int i = 0; i < k; ++i) {
    if (i == k - 1) {
      int min_before = ambient.vertex_count() == 0 ? delta : degree[0];
      for (int v = 0; v < ambient.vertex_count(); ++v) {
        min_before = std::min(min_before, degree[v]);
      }
      ASSERT_LT(min_before, delta) << "stop was not minimal";
    }
    for (int v : ambient.edge_vertices(out.ordering_prefix[i])) {
      ++degree[v];
    }
  }
  int min_after = delta;
  for (int v = 0; v < ambient.vertex_count(); ++v) {
    min_after = std::min(min_after, degree[v]);
  }
  ASSERT_GE(min_after, delta) << "prefix does not reach the threshold";
}

TEST(RunProcessTest, DegenerateStoppingTimes) {
  const Graph k2 = complete_graph(2);
  const Graph k3 = complete_graph(3);
  for (std::uint64_t t = 0; t < 50; ++t) {
    EXPECT_EQ(run_process(k2, 1, 5, t).stopping_time, 1);
    EXPECT_EQ(run_process(k3, 2, 5, t).stopping_time, 3);
    EXPECT_EQ(run_process(k3, 1, 5, t).stopping_time, 2);
  }
}

TEST(RunProcessTest, OutcomeIsDeterminedBySeedAndTrial) {
  const Graph g = complete_bipartite(4);
  const ProcessOutcome a = run_process(g, 1, 123, 9);
  const ProcessOutcome b = run_process(g, 1, 123, 9);
  EXPECT_EQ(a.ordering_prefix, b.ordering_prefix);
  const ProcessOutcome c = run_process(g, 1, 123, 10);
  EXPECT_NE(a.ordering_prefix, c.ordering_prefix);  // overwhelmingly likely
}

TEST(RunProcessTest, StoppingIsAlwaysMinimal) {
  const Graph k4 = complete_graph(4);
  const Graph k33 = complete_bipartite(3);
  const UniformHypergraph h23 = complete_rpartite_hypergraph(2, 3);
  for (std::uint64_t t = 0; t < 200; ++t) {
    expect_minimal_stop(k4, run_process(k4, 2, 77, t), 2);
    expect_minimal_stop(k33, run_process(k33, 1, 77, t), 1);
    expect_minimal_stop(h23, run_process(h23, 1, 77, t), 1);
  }
}

TEST(RunProcessTest, PrefixEdgesAreDistinctValidIndices) {
  const Graph g = complete_bipartite(3);
  for (std::uint64_t t = 0; t < 100; ++t) {
    const ProcessOutcome out = run_process(g, 1, 3, t);
    std::vector<char> seen(g.edge_count(), 0);
    for (int e : out.ordering_prefix) {
      ASSERT_GE(e, 0);
      ASSERT_LT(e, g.edge_count());
      ASSERT_FALSE(seen[e]) << "repeated edge in prefix";
      seen[e] = 1;
    }
  }
}

TEST(RunProcessTest, ParameterValidation) {
  const Graph k3 = complete_graph(3);
  EXPECT_THROW(run_process(k3, 0, 1, 0), std::invalid_argument);
  EXPECT_THROW(run_process(k3, 3, 1, 0), PreconditionError);
}

TEST(ContainsEdgesTest, BasicMembership) {
  const Graph k33 = complete_bipartite(3);
  const ProcessOutcome out = run_process(k33, 1, 11, 0);
  EXPECT_TRUE(contains_edges(k33, out, std::vector<int>{}));
  EXPECT_TRUE(contains_edges(
      k33, out, std::vector<int>{out.ordering_prefix.back()}));
  if (out.stopping_time < k33.edge_count()) {
    std::vector<int> all(k33.edge_count());
    std::iota(all.begin(), all.end(), 0);
    EXPECT_FALSE(contains_edges(k33, out, all));
  }
  EXPECT_THROW(contains_edges(k33, out, std::vector<int>{99}),
               std::invalid_argument);
}

TEST(MonteCarloInclusionTest, AgreesWithExactValueOnK22) {
  const Graph k22 = complete_bipartite(2);
  const Estimate est =
      monte_carlo_inclusion(k22, 1, std::vector<int>{0, 3}, 100000, 4);
  EXPECT_NEAR(est.mean, 0.5, 4 * est.std_error);
  EXPECT_GT(est.std_error, 0);
}

TEST(MonteCarloInclusionTest, CertainEventIsExactlyOne) {
  const Graph k3 = complete_graph(3);
  const Estimate est =
      monte_carlo_inclusion(k3, 2, std::vector<int>{0, 1, 2}, 10, 0);
  EXPECT_EQ(est.mean, 1.0);
  EXPECT_EQ(est.std_error, 0.0);
}

TEST(MonteCarloInclusionTest, AgreesWithTheClosedFormOnK66) {
  const Graph k66 = complete_bipartite(6);
  std::vector<int> diagonal;
  for (int i = 0; i < 6; ++i) diagonal.push_back(i * 6 + i);
  const Estimate est = monte_carlo_inclusion(k66, 1, diagonal, 20000, 31);
  const double exact = to_double(inclusion_fraction_regular(6, 5));
  EXPECT_NEAR(est.mean, exact, 4 * est.std_error);
}

TEST(MonteCarloInclusionTest, MeanStaysInUnitInterval) {
  const Graph k4 = complete_graph(4);
  const Estimate est =
      monte_carlo_inclusion(k4, 1, std::vector<int>{0, 5}, 5000, 2);
  EXPECT_GE(est.mean, 0.0);
  EXPECT_LE(est.mean, 1.0);
}

TEST(MonteCarloExpectedCountTest, AgreesWithExactValues) {
  const Estimate bip = monte_carlo_expected_count(
      complete_bipartite(3), 1, CountTarget::kBipartiteMatchings, 20000, 8);
  EXPECT_NEAR(bip.mean, 36.0 / 35.0, 4 * bip.std_error);

  const Estimate ham = monte_carlo_expected_count(
      complete_graph(4), 2, CountTarget::kHamiltonianCycles, 20000, 8);
  EXPECT_NEAR(ham.mean, 1.0, 4 * ham.std_error);

  const Estimate hyp = monte_carlo_expected_count(
      complete_rpartite_hypergraph(2, 3), 1,
      CountTarget::kHypergraphMatchings, 20000, 8);
  EXPECT_NEAR(hyp.mean, 27.0 / 35.0, 4 * hyp.std_error);
}

TEST(MonteCarloExpectedCountTest, DominatesInclusionOfAnyFixedCopy) {
  const Graph k22 = complete_bipartite(2);
  const Estimate count = monte_carlo_expected_count(
      k22, 1, CountTarget::kBipartiteMatchings, 20000, 5);
  const Estimate inclusion =
      monte_carlo_inclusion(k22, 1, std::vector<int>{0, 3}, 20000, 5);
  EXPECT_GE(count.mean, inclusion.mean);
}

TEST(MonteCarloExpectedCountTest, SizeCapPointsToInclusion) {
  try {
    monte_carlo_expected_count(complete_bipartite(13), 1,
                               CountTarget::kBipartiteMatchings, 10, 0);
    FAIL() << "expected SizeCapError";
  } catch (const SizeCapError& e) {
    EXPECT_NE(std::string(e.what()).find("monte_carlo_inclusion"),
              std::string::npos);
  }
  EXPECT_THROW(
      monte_carlo_expected_count(complete_graph(13), 2,
                                 CountTarget::kHamiltonianCycles, 10, 0),
      SizeCapError);
}

TEST(MonteCarloTest, IdenticalInputsReproduceIdenticalEstimates) {
  const Graph g = complete_bipartite(4);
  std::vector<int> diagonal{0, 5, 10, 15};
  const Estimate a = monte_carlo_inclusion(g, 1, diagonal, 5000, 999);
  const Estimate b = monte_carlo_inclusion(g, 1, diagonal, 5000, 999);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
}

TEST(MonteCarloTest, TrialsArePartitionIndependent) {
  // The estimate over [0, N) must equal what any partition of the trial
  // indices reconstructs, because trial t depends only on (seed, t).
  const Graph g = complete_bipartite(3);
  const std::vector<int> diagonal{0, 4, 8};
  const long long trials = 2000;
  const std::uint64_t seed = 246;
  const Estimate whole = monte_carlo_inclusion(g, 1, diagonal, trials, seed);
  long long hits = 0;
  for (long long t = 0; t < trials; ++t) {
    const ProcessOutcome out = run_process(g, 1, seed, t);
    hits += contains_edges(g, out, diagonal) ? 1 : 0;
  }
  EXPECT_EQ(whole.mean, static_cast<double>(hits) / trials);
}

TEST(MonteCarloTest, ZeroTrialsIsAnError) {
  const Graph k3 = complete_graph(3);
  EXPECT_THROW(monte_carlo_inclusion(k3, 1, std::vector<int>{0}, 0, 0),
               std::invalid_argument);
  EXPECT_THROW(monte_carlo_expected_count(
                   k3, 1, CountTarget::kPerfectMatchings, 0, 0),
               std::invalid_argument);
}

TEST(StoppingTimeSummaryTest, DegenerateCasesAreExact) {
  const StoppingTimeSummary k3 =
      stopping_time_summary(complete_graph(3), 1, 500, 21);
  EXPECT_EQ(k3.mean, 2.0);
  EXPECT_EQ(k3.stddev, 0.0);
  ASSERT_EQ(k3.histogram.size(), 1u);
  EXPECT_EQ(k3.histogram.at(2), 500);

  const StoppingTimeSummary k2 =
      stopping_time_summary(complete_graph(2), 1, 100, 21);
  EXPECT_EQ(k2.mean, 1.0);
}

TEST(StoppingTimeSummaryTest, LargeBipartiteMeanSitsInTheCoarseBand) {
  const StoppingTimeSummary summary =
      stopping_time_summary(complete_bipartite(64), 1, 200, 7);
  const double scale = 64.0 * std::log(64.0);
  EXPECT_GE(summary.mean, 0.7 * scale);
  EXPECT_LE(summary.mean, 1.5 * scale);
  long long total = 0;
  for (const auto& [k, count] : summary.histogram) total += count;
  EXPECT_EQ(total, 200);
}

TEST(ProcessDistributionTest, TriangleOutcomesAreUniform) {
  // Threshold one on the triangle always stops after two edges; the six
  // ordered prefixes must be uniform. Chi-square with five degrees of
  // freedom at significance 0.001.
  const Graph k3 = complete_graph(3);
  const long long trials = 100000;
  std::map<std::pair<int, int>, long long> cells;
  for (long long t = 0; t < trials; ++t) {
    const ProcessOutcome out = run_process(k3, 1, 13, t);
    ASSERT_EQ(out.stopping_time, 2);
    ++cells[{out.ordering_prefix[0], out.ordering_prefix[1]}];
  }
  ASSERT_EQ(cells.size(), 6u);
  const double expected = trials / 6.0;
  double chi_square = 0;
  for (const auto& [cell, observed] : cells) {
    const double diff = observed - expected;
    chi_square += diff * diff / expected;
  }
  EXPECT_LT(chi_square, 20.515);  // df 5, p = 0.001
}

TEST(ProcessDistributionTest, EmpiricalInclusionMatchesTheOracleOnK3) {
  const Graph k3 = complete_graph(3);
  const std::vector<int> path{0, 2};
  const Estimate est = monte_carlo_inclusion(k3, 1, path, 100000, 17);
  const double exact =
      to_double(exhaustive_inclusion_probability(k3, 1, path));
  EXPECT_EQ(exact, to_double(rat(1, 3)));
  EXPECT_NEAR(est.mean, exact, 4 * est.std_error);
}

}  // namespace
}  // namespace mindeg
