#pragma once

#include <algorithm>
#include <map>

#include <mindeg/errors.hpp>
#include <mindeg/graph.hpp>
#include <mindeg/rational.hpp>

// Closed forms for the minimum-degree-stopped process: edges of an ambient
// structure G arrive in uniformly random order and stop at the first moment
// every vertex has degree delta. Everything here is exact rational
// arithmetic; no floating point on any path.

namespace mindeg {

// C(a, b), zero when b lies outside [0, a].
inline BigInt binomial(const BigInt& a, const BigInt& b) {
  if (a < 0) {
    throw std::invalid_argument("binomial: negative upper argument");
  }
  if (b < 0 || b > a) return 0;
  const BigInt k = std::min(b, a - b);
  BigInt result = 1;
  for (BigInt i = 1; i <= k; ++i) {
    result *= a - k + i;
    result /= i;  // exact: result is C(a-k+i, i) here
  }
  return result;
}

inline BigInt binomial(long long a, long long b) {
  return binomial(BigInt(a), BigInt(b));
}

namespace detail {

// As binomial, but a negative upper argument means "no way to choose" and
// yields zero. Used by the per-k decomposition, whose terms truncate.
inline BigInt binomial_or_zero(const BigInt& a, const BigInt& b) {
  return a < 0 ? BigInt(0) : binomial(a, b);
}

inline void require_positive(long long value, const char* what) {
  if (value < 1) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

inline void require_nonnegative(long long value, const char* what) {
  if (value < 0) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative");
  }
}

}  // namespace detail

// Probability that one fixed spanning copy with h edges, all of whose
// vertices have degree exactly delta, is contained in the stopped subgraph
// of a regular ambient graph. `surplus` is the ambient degree minus delta:
//
//     2 / C(h + surplus, h)  -  1 / C(h + 2*surplus, h)
//
// The copy must be degree-regular; for targets that only have minimum
// degree delta see copy_inclusion_probability, and the two genuinely
// disagree (spanning path of a triangle: 1/3 there, 1/2 here).
inline Rational inclusion_fraction_regular(long long h, long long surplus) {
  detail::require_positive(h, "inclusion_fraction_regular: h");
  detail::require_nonnegative(surplus, "inclusion_fraction_regular: surplus");
  return make_rational(2, binomial(h + surplus, h)) -
         make_rational(1, binomial(h + 2 * surplus, h));
}

// Expected number of perfect matchings once every vertex of K_{n,n} has
// been touched: n! * (2 / C(2n-1, n) - 1 / C(3n-2, n)).
inline Rational expected_matchings_knn(long long n) {
  detail::require_positive(n, "expected_matchings_knn: n");
  return Rational(factorial(n)) * inclusion_fraction_regular(n, n - 1);
}

// Fraction of the perfect matchings of a d-regular graph on 2n vertices
// expected in the stopped subgraph (threshold 1).
inline Rational matching_fraction_regular(long long n, long long d) {
  detail::require_positive(n, "matching_fraction_regular: n");
  detail::require_positive(d, "matching_fraction_regular: d");
  return inclusion_fraction_regular(n, d - 1);
}

// Fraction of the Hamiltonian cycles of a d-regular graph on n vertices
// expected in the stopped subgraph (threshold 2).
inline Rational hamilton_fraction_regular(long long n, long long d) {
  if (n < 3) {
    throw std::invalid_argument("hamilton_fraction_regular: n must be >= 3");
  }
  if (d < 2) {
    throw std::invalid_argument("hamilton_fraction_regular: d must be >= 2");
  }
  return inclusion_fraction_regular(n, d - 2);
}

namespace detail {

// i-th inclusion-exclusion term (unsigned) for the r-partite transversal
// process.
inline Rational rpartite_term(long long n, long long r, long long i) {
  using boost::multiprecision::pow;
  const BigInt top = pow(BigInt(n), static_cast<unsigned>(r)) -
                     pow(BigInt(n - 1), static_cast<unsigned>(i)) *
                         pow(BigInt(n), static_cast<unsigned>(r - i)) +
                     n - 1;
  return make_rational(binomial(r, i), binomial(top, BigInt(n)));
}

// i-th inclusion-exclusion term (unsigned) for the K_{rn} r-subset process.
inline Rational rsubset_term(long long n, long long r, long long i) {
  const BigInt top =
      binomial(n * r, r) - binomial(n * r - i, r) + n - 1;
  return make_rational(binomial(r, i), binomial(top, BigInt(n)));
}

}  // namespace detail

// Expected number of perfect matchings when edges are transversal r-sets of
// r parts of size n (threshold 1):
//
//   (n!)^(r-1) * sum_{i=1}^{r} (-1)^(i-1) C(r,i)
//                / C(n^r - (n-1)^i n^(r-i) + n - 1, n)
inline Rational expected_matchings_rpartite(long long n, long long r) {
  detail::require_positive(n, "expected_matchings_rpartite: n");
  if (r < 2) {
    throw std::invalid_argument("expected_matchings_rpartite: r must be >= 2");
  }
  Rational sum = 0;
  for (long long i = 1; i <= r; ++i) {
    const Rational term = detail::rpartite_term(n, r, i);
    if (i % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  using boost::multiprecision::pow;
  return Rational(pow(factorial(n), static_cast<unsigned>(r - 1))) * sum;
}

// Expected number of perfect matchings when edges are arbitrary r-subsets
// of rn vertices (threshold 1):
//
//   (rn)!/((r!)^n n!) * sum_{i=1}^{r} (-1)^(i-1) C(r,i)
//                       / C( C(nr,r) - C(nr-i,r) + n - 1, n )
inline Rational expected_matchings_rsubsets(long long n, long long r) {
  detail::require_positive(n, "expected_matchings_rsubsets: n");
  if (r < 2) {
    throw std::invalid_argument("expected_matchings_rsubsets: r must be >= 2");
  }
  Rational sum = 0;
  for (long long i = 1; i <= r; ++i) {
    const Rational term = detail::rsubset_term(n, r, i);
    if (i % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  using boost::multiprecision::pow;
  const Rational matchings = make_rational(
      factorial(n * r),
      pow(factorial(r), static_cast<unsigned>(n)) * factorial(n));
  return matchings * sum;
}

// Probability that a fixed copy J (h edges, every vertex of J at degree
// exactly delta) lies in the stopped subgraph with its final edge being a
// given edge uv. surplus_u/surplus_v are the ambient degree surpluses of
// the endpoints. Built from the ordered-arrival blocks
// (h-1)! s! / (h+s)! = 1 / (h C(h+s, h)): one per endpoint that can be the
// last vertex to reach the threshold, minus the double-counted joint event.
inline Rational last_edge_inclusion_probability(long long h,
                                                long long surplus_u,
                                                long long surplus_v) {
  detail::require_positive(h, "last_edge_inclusion_probability: h");
  detail::require_nonnegative(surplus_u,
                              "last_edge_inclusion_probability: surplus");
  detail::require_nonnegative(surplus_v,
                              "last_edge_inclusion_probability: surplus");
  return make_rational(1, h * binomial(h + surplus_u, h)) +
         make_rational(1, h * binomial(h + surplus_v, h)) -
         make_rational(1, h * binomial(h + surplus_u + surplus_v, h));
}

// Expected number of spanning copies of a delta-regular pattern H with h
// edges in the stopped subgraph of an arbitrary (not necessarily regular)
// ambient graph. `copies_through_edge` maps every ambient edge index to the
// number of copies of H using that edge.
inline Rational expected_copies_by_edge_counts(
    const Graph& g, int delta, long long h,
    const std::map<int, BigInt>& copies_through_edge) {
  detail::require_positive(delta, "expected_copies_by_edge_counts: delta");
  detail::require_positive(h, "expected_copies_by_edge_counts: h");
  if (g.min_degree() < delta) {
    throw PreconditionError(
        "expected_copies_by_edge_counts: ambient minimum degree is below the "
        "threshold");
  }
  // A delta-regular spanning pattern has exactly delta*V/2 edges. Patterns
  // that merely have minimum degree delta are outside this formula's scope:
  // for the spanning path of a triangle it would claim 1/2 where exhaustive
  // enumeration gives 1/3.
  if (2 * h != static_cast<long long>(delta) * g.vertex_count()) {
    throw PreconditionError(
        "expected_copies_by_edge_counts: pattern is not delta-regular "
        "(2h != delta*V); the formula does not apply, cf. the spanning path "
        "of K_3");
  }
  Rational total = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto it = copies_through_edge.find(e);
    if (it == copies_through_edge.end()) {
      throw std::invalid_argument(
          "expected_copies_by_edge_counts: no copy count for edge " +
          std::to_string(e));
    }
    if (it->second == 0) continue;
    const auto [u, v] = g.edge_vertices(e);
    total += last_edge_inclusion_probability(h, g.degree(u) - delta,
                                             g.degree(v) - delta) *
             Rational(it->second);
  }
  return total;
}

// Exact inclusion probability for an arbitrary fixed spanning subgraph J
// with minimum degree >= delta: Pr(J is contained in the stopped
// subgraph). An edge of J can only be the stopping edge through an
// endpoint whose J-degree is exactly delta (a higher J-degree endpoint has
// already passed the threshold once all of J is present), so each endpoint
// term carries that indicator, and the joint correction applies only when
// both endpoints sit at the threshold. For delta-regular J every indicator
// fires and the regular closed form is recovered.
inline Rational copy_inclusion_probability(const Graph& g, const Graph& j,
                                           int delta) {
  detail::require_positive(delta, "copy_inclusion_probability: delta");
  if (g.vertex_count() != j.vertex_count()) {
    throw std::invalid_argument(
        "copy_inclusion_probability: vertex counts differ");
  }
  for (const auto& [u, v] : j.edges()) {
    if (!g.has_edge(u, v)) {
      throw PreconditionError(
          "copy_inclusion_probability: copy edge not present in the ambient "
          "graph");
    }
  }
  if (j.vertex_count() == 0) return 1;
  if (j.min_degree() < delta) {
    throw PreconditionError(
        "copy_inclusion_probability: copy minimum degree is below the "
        "threshold");
  }
  const long long h = j.edge_count();
  Rational total = 0;
  for (const auto& [u, v] : j.edges()) {
    const bool u_at_threshold = j.degree(u) == delta;
    const bool v_at_threshold = j.degree(v) == delta;
    const long long surplus_u = g.degree(u) - delta;
    const long long surplus_v = g.degree(v) - delta;
    if (u_at_threshold) {
      total += make_rational(1, h * binomial(h + surplus_u, h));
    }
    if (v_at_threshold) {
      total += make_rational(1, h * binomial(h + surplus_v, h));
    }
    if (u_at_threshold && v_at_threshold) {
      total -= make_rational(1, h * binomial(h + surplus_u + surplus_v, h));
    }
  }
  return total;
}

// Pr(J contained in the first k edges AND the process stops exactly at k)
// for a fixed delta-regular copy J with h edges inside an ambient graph
// with edge_total edges. Evaluated in the cancelled form
//
//   h * (2 C(E-h-s, k-h) - C(E-h-2s, k-h)) / (E * C(E-1, k-1))
//
// to keep the big integers small (the raw form carries E!).
inline Rational contribution_at_k(long long edge_total, long long h,
                                  long long surplus, long long k) {
  detail::require_positive(h, "contribution_at_k: h");
  detail::require_nonnegative(surplus, "contribution_at_k: surplus");
  if (edge_total < h) {
    throw std::invalid_argument(
        "contribution_at_k: edge total below the copy size");
  }
  if (k < h || k > edge_total) {
    throw std::invalid_argument("contribution_at_k: k out of range");
  }
  const BigInt numerator =
      2 * detail::binomial_or_zero(edge_total - h - surplus, k - h) -
      detail::binomial_or_zero(edge_total - h - 2 * surplus, k - h);
  return make_rational(h * numerator,
                       BigInt(edge_total) * binomial(edge_total - 1, k - 1));
}

// The full per-k table for k in [h, edge_total], zeros included. Totals the
// regular inclusion fraction whenever edge_total >= h + 2*surplus (always
// true for realizable regular instances).
inline KDistribution contribution_distribution(long long edge_total,
                                               long long h,
                                               long long surplus) {
  KDistribution distribution;
  for (long long k = h; k <= edge_total; ++k) {
    distribution[k] = contribution_at_k(edge_total, h, surplus, k);
  }
  return distribution;
}

// Smallest k maximizing contribution_at_k; the maximum sits near
// h*E/(surplus+h).
inline long long argmax_contribution(long long edge_total, long long h,
                                     long long surplus) {
  long long best_k = h;
  Rational best = contribution_at_k(edge_total, h, surplus, h);
  for (long long k = h + 1; k <= edge_total; ++k) {
    const Rational value = contribution_at_k(edge_total, h, surplus, k);
    if (value > best) {
      best = value;
      best_k = k;
    }
  }
  return best_k;
}

}  // namespace mindeg
