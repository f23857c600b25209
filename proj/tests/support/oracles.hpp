#ifndef FALKKIT_TESTS_ORACLES_HPP
#define FALKKIT_TESTS_ORACLES_HPP

// Brute-force reference computations. None of these call the library's
// circle search, matcher, wedge/boundary code or sparse elimination.

#include <gmpxx.h>

#include <vector>

#include "falkkit/bias_patterns.hpp"
#include "falkkit/gain_graph.hpp"

namespace falkkit::testing {

struct OracleCircle {
  EdgeSet key;
  bool balanced;
};

/// Every circle with at most `max_length` edges, found by testing each edge
/// subset for the circle shape (connected, all degrees 2), sorted by
/// (length, key).
std::vector<OracleCircle> brute_force_circles(const GainGraph& g, int max_length);
std::vector<EdgeSet> brute_force_balanced(const GainGraph& g, int max_length);

/// Exhaustive biased-graph isomorphism over all vertex permutations and all
/// edge bijections compatible with them.
bool brute_force_biased_iso(const GainGraph& a, const GainGraph& b);

/// Every |E(pattern)|-subset of host edges whose subgraph is isomorphic to
/// `pattern` by brute_force_biased_iso.
std::vector<EdgeSet> brute_force_occurrences(const GainGraph& host, const GainGraph& pattern);

/// Fraction-free (Bareiss) rank of a dense integer matrix.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m);

/// Dense rows of d e_S over the C(n,2) pairs.
std::vector<std::vector<mpz_class>> dense_boundary_rows(int n, const std::vector<Triple>& sets);
/// Dense rows of e_t d e_S over the C(n,3) triples; t ranges over all edges,
/// or only t not in S when `f3_only`. Signs come from inversion counts.
std::vector<std::vector<mpz_class>> dense_wedge_rows(int n, const std::vector<Triple>& sets, bool f3_only);

/// 3-sets whose normals are dependent, via 3x3 minors of the realization
/// written out by hand (x_tail - g x_head, x_u for loops).
std::vector<Triple> minor_dependent_3sets(const GainGraph& g);

}  // namespace falkkit::testing

#endif
