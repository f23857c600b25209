#ifndef FALKKIT_FALK_HPP
#define FALKKIT_FALK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "falkkit/bias_patterns.hpp"
#include "falkkit/gain_graph.hpp"
#include "falkkit/os_algebra.hpp"

namespace falkkit {

/// Intermediate dimensions of the linear-algebra route.
struct RankPipeline {
  int n = 0;
  std::vector<Triple> dependent;  ///< dependent 3-sets of the arrangement
  std::size_t dim_I2 = 0;
  std::size_t dim_A2 = 0;
  std::size_t dim_I3_2 = 0;
  SpanF3 f3;
  std::int64_t phi3 = 0;
};

/// 2 C(n+1,3) - n dim A^2 + C(n,3) - dim I^3_2.
std::int64_t falk_formula(int n, std::int64_t dim_A2, std::int64_t dim_I3_2);

/// Linear-algebra route. The dependent 3-sets come from the hyperplane
/// realization, not from the combinatorial triangle classifier. Throws
/// HypothesisError unless H4 and H5 hold.
RankPipeline rank_pipeline(const GainGraph& g);
std::int64_t phi3_rank(const GainGraph& g);

/// 2(k3+k4+d3+d21+k22+k33+gcirc+g2+theta) + 5 d31 + g1.
std::int64_t phi3_combinatorial(const PatternCounts& c);

/// Closed form of dim I^3_2 in terms of the census:
/// (n-2)(k3+d21+k22+theta) - 2k4 - 2d3 - 2gcirc - 2k33 - 5d31 - g1 - 2g2.
std::int64_t dim_I3_2_closed_form(int n, const PatternCounts& c);

struct FalkReport {
  int n = 0;
  ValidationReport hypotheses;
  std::vector<Triangle> triangles;

  /// Present when H4 and H5 hold.
  std::optional<RankPipeline> rank;
  /// Present when H1..H5 hold.
  std::optional<PatternCensus> census;
  std::optional<std::int64_t> phi3_combinatorial;

  /// Why a route was withheld; empty when it ran.
  std::string rank_withheld;
  std::string combinatorial_withheld;

  std::optional<std::int64_t> phi3_rank() const {
    return rank ? std::optional<std::int64_t>(rank->phi3) : std::nullopt;
  }
  /// Set only when both values exist.
  std::optional<bool> agree() const;
};

/// Runs validation and both routes (concurrently), withholding each route
/// whose hypotheses fail.
FalkReport verify(const GainGraph& g);

}  // namespace falkkit

#endif  // FALKKIT_FALK_HPP
