#include "falkkit/falk.hpp"

#include <future>

#include "falkkit/error.hpp"
#include "falkkit/realization.hpp"

namespace falkkit {

std::int64_t falk_formula(int n, std::int64_t dim_A2, std::int64_t dim_I3_2) {
  return 2 * binomial(n + 1, 3) - n * dim_A2 + binomial(n, 3) - dim_I3_2;
}

RankPipeline rank_pipeline(const GainGraph& g) {
  ValidationReport report = validate(g);
  if (!report.passes({Hypothesis::H4, Hypothesis::H5})) {
    throw HypothesisError("the hyperplane arrangement requires H4 and H5 (distinct hyperplanes)");
  }
  RankPipeline r;
  r.n = g.num_edges();
  r.dependent = dependent_3sets(g);
  r.dim_I2 = dim_I2(r.n, r.dependent);
  r.dim_A2 = static_cast<std::size_t>(binomial(r.n, 2)) - r.dim_I2;
  r.dim_I3_2 = dim_I3_2(r.n, r.dependent);
  r.f3 = span_F3(r.n, r.dependent);
  r.phi3 = falk_formula(r.n, static_cast<std::int64_t>(r.dim_A2), static_cast<std::int64_t>(r.dim_I3_2));
  return r;
}

std::int64_t phi3_rank(const GainGraph& g) { return rank_pipeline(g).phi3; }

std::int64_t phi3_combinatorial(const PatternCounts& c) {
  return 2 * (c.k3 + c.k4 + c.d3 + c.d21 + c.k22 + c.k33 + c.gcirc + c.g2 + c.theta) + 5 * c.d31 + c.g1;
}

std::int64_t dim_I3_2_closed_form(int n, const PatternCounts& c) {
  return static_cast<std::int64_t>(n - 2) * (c.k3 + c.d21 + c.k22 + c.theta) - 2 * c.k4 - 2 * c.d3 - 2 * c.gcirc -
         2 * c.k33 - 5 * c.d31 - c.g1 - 2 * c.g2;
}

std::optional<bool> FalkReport::agree() const {
  if (!rank || !phi3_combinatorial) return std::nullopt;
  return rank->phi3 == *phi3_combinatorial;
}

FalkReport verify(const GainGraph& g) {
  FalkReport report;
  report.n = g.num_edges();
  report.hypotheses = validate(g);
  report.triangles = triangles(g);

  std::future<PatternCensus> census;
  if (report.hypotheses.all_pass()) {
    census = std::async(std::launch::async, [&g] { return falkkit::census(g); });
  } else {
    report.combinatorial_withheld = "hypotheses failing:";
    for (Hypothesis h : report.hypotheses.failing()) report.combinatorial_withheld += " " + std::string(hypothesis_name(h));
  }

  if (report.hypotheses.passes({Hypothesis::H4, Hypothesis::H5})) {
    report.rank = rank_pipeline(g);
  } else {
    report.rank_withheld = "hyperplanes not distinct: H4/H5 failing";
  }

  if (census.valid()) {
    report.census = census.get();
    report.phi3_combinatorial = phi3_combinatorial(report.census->counts);
  }
  return report;
}

}  // namespace falkkit
