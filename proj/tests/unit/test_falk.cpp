#include <doctest.h>

#include <random>

#include "falkkit/error.hpp"
#include "falkkit/falk.hpp"
#include "support/graphs.hpp"
#include "support/random_graphs.hpp"

using namespace falkkit;
using namespace falkkit::testing;

TEST_CASE("falk formula") {
  CHECK(falk_formula(14, 78, 151) == 31);
  CHECK(falk_formula(3, 3, 0) == 0);
}

TEST_CASE("phi3 by both routes") {
  SUBCASE("fourteen-edge example") {
    CHECK(phi3_rank(final_example()) == 31);
    CHECK(phi3_combinatorial(count_patterns(final_example())) == 31);
    RankPipeline r = rank_pipeline(final_example());
    CHECK(r.dim_I2 == 13);
    CHECK(r.dim_A2 == 78);
    CHECK(r.dim_I3_2 == 151);
    CHECK(r.f3.size == 143);
  }
  SUBCASE("triangle-free") {
    GainGraph g = make_graph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 2}});
    CHECK(phi3_rank(g) == 0);
    CHECK(phi3_combinatorial(count_patterns(g)) == 0);
  }
  SUBCASE("all-zero counts") { CHECK(phi3_combinatorial(PatternCounts{}) == 0); }
  SUBCASE("K4") { CHECK(phi3_rank(balanced_k4()) == 10); }
  SUBCASE("rank route refuses coincident hyperplanes") {
    CHECK_THROWS_AS(rank_pipeline(make_graph(1, {{1, 1, 1}})), HypothesisError);
  }
}

TEST_CASE("phi3 ladder on the reference patterns") {
  struct Rung {
    PatternName name;
    std::int64_t phi3;
  };
  const Rung rungs[] = {{PatternName::K3, 2},     {PatternName::D21, 2},    {PatternName::K22, 2},
                        {PatternName::Theta3, 2}, {PatternName::K4, 10},    {PatternName::D3, 10},
                        {PatternName::K33, 10},   {PatternName::Gcirc, 10}, {PatternName::G1, 15},
                        {PatternName::D31, 17},   {PatternName::G2, 20}};
  for (const Rung& r : rungs) {
    INFO(pattern_label(r.name));
    const GainGraph& g = pattern(r.name).reference;
    CHECK(phi3_rank(g) == r.phi3);
    CHECK(phi3_combinatorial(count_patterns(g)) == r.phi3);
  }
}

TEST_CASE("closed form of dim I3_2") {
  // The loose handcuff alone: one triangle, no F3 elements.
  const GainGraph& k22 = pattern(PatternName::K22).reference;
  CHECK(rank_pipeline(k22).dim_I3_2 == 1);
  CHECK(dim_I3_2_closed_form(3, count_patterns(k22)) == 1);
  CHECK(dim_I3_2_closed_form(14, count_patterns(final_example())) == 151);
  for (const Pattern& p : atlas()) {
    if (p.name == PatternName::B2) continue;
    INFO(pattern_label(p.name));
    CHECK(dim_I3_2_closed_form(p.reference.num_edges(), count_patterns(p.reference)) ==
          static_cast<std::int64_t>(rank_pipeline(p.reference).dim_I3_2));
  }
}

TEST_CASE("verify") {
  SUBCASE("fourteen-edge example") {
    FalkReport r = verify(final_example());
    CHECK(r.n == 14);
    CHECK(r.triangles.size() == 13);
    CHECK(r.phi3_combinatorial == 31);
    CHECK(r.phi3_rank() == 31);
    CHECK(r.agree() == true);
    CHECK(r.rank_withheld.empty());
    CHECK(r.combinatorial_withheld.empty());
  }
  SUBCASE("D31") {
    FalkReport r = verify(pattern(PatternName::D31).reference);
    CHECK(r.phi3_combinatorial == 17);
    CHECK(r.agree() == true);
  }
  SUBCASE("B2 keeps the rank route only") {
    FalkReport r = verify(pattern(PatternName::B2).reference);
    CHECK_FALSE(r.phi3_combinatorial.has_value());
    CHECK_FALSE(r.census.has_value());
    CHECK(r.combinatorial_withheld.find("H1") != std::string::npos);
    CHECK(r.phi3_rank() == 8);  // four generic lines in the plane
    CHECK_FALSE(r.agree().has_value());
  }
  SUBCASE("coincident hyperplanes withhold both") {
    FalkReport r = verify(make_graph(2, {{1, 2, 1}, {1, 2, 1}}));
    CHECK_FALSE(r.rank.has_value());
    CHECK_FALSE(r.phi3_combinatorial.has_value());
    CHECK_FALSE(r.rank_withheld.empty());
  }
}

TEST_CASE("both routes agree on random graphs") {
  std::mt19937_64 rng(kDefaultSeed + 40);
  for (int i = 0; i < 40; ++i) {
    GainGraph g = i % 2 ? random_planted_graph(rng) : random_valid_graph(rng);
    INFO(serialize(g));
    RankPipeline r = rank_pipeline(g);
    PatternCounts c = count_patterns(g);
    CHECK(r.phi3 == phi3_combinatorial(c));
    CHECK(static_cast<std::int64_t>(r.dim_I3_2) == dim_I3_2_closed_form(g.num_edges(), c));
    CHECK(r.dim_I2 == static_cast<std::size_t>(c.k3 + c.d21 + c.k22 + c.theta));
  }
}

TEST_CASE("phi3 is switching invariant") {
  std::mt19937_64 rng(kDefaultSeed + 41);
  for (int i = 0; i < 20; ++i) {
    GainGraph g = random_valid_graph(rng);
    GainGraph s = switching(g, random_switching(rng, g.num_vertices()));
    CHECK(phi3_rank(s) == phi3_rank(g));
  }
}
