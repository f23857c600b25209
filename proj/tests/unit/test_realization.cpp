#include <doctest.h>

#include <random>

#include "falkkit/bias_patterns.hpp"
#include "falkkit/os_algebra.hpp"
#include "falkkit/realization.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace falkkit;
using namespace falkkit::testing;

namespace {

bool proportional(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  return dense_rank({a, b}) == 1;
}

std::vector<mpq_class> q(std::initializer_list<int> xs) {
  std::vector<mpq_class> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("hyperplanes of the seven-edge example") {
  auto hs = arrangement(gain_example());
  REQUIRE(hs.size() == 7);
  // x-y, x-2y, x-3y, x-z, y-z, 2y-z, x
  const std::vector<std::vector<mpq_class>> factors = {q({1, -1, 0}), q({1, -2, 0}), q({1, -3, 0}), q({1, 0, -1}),
                                                       q({0, 1, -1}), q({0, 2, -1}), q({1, 0, 0})};
  for (std::size_t i = 0; i < hs.size(); ++i) {
    CHECK(hs[i].edge == static_cast<EdgeId>(i + 1));
    CHECK(proportional(hs[i].normal, factors[i]));
  }
  CHECK(hs[2].coefficients_str() == "1 -3 0");
  CHECK(hs[6].coefficients_str() == "1 0 0");
}

TEST_CASE("single hyperplanes") {
  CHECK(arrangement(make_graph(1, {{1, 1, 5}}))[0].normal == q({1}));
  CHECK(arrangement(make_graph(2, {{1, 2, 3}}))[0].normal == q({1, -3}));
  CHECK(arrangement(make_graph(2, {{1, 2, 1, 2}}))[0].coefficients_str() == "1 -1/2");
  CHECK(arrangement(GainGraph(3, {})).empty());
}

TEST_CASE("proportional normals are rejected") {
  CHECK_THROWS_AS(arrangement(make_graph(2, {{1, 2, 2}, {2, 1, 1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(arrangement(make_graph(1, {{1, 1, 2}, {1, 1, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(arrangement(make_graph(2, {{1, 2, 2}, {1, 2, 2}})), std::invalid_argument);
}

TEST_CASE("dense rank") {
  CHECK(dense_rank({}) == 0);
  CHECK(dense_rank({q({0, 0})}) == 0);
  CHECK(dense_rank({q({1, 2}), q({2, 4})}) == 1);
  CHECK(dense_rank({q({1, 2, 3}), q({4, 5, 6}), q({7, 8, 9})}) == 2);
  CHECK(dense_rank({q({1, 0, 0}), q({0, 1, 0}), q({0, 0, 1})}) == 3);
}

TEST_CASE("dependent 3-sets are the matroid triangles") {
  CHECK(dependent_3sets(final_example()) == triple_sets(triangles(final_example())));
  for (const Pattern& p : atlas()) {
    if (p.name == PatternName::B2) continue;
    INFO(pattern_label(p.name));
    CHECK(dependent_3sets(p.reference) == triple_sets(triangles(p.reference)));
  }
  std::mt19937_64 rng(kDefaultSeed + 30);
  for (int i = 0; i < 60; ++i) {
    GainGraph g = random_valid_graph(rng);
    INFO(serialize(g));
    const auto deps = dependent_3sets(g);
    CHECK(deps == minor_dependent_3sets(g));
    CHECK(deps == triple_sets(triangles(g)));
  }
}

TEST_CASE("dependent 3-sets are switching invariant") {
  std::mt19937_64 rng(kDefaultSeed + 31);
  for (int i = 0; i < 30; ++i) {
    GainGraph g = random_valid_graph(rng);
    GainGraph s = switching(g, random_switching(rng, g.num_vertices()));
    CHECK(dependent_3sets(s) == dependent_3sets(g));
  }
}
