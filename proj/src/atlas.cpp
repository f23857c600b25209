#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "falkkit/bias_patterns.hpp"
#include "falkkit/error.hpp"

namespace falkkit {

std::string_view pattern_label(PatternName name) {
  switch (name) {
    case PatternName::K3: return "K3";
    case PatternName::D21: return "D21";
    case PatternName::K22: return "K22";
    case PatternName::B2: return "B2";
    case PatternName::K4: return "K4";
    case PatternName::D3: return "D3";
    case PatternName::K33: return "K33";
    case PatternName::Gcirc: return "Gcirc";
    case PatternName::D31: return "D31";
    case PatternName::G1: return "G1";
    case PatternName::G2: return "G2";
    case PatternName::Theta3: return "Theta3";
  }
  return "?";
}

namespace {

struct EdgeSpec {
  VertexId tail;
  VertexId head;
  long num;
  long den = 1;
};

GainGraph build(int vertices, std::initializer_list<EdgeSpec> specs) {
  std::vector<Edge> edges;
  for (const EdgeSpec& s : specs) {
    edges.push_back(Edge{static_cast<EdgeId>(edges.size() + 1), s.tail, s.head, Gain(s.num, s.den)});
  }
  return GainGraph(vertices, std::move(edges));
}

std::vector<EdgeSet> sorted_sets(std::initializer_list<EdgeSet> sets) {
  std::vector<EdgeSet> out(sets);
  for (auto& s : out) std::sort(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Edge labels follow the atlas drawings: on the three-vertex patterns edges on
// v1v2 come first, then v1v3, then v2v3, with loops numbered as drawn.
std::vector<Pattern> build_atlas() {
  std::vector<Pattern> a;
  a.push_back({PatternName::K3, build(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}), sorted_sets({{1, 2, 3}}),
               sorted_sets({{1, 2, 3}})});
  a.push_back({PatternName::D21, build(2, {{1, 2, 1}, {1, 2, 2}, {1, 1, 2}}), sorted_sets({{1, 2, 3}}), {}});
  a.push_back({PatternName::K22, build(2, {{1, 1, 2}, {1, 2, 1}, {2, 2, 2}}), sorted_sets({{1, 2, 3}}), {}});
  a.push_back({PatternName::B2, build(2, {{1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {2, 2, 2}}),
               sorted_sets({{1, 2, 3}, {2, 3, 4}, {1, 2, 4}, {1, 3, 4}}), {}});
  // v1 top-left, v2 bottom-left, v3 bottom-right, v4 top-right.
  a.push_back({PatternName::K4, build(4, {{1, 2, 1}, {1, 4, 1}, {2, 4, 1}, {2, 3, 1}, {1, 3, 1}, {3, 4, 1}}),
               sorted_sets({{1, 2, 3}, {1, 4, 5}, {2, 5, 6}, {3, 4, 6}}),
               sorted_sets({{1, 2, 3}, {1, 4, 5}, {2, 5, 6}, {3, 4, 6}, {1, 2, 4, 6}, {1, 3, 5, 6}, {2, 3, 4, 5}})});
  a.push_back({PatternName::D3, build(3, {{1, 2, -1}, {1, 2, 1}, {1, 3, 1}, {1, 3, -1}, {2, 3, 1}, {2, 3, -1}}),
               sorted_sets({{2, 3, 5}, {1, 4, 5}, {1, 3, 6}, {2, 4, 6}}),
               sorted_sets({{2, 3, 5}, {1, 4, 5}, {1, 3, 6}, {2, 4, 6}})});
  a.push_back({PatternName::K33, build(3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}, {1, 1, 2}, {3, 3, 2}, {2, 2, 2}}),
               sorted_sets({{1, 2, 3}, {1, 4, 6}, {2, 4, 5}, {3, 5, 6}}), sorted_sets({{1, 2, 3}})});
  a.push_back({PatternName::Gcirc, build(3, {{1, 2, 1}, {1, 2, 2}, {1, 3, 2}, {1, 3, 1}, {2, 3, 1}, {1, 1, 2}}),
               sorted_sets({{1, 2, 6}, {1, 4, 5}, {2, 3, 5}, {3, 4, 6}}), sorted_sets({{1, 4, 5}, {2, 3, 5}})});
  a.push_back({PatternName::D31,
               build(3, {{1, 2, -1}, {1, 2, 1}, {1, 3, 1}, {1, 3, -1}, {2, 3, 1}, {2, 3, -1}, {1, 1, 2}}),
               sorted_sets({{1, 2, 7}, {1, 4, 5}, {2, 3, 5}, {3, 4, 7}, {1, 3, 6}, {2, 4, 6}}),
               sorted_sets({{2, 3, 5}, {1, 4, 5}, {1, 3, 6}, {2, 4, 6}})});
  a.push_back({PatternName::G1,
               build(3, {{1, 2, 1}, {1, 2, 2}, {1, 2, 4}, {1, 3, 1}, {1, 3, 2}, {1, 3, 4}, {2, 3, 1}, {2, 3, 2}}),
               sorted_sets({{1, 2, 3}, {4, 5, 6}, {2, 5, 7}, {1, 4, 7}, {1, 5, 8}, {2, 6, 8}, {3, 6, 7}}),
               sorted_sets({{2, 5, 7}, {1, 4, 7}, {1, 5, 8}, {2, 6, 8}, {3, 6, 7}})});
  a.push_back({PatternName::G2,
               build(3, {{1, 2, 1},
                         {1, 2, 2},
                         {1, 2, 4},
                         {1, 3, 4},
                         {1, 3, 2},
                         {1, 3, 1},
                         {2, 3, 2},
                         {2, 3, 1},
                         {2, 3, 4}}),
               sorted_sets({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {2, 5, 8}, {1, 6, 8}, {1, 5, 7}, {2, 4, 7}, {3, 4, 8},
                            {1, 4, 9}}),
               sorted_sets({{2, 5, 8}, {1, 6, 8}, {1, 5, 7}, {2, 4, 7}, {3, 4, 8}, {1, 4, 9}})});
  a.push_back({PatternName::Theta3, build(2, {{1, 2, 1}, {1, 2, 2}, {1, 2, 3}}), sorted_sets({{1, 2, 3}}), {}});
  return a;
}

std::string join_sets(const std::vector<EdgeSet>& sets) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out << (i ? ",{" : "{");
    for (std::size_t j = 0; j < sets[i].size(); ++j) out << (j ? "," : "") << sets[i][j];
    out << '}';
  }
  out << ']';
  return out.str();
}

const Pattern& find_in(std::span<const Pattern> patterns, PatternName name) {
  auto it = std::find_if(patterns.begin(), patterns.end(), [&](const Pattern& p) { return p.name == name; });
  if (it == patterns.end()) throw std::out_of_range("pattern missing from atlas");
  return *it;
}

}  // namespace

std::vector<AtlasCheck> check_atlas(std::span<const Pattern> patterns) {
  std::vector<AtlasCheck> out;
  for (const Pattern& p : patterns) {
    AtlasCheck check{p.name, true, {}};

    std::vector<EdgeSet> dependent;
    for (const Triangle& t : triangles(p.reference)) dependent.emplace_back(t.edges.begin(), t.edges.end());
    if (dependent != p.distinguished) {
      check.ok = false;
      check.detail += "dependent 3-sets " + join_sets(dependent) + " != " + join_sets(p.distinguished) + "; ";
    }

    auto balanced = balanced_circle_keys(p.reference);
    if (balanced != p.balanced_circles) {
      check.ok = false;
      check.detail += "balanced circles " + join_sets(balanced) + " != " + join_sets(p.balanced_circles) + "; ";
    }

    if (p.name == PatternName::G1 || p.name == PatternName::G2) {
      auto inside = find_occurrences(p.reference, find_in(patterns, PatternName::D3));
      if (!inside.empty()) {
        check.ok = false;
        check.detail += "contains " + std::to_string(inside.size()) + " D3 occurrence(s); ";
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::span<const Pattern> atlas() {
  static const std::vector<Pattern> patterns = [] {
    auto built = build_atlas();
    for (const AtlasCheck& c : check_atlas(built)) {
      if (!c.ok) {
        throw std::logic_error("pattern atlas self-test failed for " + std::string(pattern_label(c.name)) + ": " +
                               c.detail);
      }
    }
    return built;
  }();
  return patterns;
}

const Pattern& pattern(PatternName name) { return find_in(atlas(), name); }

PatternCensus census(const GainGraph& g) {
  ValidationReport report = validate(g);
  if (!report.all_pass()) {
    std::string failing;
    for (Hypothesis h : report.failing()) failing += " " + std::string(hypothesis_name(h));
    throw HypothesisError("pattern census requires H1..H5; failing:" + failing);
  }

  PatternCensus c;
  auto raw = [&](PatternName name) {
    std::vector<EdgeSet> sets;
    for (Occurrence& o : find_occurrences(g, pattern(name))) sets.push_back(std::move(o.edges));
    return sets;
  };
  auto excluding = [](std::vector<EdgeSet> sets, const std::vector<EdgeSet>& larger) {
    std::erase_if(sets, [&](const EdgeSet& s) {
      return std::any_of(larger.begin(), larger.end(), [&](const EdgeSet& big) {
        return std::includes(big.begin(), big.end(), s.begin(), s.end());
      });
    });
    return sets;
  };

  auto d31 = raw(PatternName::D31);
  auto g2 = raw(PatternName::G2);
  c.occurrences[PatternName::K3] = raw(PatternName::K3);
  c.occurrences[PatternName::K4] = raw(PatternName::K4);
  c.occurrences[PatternName::D3] = excluding(raw(PatternName::D3), d31);
  c.occurrences[PatternName::D21] = raw(PatternName::D21);
  c.occurrences[PatternName::K22] = raw(PatternName::K22);
  c.occurrences[PatternName::K33] = raw(PatternName::K33);
  c.occurrences[PatternName::Gcirc] = excluding(raw(PatternName::Gcirc), d31);
  c.occurrences[PatternName::G1] = excluding(raw(PatternName::G1), g2);
  c.occurrences[PatternName::Theta3] = raw(PatternName::Theta3);
  c.occurrences[PatternName::D31] = std::move(d31);
  c.occurrences[PatternName::G2] = std::move(g2);

  auto count = [&](PatternName name) { return static_cast<long>(c.occurrences[name].size()); };
  c.counts.k3 = count(PatternName::K3);
  c.counts.k4 = count(PatternName::K4);
  c.counts.d3 = count(PatternName::D3);
  c.counts.d21 = count(PatternName::D21);
  c.counts.k22 = count(PatternName::K22);
  c.counts.k33 = count(PatternName::K33);
  c.counts.gcirc = count(PatternName::Gcirc);
  c.counts.d31 = count(PatternName::D31);
  c.counts.g1 = count(PatternName::G1);
  c.counts.g2 = count(PatternName::G2);
  c.counts.theta = count(PatternName::Theta3);
  return c;
}

PatternCounts count_patterns(const GainGraph& g) { return census(g).counts; }

}  // namespace falkkit
