#ifndef FALKKIT_BIAS_PATTERNS_HPP
#define FALKKIT_BIAS_PATTERNS_HPP

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "falkkit/gain_graph.hpp"

namespace falkkit {

using Triple = std::array<EdgeId, 3>;

/// The four shapes a 3-element circuit of the bias matroid can take.
enum class TriangleKind {
  Balanced3Circle,       ///< three links on three vertices, circle gain 1
  ContrabalancedTheta3,  ///< triple-parallel bundle, all 2-circles unbalanced
  TightHandcuff3,        ///< unbalanced 2-circle plus a loop at one of its ends
  LooseHandcuff3,        ///< a link plus a loop at each of its ends
};

std::string_view triangle_kind_name(TriangleKind kind);

struct Triangle {
  Triple edges;  // sorted
  TriangleKind kind;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// All dependent 3-sets of the bias matroid, sorted by edge set. Assumes H3-H5
/// (a 3-set containing a smaller circuit is not reported).
std::vector<Triangle> triangles(const GainGraph& g);

enum class PatternName { K3, D21, K22, B2, K4, D3, K33, Gcirc, D31, G1, G2, Theta3 };

inline constexpr std::array<PatternName, 12> kAllPatterns = {
    PatternName::K3, PatternName::D21, PatternName::K22,   PatternName::B2,  PatternName::K4, PatternName::D3,
    PatternName::K33, PatternName::Gcirc, PatternName::D31, PatternName::G1, PatternName::G2, PatternName::Theta3};

std::string_view pattern_label(PatternName name);

/// A distinguished biased graph together with a concrete gain realization.
/// Edge labels follow the atlas figures, so `distinguished` can be compared
/// verbatim with triangles(reference).
struct Pattern {
  PatternName name;
  GainGraph reference;
  /// Dependent 3-sets under the atlas labelling.
  std::vector<EdgeSet> distinguished;
  /// Complete balanced-circle class of the reference.
  std::vector<EdgeSet> balanced_circles;
};

/// The twelve reference patterns. Built once; construction runs
/// check_atlas() and throws std::logic_error if any reference is wrong.
std::span<const Pattern> atlas();
const Pattern& pattern(PatternName name);

struct AtlasCheck {
  PatternName name;
  bool ok = true;
  std::string detail;
};

/// Per pattern: triangles(reference) equals `distinguished`, the brute-force
/// balanced-circle class equals `balanced_circles`, and for G1 and G2 there is
/// no D3 occurrence.
std::vector<AtlasCheck> check_atlas(std::span<const Pattern> patterns);

/// Biased-graph isomorphism: a vertex and edge bijection preserving incidence
/// under which balanced circles correspond. Both graphs must have at most
/// kSmallCircleEdgeLimit edges (std::length_error otherwise).
bool biased_isomorphic(const GainGraph& a, const GainGraph& b);

struct Occurrence {
  PatternName pattern;
  EdgeSet edges;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Every edge subset of g whose sub-gain-graph is biased-isomorphic to the
/// pattern reference, sorted by edge set.
std::vector<Occurrence> find_occurrences(const GainGraph& g, const Pattern& p);

struct PatternCounts {
  long k3 = 0;
  long k4 = 0;
  long d3 = 0;  ///< D3 not inside a D31
  long d21 = 0;
  long k22 = 0;
  long k33 = 0;
  long gcirc = 0;  ///< Gcirc not inside a D31
  long d31 = 0;
  long g1 = 0;  ///< G1 not inside a G2
  long g2 = 0;
  long theta = 0;

  friend bool operator==(const PatternCounts&, const PatternCounts&) = default;
};

/// Occurrences per pattern, after the exclusion rules, plus the counts.
struct PatternCensus {
  std::map<PatternName, std::vector<EdgeSet>> occurrences;
  PatternCounts counts;
};

/// Throws HypothesisError unless validate(g) passes H1..H5.
PatternCensus census(const GainGraph& g);
PatternCounts count_patterns(const GainGraph& g);

}  // namespace falkkit

#endif  // FALKKIT_BIAS_PATTERNS_HPP
