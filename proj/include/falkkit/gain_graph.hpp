#ifndef FALKKIT_GAIN_GRAPH_HPP
#define FALKKIT_GAIN_GRAPH_HPP

#include <gmpxx.h>

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace falkkit {

using VertexId = int;
using EdgeId = int;

/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

/// Element of the multiplicative group of nonzero rationals.
///
/// The value is kept in canonical form (gcd(|p|, q) = 1, q > 0), so equality
/// is exact. Constructing a zero gain throws std::invalid_argument.
class Gain {
 public:
  Gain() : value_(1) {}
  explicit Gain(mpq_class value);
  Gain(long numerator, long denominator = 1);

  /// Accepts `p` or `p/q` with p != 0 and q > 0 (arbitrary precision).
  static Gain parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  Gain inverse() const;
  bool is_identity() const { return value_ == 1; }

  /// Reduced form: `p` when the denominator is 1, `p/q` otherwise.
  std::string str() const;
  /// Always `p/q`, even for integers.
  std::string fraction_str() const;

  friend Gain operator*(const Gain& a, const Gain& b);
  friend Gain operator/(const Gain& a, const Gain& b);
  friend bool operator==(const Gain& a, const Gain& b) { return a.value_ == b.value_; }

 private:
  mpq_class value_;
};

struct Edge {
  EdgeId id = 0;
  VertexId tail = 0;
  VertexId head = 0;
  Gain gain;

  bool is_loop() const noexcept { return tail == head; }
  /// Same edge with orientation reversed and gain inverted.
  Edge reversed() const { return Edge{id, head, tail, gain.inverse()}; }
  /// Gain read in the direction from -> to. `from` must be an endpoint.
  Gain gain_from(VertexId from) const;
  VertexId other_end(VertexId v) const noexcept { return v == tail ? head : tail; }
};

/// Multigraph with loops and parallel edges, gains in Q*.
///
/// Vertices are 1..num_vertices, edge ids are exactly 1..num_edges. Values
/// are immutable after construction.
class GainGraph {
 public:
  /// Throws std::invalid_argument when ids are not exactly {1..n}, a vertex
  /// is out of range, or num_vertices < 1.
  GainGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const noexcept { return num_vertices_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const;

  /// Edges joining u and v in either orientation (loops when u == v), by id.
  const EdgeSet& edges_between(VertexId u, VertexId v) const;
  const EdgeSet& loops_at(VertexId v) const { return edges_between(v, v); }

  /// Vertex pairs (u <= v) that carry at least one edge.
  std::vector<std::pair<VertexId, VertexId>> occupied_pairs() const;

  /// Copy with edge `id` stored in the opposite orientation.
  GainGraph reoriented(EdgeId id) const;

  /// The sub-gain-graph spanned by `ids`: its non-isolated vertices and the
  /// given edges, relabelled 1..k in increasing order of original id and
  /// vertex number.
  GainGraph subgraph(std::span<const EdgeId> ids) const;

  friend bool operator==(const GainGraph& a, const GainGraph& b);

 private:
  int num_vertices_;
  std::vector<Edge> edges_;
  std::map<std::pair<VertexId, VertexId>, EdgeSet> bundles_;
};

/// Edge of a traversal: `forward` means tail -> head.
struct DirectedEdge {
  EdgeId id = 0;
  bool forward = true;
};

/// Closed walk without repeated edges, stored as its traversal.
struct Circle {
  std::vector<DirectedEdge> walk;

  std::size_t length() const noexcept { return walk.size(); }
  /// Canonical key: the sorted edge-id set.
  EdgeSet key() const;
};

/// Builds a traversal for an edge set that forms a circle; throws
/// std::invalid_argument if the set is not a circle of `g`.
Circle circle_from_edges(const GainGraph& g, std::span<const EdgeId> ids);

/// Product of gains along the traversal. Throws std::invalid_argument if the
/// walk does not close or repeats an edge.
Gain circle_gain(const GainGraph& g, const Circle& c);
bool is_balanced(const GainGraph& g, const Circle& c);

/// Switching by a vertex function: gain(e) -> lambda(tail)^-1 gain(e) lambda(head).
/// Throws std::invalid_argument if lambda misses a vertex.
GainGraph switching(const GainGraph& g, const std::map<VertexId, Gain>& lambda);

/// Loops, 2-circles and 3-circles, each once, ordered by (length, key).
std::vector<Circle> circles_upto3(const GainGraph& g);

inline constexpr int kSmallCircleEdgeLimit = 12;

/// Every circle of g, each once, ordered by (length, key). Only for graphs of
/// at most kSmallCircleEdgeLimit edges; throws std::length_error otherwise.
std::vector<Circle> all_circles_small(const GainGraph& g);

/// Keys of the balanced circles among all_circles_small(g).
std::vector<EdgeSet> balanced_circle_keys(const GainGraph& g);

/// Graph file reader; throws ParseError with the offending line number.
GainGraph parse_graph(std::string_view text);
std::string serialize(const GainGraph& g);

// -- hypotheses -------------------------------------------------------------

enum class Hypothesis {
  H1,  ///< no B2 subgraph
  H2,  ///< no loop at an endpoint of a triple-parallel bundle
  H3,  ///< at most triple parallel edges
  H4,  ///< loops and 2-circles unbalanced
  H5,  ///< at most one loop per vertex
};

inline constexpr std::array<Hypothesis, 5> kAllHypotheses = {
    Hypothesis::H1, Hypothesis::H2, Hypothesis::H3, Hypothesis::H4, Hypothesis::H5};

std::string_view hypothesis_name(Hypothesis h);
std::string_view hypothesis_description(Hypothesis h);

struct Verdict {
  bool pass = true;
  /// Edge sets witnessing a failure; nonempty iff !pass.
  std::vector<EdgeSet> witnesses;
};

struct ValidationReport {
  std::array<Verdict, 5> verdicts;

  const Verdict& operator[](Hypothesis h) const { return verdicts[static_cast<int>(h)]; }
  Verdict& operator[](Hypothesis h) { return verdicts[static_cast<int>(h)]; }
  bool passes(std::initializer_list<Hypothesis> hs) const;
  bool all_pass() const;
  std::vector<Hypothesis> failing() const;
};

ValidationReport validate(const GainGraph& g);

}  // namespace falkkit

#endif  // FALKKIT_GAIN_GRAPH_HPP
