#include "falkkit/gain_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace falkkit {

// -- Gain -------------------------------------------------------------------

Gain::Gain(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ == 0) throw std::invalid_argument("gain must be nonzero");
}

Gain::Gain(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
  if (value_ == 0) throw std::invalid_argument("gain must be nonzero");
}

Gain Gain::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
    num_digits.remove_prefix(1);
  }
  if (!is_digits(num_digits) || !is_digits(den)) {
    throw std::invalid_argument("malformed gain '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num_digits), 10);
  if (num.front() == '-') p = -p;
  mpz_class q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator in gain '" + std::string(text) + "'");
  if (p == 0) throw std::invalid_argument("zero gain '" + std::string(text) + "'");
  mpq_class v(p, q);
  v.canonicalize();
  return Gain(std::move(v));
}

Gain Gain::inverse() const {
  mpq_class inv = 1 / value_;
  return Gain(std::move(inv));
}

std::string Gain::str() const { return value_.get_str(); }

std::string Gain::fraction_str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Gain operator*(const Gain& a, const Gain& b) { return Gain(mpq_class(a.value_ * b.value_)); }
Gain operator/(const Gain& a, const Gain& b) { return Gain(mpq_class(a.value_ / b.value_)); }

Gain Edge::gain_from(VertexId from) const { return from == tail ? gain : gain.inverse(); }

// -- GainGraph --------------------------------------------------------------

namespace {

std::pair<VertexId, VertexId> pair_key(VertexId u, VertexId v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

GainGraph::GainGraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 1) throw std::invalid_argument("a graph needs at least one vertex");
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id != static_cast<EdgeId>(i + 1)) {
      if (i > 0 && edges_[i - 1].id == e.id) {
        throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
      }
      throw std::invalid_argument("edge ids must be exactly 1.." + std::to_string(edges_.size()));
    }
    for (VertexId v : {e.tail, e.head}) {
      if (v < 1 || v > num_vertices_) {
        throw std::invalid_argument("edge " + std::to_string(e.id) + ": vertex " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(num_vertices_));
      }
    }
    bundles_[pair_key(e.tail, e.head)].push_back(e.id);
  }
}

const Edge& GainGraph::edge(EdgeId id) const {
  if (id < 1 || id > num_edges()) throw std::out_of_range("no edge " + std::to_string(id));
  return edges_[static_cast<std::size_t>(id - 1)];
}

const EdgeSet& GainGraph::edges_between(VertexId u, VertexId v) const {
  static const EdgeSet kEmpty;
  auto it = bundles_.find(pair_key(u, v));
  return it == bundles_.end() ? kEmpty : it->second;
}

std::vector<std::pair<VertexId, VertexId>> GainGraph::occupied_pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(bundles_.size());
  for (const auto& [key, ids] : bundles_) out.push_back(key);
  return out;
}

GainGraph GainGraph::reoriented(EdgeId id) const {
  std::vector<Edge> copy = edges_;
  copy.at(static_cast<std::size_t>(id - 1)) = edge(id).reversed();
  return GainGraph(num_vertices_, std::move(copy));
}

GainGraph GainGraph::subgraph(std::span<const EdgeId> ids) const {
  std::set<EdgeId> chosen(ids.begin(), ids.end());
  std::set<VertexId> verts;
  for (EdgeId id : chosen) {
    verts.insert(edge(id).tail);
    verts.insert(edge(id).head);
  }
  std::map<VertexId, VertexId> relabel;
  for (VertexId v : verts) relabel.emplace(v, static_cast<VertexId>(relabel.size() + 1));
  std::vector<Edge> out;
  for (EdgeId id : chosen) {
    const Edge& e = edge(id);
    out.push_back(Edge{static_cast<EdgeId>(out.size() + 1), relabel[e.tail], relabel[e.head], e.gain});
  }
  return GainGraph(std::max<int>(1, static_cast<int>(verts.size())), std::move(out));
}

bool operator==(const GainGraph& a, const GainGraph& b) {
  if (a.num_vertices_ != b.num_vertices_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.id != y.id || x.tail != y.tail || x.head != y.head || !(x.gain == y.gain)) return false;
  }
  return true;
}

// -- circles ----------------------------------------------------------------

EdgeSet Circle::key() const {
  EdgeSet ids;
  ids.reserve(walk.size());
  for (const auto& step : walk) ids.push_back(step.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

Circle circle_from_edges(const GainGraph& g, std::span<const EdgeId> ids) {
  EdgeSet sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("circle edge set must be nonempty without repeats");
  }
  if (sorted.size() == 1) {
    if (!g.edge(sorted[0]).is_loop()) throw std::invalid_argument("a single edge circle must be a loop");
    return Circle{{DirectedEdge{sorted[0], true}}};
  }

  std::map<VertexId, std::vector<EdgeId>> incident;
  for (EdgeId id : sorted) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) throw std::invalid_argument("a loop cannot lie on a circle of length > 1");
    incident[e.tail].push_back(id);
    incident[e.head].push_back(id);
  }
  if (incident.size() != sorted.size()) throw std::invalid_argument("edge set is not a circle");
  for (const auto& [v, inc] : incident) {
    if (inc.size() != 2) throw std::invalid_argument("edge set is not a circle");
  }

  Circle c;
  std::set<EdgeId> used;
  const Edge& first = g.edge(sorted[0]);
  VertexId start = first.tail;
  VertexId current = first.head;
  c.walk.push_back({first.id, true});
  used.insert(first.id);
  while (current != start) {
    const auto& inc = incident[current];
    EdgeId next = used.count(inc[0]) ? inc[1] : inc[0];
    if (used.count(next)) throw std::invalid_argument("edge set is not a circle");
    const Edge& e = g.edge(next);
    c.walk.push_back({next, e.tail == current});
    used.insert(next);
    current = e.other_end(current);
  }
  if (used.size() != sorted.size()) throw std::invalid_argument("edge set is not a single circle");
  return c;
}

Gain circle_gain(const GainGraph& g, const Circle& c) {
  if (c.walk.empty()) throw std::invalid_argument("empty walk");
  std::set<EdgeId> seen;
  const Edge& first = g.edge(c.walk.front().id);
  VertexId start = c.walk.front().forward ? first.tail : first.head;
  VertexId current = start;
  mpq_class product = 1;
  for (const auto& step : c.walk) {
    if (!seen.insert(step.id).second) throw std::invalid_argument("walk repeats edge " + std::to_string(step.id));
    const Edge& e = g.edge(step.id);
    VertexId from = step.forward ? e.tail : e.head;
    if (from != current) throw std::invalid_argument("walk is not connected at edge " + std::to_string(step.id));
    if (step.forward) {
      product *= e.gain.value();
    } else {
      product /= e.gain.value();
    }
    current = step.forward ? e.head : e.tail;
  }
  if (current != start) throw std::invalid_argument("walk does not close");
  return Gain(std::move(product));
}

bool is_balanced(const GainGraph& g, const Circle& c) { return circle_gain(g, c).is_identity(); }

GainGraph switching(const GainGraph& g, const std::map<VertexId, Gain>& lambda) {
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    if (!lambda.count(v)) throw std::invalid_argument("switching function misses vertex " + std::to_string(v));
  }
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const Edge& e : g.edges()) {
    Edge s = e;
    s.gain = lambda.at(e.tail).inverse() * e.gain * lambda.at(e.head);
    out.push_back(std::move(s));
  }
  return GainGraph(g.num_vertices(), std::move(out));
}

namespace {

// Simple-cycle enumeration. Each circle of length >= 2 is found exactly once,
// rooted at its smallest edge traversed tail -> head.
class CircleSearch {
 public:
  CircleSearch(const GainGraph& g, std::size_t max_length)
      : g_(g), max_length_(max_length), incident_(static_cast<std::size_t>(g.num_vertices()) + 1),
        on_path_(static_cast<std::size_t>(g.num_vertices()) + 1, false) {
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) continue;
      incident_[static_cast<std::size_t>(e.tail)].push_back(e.id);
      incident_[static_cast<std::size_t>(e.head)].push_back(e.id);
    }
  }

  std::vector<Circle> run() {
    for (const Edge& e : g_.edges()) {
      if (e.is_loop()) out_.push_back(Circle{{DirectedEdge{e.id, true}}});
    }
    if (max_length_ >= 2) {
      for (const Edge& e : g_.edges()) {
        if (e.is_loop()) continue;
        root_ = e.id;
        start_ = e.tail;
        walk_ = {DirectedEdge{e.id, true}};
        on_path_[static_cast<std::size_t>(e.tail)] = true;
        on_path_[static_cast<std::size_t>(e.head)] = true;
        extend(e.head);
        on_path_[static_cast<std::size_t>(e.tail)] = false;
        on_path_[static_cast<std::size_t>(e.head)] = false;
      }
    }
    std::sort(out_.begin(), out_.end(), [](const Circle& a, const Circle& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a.key() < b.key();
    });
    return std::move(out_);
  }

 private:
  void extend(VertexId current) {
    for (EdgeId id : incident_[static_cast<std::size_t>(current)]) {
      if (id <= root_) continue;
      const Edge& e = g_.edge(id);
      VertexId next = e.other_end(current);
      bool forward = e.tail == current;
      if (next == start_) {
        walk_.push_back({id, forward});
        out_.push_back(Circle{walk_});
        walk_.pop_back();
        continue;
      }
      if (on_path_[static_cast<std::size_t>(next)] || walk_.size() + 1 >= max_length_) continue;
      on_path_[static_cast<std::size_t>(next)] = true;
      walk_.push_back({id, forward});
      extend(next);
      walk_.pop_back();
      on_path_[static_cast<std::size_t>(next)] = false;
    }
  }

  const GainGraph& g_;
  std::size_t max_length_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<bool> on_path_;
  EdgeId root_ = 0;
  VertexId start_ = 0;
  std::vector<DirectedEdge> walk_;
  std::vector<Circle> out_;
};

}  // namespace

std::vector<Circle> circles_upto3(const GainGraph& g) { return CircleSearch(g, 3).run(); }

std::vector<Circle> all_circles_small(const GainGraph& g) {
  if (g.num_edges() > kSmallCircleEdgeLimit) {
    throw std::length_error("all_circles_small: graph has " + std::to_string(g.num_edges()) + " edges, limit is " +
                            std::to_string(kSmallCircleEdgeLimit));
  }
  return CircleSearch(g, static_cast<std::size_t>(g.num_edges())).run();
}

std::vector<EdgeSet> balanced_circle_keys(const GainGraph& g) {
  std::vector<EdgeSet> keys;
  for (const Circle& c : all_circles_small(g)) {
    if (is_balanced(g, c)) keys.push_back(c.key());
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace falkkit
