#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "falkkit/bias_patterns.hpp"
#include "matcher.hpp"

namespace falkkit::detail {

// Vertex images are chosen first, constrained by per-pair edge multiplicity.
// Edges are then assigned bundle by bundle; a circle of the pattern is checked
// as soon as every bundle it uses has been assigned.
class Embedder {
 public:
  Embedder(const GainGraph& pattern, const GainGraph& host, bool bijective, const EmbedCallback& on_match)
      : pattern_(pattern), host_(host), bijective_(bijective), on_match_(on_match) {
    bundles_ = pattern.occupied_pairs();
    std::vector<int> bundle_of(static_cast<std::size_t>(pattern.num_edges()) + 1, -1);
    for (std::size_t b = 0; b < bundles_.size(); ++b) {
      for (EdgeId id : pattern.edges_between(bundles_[b].first, bundles_[b].second)) {
        bundle_of[static_cast<std::size_t>(id)] = static_cast<int>(b);
      }
    }
    circles_by_bundle_.resize(bundles_.size());
    for (Circle& c : all_circles_small(pattern)) {
      int last = 0;
      for (const auto& step : c.walk) last = std::max(last, bundle_of[static_cast<std::size_t>(step.id)]);
      bool balanced = is_balanced(pattern, c);
      circles_by_bundle_[static_cast<std::size_t>(last)].push_back({std::move(c), balanced});
    }
    image_.assign(static_cast<std::size_t>(pattern.num_vertices()) + 1, 0);
    used_vertex_.assign(static_cast<std::size_t>(host.num_vertices()) + 1, false);
    edge_image_.assign(static_cast<std::size_t>(pattern.num_edges()) + 1, 0);
    used_edge_.assign(static_cast<std::size_t>(host.num_edges()) + 1, false);
  }

  void run() {
    if (bijective_ &&
        (pattern_.num_vertices() != host_.num_vertices() || pattern_.num_edges() != host_.num_edges())) {
      return;
    }
    if (pattern_.num_vertices() > host_.num_vertices()) return;
    assign_vertex(1);
  }

 private:
  struct CheckedCircle {
    Circle circle;
    bool balanced;
  };

  bool multiplicities_fit(VertexId newest) const {
    for (const auto& [u, v] : bundles_) {
      if (std::max(u, v) != newest) continue;
      const std::size_t need = pattern_.edges_between(u, v).size();
      const std::size_t have = host_.edges_between(image_[static_cast<std::size_t>(u)], image_[static_cast<std::size_t>(v)]).size();
      if (bijective_ ? need != have : need > have) return false;
    }
    return true;
  }

  void assign_vertex(VertexId v) {
    if (stop_) return;
    if (v > pattern_.num_vertices()) {
      assign_bundle(0);
      return;
    }
    for (VertexId h = 1; h <= host_.num_vertices() && !stop_; ++h) {
      if (used_vertex_[static_cast<std::size_t>(h)]) continue;
      image_[static_cast<std::size_t>(v)] = h;
      if (multiplicities_fit(v)) {
        used_vertex_[static_cast<std::size_t>(h)] = true;
        assign_vertex(v + 1);
        used_vertex_[static_cast<std::size_t>(h)] = false;
      }
    }
    image_[static_cast<std::size_t>(v)] = 0;
  }

  void assign_bundle(std::size_t b) {
    if (stop_) return;
    if (b == bundles_.size()) {
      EdgeSet edges;
      for (EdgeId e = 1; e <= pattern_.num_edges(); ++e) edges.push_back(edge_image_[static_cast<std::size_t>(e)]);
      std::sort(edges.begin(), edges.end());
      if (!on_match_(edges)) stop_ = true;
      return;
    }
    const auto [u, v] = bundles_[b];
    const EdgeSet& wanted = pattern_.edges_between(u, v);
    const EdgeSet& avail = host_.edges_between(image_[static_cast<std::size_t>(u)], image_[static_cast<std::size_t>(v)]);
    place_edge(b, wanted, avail, 0);
  }

  void place_edge(std::size_t b, const EdgeSet& wanted, const EdgeSet& avail, std::size_t i) {
    if (stop_) return;
    if (i == wanted.size()) {
      if (circles_hold(b)) assign_bundle(b + 1);
      return;
    }
    for (EdgeId h : avail) {
      if (used_edge_[static_cast<std::size_t>(h)]) continue;
      used_edge_[static_cast<std::size_t>(h)] = true;
      edge_image_[static_cast<std::size_t>(wanted[i])] = h;
      place_edge(b, wanted, avail, i + 1);
      used_edge_[static_cast<std::size_t>(h)] = false;
      if (stop_) return;
    }
  }

  bool circles_hold(std::size_t b) const {
    for (const auto& [circle, balanced] : circles_by_bundle_[b]) {
      mpq_class product = 1;
      for (const auto& step : circle.walk) {
        const Edge& pe = pattern_.edge(step.id);
        VertexId from = image_[static_cast<std::size_t>(step.forward ? pe.tail : pe.head)];
        const Edge& he = host_.edge(edge_image_[static_cast<std::size_t>(step.id)]);
        if (from == he.tail) {
          product *= he.gain.value();
        } else {
          product /= he.gain.value();
        }
      }
      if ((product == 1) != balanced) return false;
    }
    return true;
  }

  const GainGraph& pattern_;
  const GainGraph& host_;
  bool bijective_;
  const EmbedCallback& on_match_;
  std::vector<std::pair<VertexId, VertexId>> bundles_;
  std::vector<std::vector<CheckedCircle>> circles_by_bundle_;
  std::vector<VertexId> image_;
  std::vector<bool> used_vertex_;
  std::vector<EdgeId> edge_image_;
  std::vector<bool> used_edge_;
  bool stop_ = false;
};

void embed(const GainGraph& pattern, const GainGraph& host, bool bijective, const EmbedCallback& on_match) {
  Embedder(pattern, host, bijective, on_match).run();
}

}  // namespace falkkit::detail

namespace falkkit {

bool biased_isomorphic(const GainGraph& a, const GainGraph& b) {
  for (const GainGraph* g : {&a, &b}) {
    if (g->num_edges() > kSmallCircleEdgeLimit) {
      throw std::length_error("biased_isomorphic: graphs are limited to " + std::to_string(kSmallCircleEdgeLimit) +
                              " edges");
    }
  }
  bool found = false;
  detail::embed(a, b, true, [&](const EdgeSet&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<Occurrence> find_occurrences(const GainGraph& g, const Pattern& p) {
  std::set<EdgeSet> seen;
  detail::embed(p.reference, g, false, [&](const EdgeSet& edges) {
    seen.insert(edges);
    return true;
  });
  std::vector<Occurrence> out;
  out.reserve(seen.size());
  for (const EdgeSet& e : seen) out.push_back(Occurrence{p.name, e});
  return out;
}

}  // namespace falkkit
