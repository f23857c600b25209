#include <algorithm>
#include <optional>

#include "falkkit/bias_patterns.hpp"

namespace falkkit {

std::string_view triangle_kind_name(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::Balanced3Circle: return "balanced-3-circle";
    case TriangleKind::ContrabalancedTheta3: return "contrabalanced-theta";
    case TriangleKind::TightHandcuff3: return "tight-handcuff";
    case TriangleKind::LooseHandcuff3: return "loose-handcuff";
  }
  return "?";
}

namespace {

bool unbalanced_pair(const Edge& a, const Edge& b) {
  return !(a.gain_from(a.tail) == b.gain_from(a.tail));
}

bool same_pair(const Edge& a, const Edge& b) {
  return (a.tail == b.tail && a.head == b.head) || (a.tail == b.head && a.head == b.tail);
}

std::optional<TriangleKind> classify(const GainGraph& g, const Triple& ids) {
  std::array<const Edge*, 3> e = {&g.edge(ids[0]), &g.edge(ids[1]), &g.edge(ids[2])};
  std::vector<const Edge*> loops;
  std::vector<const Edge*> links;
  for (const Edge* x : e) (x->is_loop() ? loops : links).push_back(x);

  for (const Edge* l : loops) {
    if (l->gain.is_identity()) return std::nullopt;
  }

  switch (loops.size()) {
    case 0: {
      if (same_pair(*links[0], *links[1]) && same_pair(*links[1], *links[2])) {
        if (unbalanced_pair(*links[0], *links[1]) && unbalanced_pair(*links[0], *links[2]) &&
            unbalanced_pair(*links[1], *links[2])) {
          return TriangleKind::ContrabalancedTheta3;
        }
        return std::nullopt;
      }
      Circle c;
      try {
        c = circle_from_edges(g, ids);
      } catch (const std::invalid_argument&) {
        return std::nullopt;
      }
      if (is_balanced(g, c)) return TriangleKind::Balanced3Circle;
      return std::nullopt;
    }
    case 1: {
      const Edge& loop = *loops[0];
      if (!same_pair(*links[0], *links[1]) || !unbalanced_pair(*links[0], *links[1])) return std::nullopt;
      if (loop.tail == links[0]->tail || loop.tail == links[0]->head) return TriangleKind::TightHandcuff3;
      return std::nullopt;
    }
    case 2: {
      VertexId a = loops[0]->tail;
      VertexId b = loops[1]->tail;
      const Edge& link = *links[0];
      if (a != b && ((link.tail == a && link.head == b) || (link.tail == b && link.head == a))) {
        return TriangleKind::LooseHandcuff3;
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::vector<Triangle> triangles(const GainGraph& g) {
  std::vector<Triangle> out;
  const EdgeId n = g.num_edges();
  for (EdgeId i = 1; i <= n; ++i) {
    for (EdgeId j = i + 1; j <= n; ++j) {
      for (EdgeId k = j + 1; k <= n; ++k) {
        Triple t = {i, j, k};
        if (auto kind = classify(g, t)) out.push_back(Triangle{t, *kind});
      }
    }
  }
  return out;
}

}  // namespace falkkit
