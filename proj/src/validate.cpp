#include <algorithm>

#include "falkkit/gain_graph.hpp"

namespace falkkit {

namespace {

void fail(Verdict& v, EdgeSet witness) {
  std::sort(witness.begin(), witness.end());
  v.pass = false;
  v.witnesses.push_back(std::move(witness));
}

}  // namespace

std::string_view hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::H1: return "H1";
    case Hypothesis::H2: return "H2";
    case Hypothesis::H3: return "H3";
    case Hypothesis::H4: return "H4";
    case Hypothesis::H5: return "H5";
  }
  return "?";
}

std::string_view hypothesis_description(Hypothesis h) {
  switch (h) {
    case Hypothesis::H1: return "no subgraph isomorphic to B2";
    case Hypothesis::H2: return "no loop adjacent to a three-edge theta graph";
    case Hypothesis::H3: return "at most triple parallel edges";
    case Hypothesis::H4: return "loops and 2-circles unbalanced";
    case Hypothesis::H5: return "at most one loop per vertex";
  }
  return "?";
}

bool ValidationReport::passes(std::initializer_list<Hypothesis> hs) const {
  return std::all_of(hs.begin(), hs.end(), [this](Hypothesis h) { return (*this)[h].pass; });
}

bool ValidationReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

std::vector<Hypothesis> ValidationReport::failing() const {
  std::vector<Hypothesis> out;
  for (Hypothesis h : kAllHypotheses) {
    if (!(*this)[h].pass) out.push_back(h);
  }
  return out;
}

ValidationReport validate(const GainGraph& g) {
  ValidationReport report;

  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    const EdgeSet& loops = g.loops_at(v);
    if (loops.size() > 1) fail(report[Hypothesis::H5], loops);
    for (EdgeId l : loops) {
      if (g.edge(l).gain.is_identity()) fail(report[Hypothesis::H4], {l});
    }
  }

  for (auto [u, v] : g.occupied_pairs()) {
    if (u == v) continue;
    const EdgeSet& links = g.edges_between(u, v);
    const std::size_t m = links.size();

    if (m > 3) fail(report[Hypothesis::H3], links);

    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const Gain a = g.edge(links[i]).gain_from(u);
        const Gain b = g.edge(links[j]).gain_from(u);
        if (a == b) fail(report[Hypothesis::H4], {links[i], links[j]});

        for (EdgeId lu : g.loops_at(u)) {
          for (EdgeId lv : g.loops_at(v)) fail(report[Hypothesis::H1], {links[i], links[j], lu, lv});
        }

        for (std::size_t k = j + 1; k < m; ++k) {
          for (VertexId end : {u, v}) {
            for (EdgeId loop : g.loops_at(end)) fail(report[Hypothesis::H2], {links[i], links[j], links[k], loop});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace falkkit
