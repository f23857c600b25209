#ifndef FALKKIT_SRC_MATCHER_HPP
#define FALKKIT_SRC_MATCHER_HPP

#include <functional>

#include "falkkit/gain_graph.hpp"

namespace falkkit::detail {

/// Receives the sorted host edge set of each embedding; return false to stop.
using EmbedCallback = std::function<bool(const EdgeSet&)>;

/// Enumerates incidence-preserving injections of `pattern` into `host` under
/// which every pattern circle keeps its balance. With `bijective`, vertex and
/// edge counts must match exactly. The pattern must be small enough for
/// all_circles_small.
void embed(const GainGraph& pattern, const GainGraph& host, bool bijective, const EmbedCallback& on_match);

}  // namespace falkkit::detail

#endif  // FALKKIT_SRC_MATCHER_HPP
