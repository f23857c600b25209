#ifndef FALKKIT_REALIZATION_HPP
#define FALKKIT_REALIZATION_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "falkkit/bias_patterns.hpp"
#include "falkkit/gain_graph.hpp"

namespace falkkit {

/// Linear hyperplane of Q^l attached to an edge, stored by its normal.
/// A link tail -> head with gain g gives x_tail - g x_head; a loop at u gives x_u.
struct Hyperplane {
  EdgeId edge = 0;
  std::vector<mpq_class> normal;  // length = num_vertices

  /// `<c1> <c2> ... <cl>` with reduced rationals.
  std::string coefficients_str() const;
};

/// The canonical linear representation, one hyperplane per edge in id order.
/// Throws std::invalid_argument when two normals are proportional, which
/// happens exactly when a loop or 2-circle is balanced or a vertex has two
/// loops.
std::vector<Hyperplane> arrangement(const GainGraph& g);

/// Exact rank of a small dense rational matrix given by rows.
std::size_t dense_rank(std::vector<std::vector<mpq_class>> rows);

/// All 3-sets of edges whose normals are linearly dependent, lexicographic.
std::vector<Triple> dependent_3sets(const GainGraph& g);

}  // namespace falkkit

#endif  // FALKKIT_REALIZATION_HPP
