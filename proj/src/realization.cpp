#include "falkkit/realization.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace falkkit {

std::string Hyperplane::coefficients_str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < normal.size(); ++i) out << (i ? " " : "") << normal[i].get_str();
  return out.str();
}

std::size_t dense_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<Hyperplane> arrangement(const GainGraph& g) {
  const auto dim = static_cast<std::size_t>(g.num_vertices());
  std::vector<Hyperplane> out;
  out.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const Edge& e : g.edges()) {
    Hyperplane h{e.id, std::vector<mpq_class>(dim, 0)};
    h.normal[static_cast<std::size_t>(e.tail - 1)] = 1;
    if (!e.is_loop()) h.normal[static_cast<std::size_t>(e.head - 1)] = -e.gain.value();
    out.push_back(std::move(h));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (dense_rank({out[i].normal, out[j].normal}) < 2) {
        throw std::invalid_argument("hyperplanes of edges " + std::to_string(out[i].edge) + " and " +
                                    std::to_string(out[j].edge) + " coincide");
      }
    }
  }
  return out;
}

std::vector<Triple> dependent_3sets(const GainGraph& g) {
  const auto hs = arrangement(g);
  std::vector<Triple> out;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      for (std::size_t k = j + 1; k < hs.size(); ++k) {
        if (dense_rank({hs[i].normal, hs[j].normal, hs[k].normal}) < 3) {
          out.push_back({hs[i].edge, hs[j].edge, hs[k].edge});
        }
      }
    }
  }
  return out;
}

}  // namespace falkkit
