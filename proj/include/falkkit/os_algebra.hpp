#ifndef FALKKIT_OS_ALGEBRA_HPP
#define FALKKIT_OS_ALGEBRA_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "falkkit/bias_patterns.hpp"
#include "falkkit/gain_graph.hpp"

namespace falkkit {

using Rational = mpq_class;

/// Strictly increasing tuple of edge ids naming a basis monomial e_S.
using Monomial = std::vector<EdgeId>;

/// Position of `s` among all |s|-subsets of {1..n} in lexicographic order.
std::uint64_t basis_ordinal(const Monomial& s, int n);
/// Inverse of basis_ordinal.
Monomial basis_monomial(std::uint64_t ordinal, int degree, int n);

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Sparse element of the degree-p part of the exterior algebra on the edge
/// symbols, exact rational coefficients. Zero coefficients are never stored.
class ExteriorVector {
 public:
  explicit ExteriorVector(int degree) : degree_(degree) {}

  int degree() const noexcept { return degree_; }
  /// Adds c * e_m. Throws std::invalid_argument on a degree mismatch or a
  /// monomial that is not strictly increasing.
  void add(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::string str() const;

  friend bool operator==(const ExteriorVector&, const ExteriorVector&) = default;

 private:
  int degree_;
  std::map<Monomial, Rational> terms_;
};

/// The differential: d e_S = sum_j (-1)^(j-1) e_{S minus s_j}. Requires a
/// strictly increasing S with |S| >= 1.
ExteriorVector boundary(const Monomial& s);
/// Linear extension of `boundary` to a vector.
ExteriorVector boundary(const ExteriorVector& v);
/// d e_{ijk} for i < j < k.
ExteriorVector boundary3(const Triple& s);

/// e_t wedge v. Terms whose monomial already contains t vanish.
ExteriorVector wedge1(EdgeId t, const ExteriorVector& v);

/// Rows of exterior vectors of a common degree, with an exact rank over Q.
/// Columns are the C(n, degree) basis monomials in lexicographic order.
class RationalMatrix {
 public:
  RationalMatrix(int num_symbols, int degree) : n_(num_symbols), degree_(degree) {}

  void add_row(const ExteriorVector& row);
  std::size_t rows() const noexcept { return rows_.size(); }
  std::uint64_t columns() const { return static_cast<std::uint64_t>(binomial(n_, degree_)); }
  /// Gaussian elimination over Q with the first nonzero column as pivot.
  std::size_t rank() const;

 private:
  using SparseRow = std::vector<std::pair<std::uint64_t, Rational>>;
  int n_;
  int degree_;
  std::vector<SparseRow> rows_;
};

/// dim I^2: rank of the boundaries of the dependent 3-sets.
std::size_t dim_I2(int num_edges, std::span<const Triple> dependent);
/// dim A^2 = C(n,2) - dim I^2.
std::size_t dim_A2(int num_edges, std::span<const Triple> dependent);

struct SpanF3 {
  std::size_t size = 0;  ///< |F3| = |T| (n - 3)
  std::size_t rank = 0;
};

/// F3 = { e_t d e_S : S dependent, t not in S }.
SpanF3 span_F3(int num_edges, std::span<const Triple> dependent);

/// dim I^3_2, the rank of { e_t d e_S : S dependent, t in 1..n } computed by
/// elimination on the full spanning set.
std::size_t dim_I3_2(int num_edges, std::span<const Triple> dependent);

/// Edge sets of triangles as plain triples.
std::vector<Triple> triple_sets(std::span<const Triangle> ts);

}  // namespace falkkit

#endif  // FALKKIT_OS_ALGEBRA_HPP
