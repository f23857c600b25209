#include "falkkit/os_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace falkkit {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void require_increasing(const Monomial& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) throw std::invalid_argument("monomial indices must be strictly increasing");
  }
}

}  // namespace

std::uint64_t basis_ordinal(const Monomial& s, int n) {
  require_increasing(s);
  const auto k = static_cast<std::int64_t>(s.size());
  std::uint64_t ordinal = 0;
  EdgeId prev = 0;
  for (std::int64_t i = 0; i < k; ++i) {
    if (s[static_cast<std::size_t>(i)] < 1 || s[static_cast<std::size_t>(i)] > n) {
      throw std::out_of_range("monomial index out of range");
    }
    for (EdgeId j = prev + 1; j < s[static_cast<std::size_t>(i)]; ++j) {
      ordinal += static_cast<std::uint64_t>(binomial(n - j, k - i - 1));
    }
    prev = s[static_cast<std::size_t>(i)];
  }
  return ordinal;
}

Monomial basis_monomial(std::uint64_t ordinal, int degree, int n) {
  Monomial s;
  EdgeId next = 1;
  for (int i = 0; i < degree; ++i) {
    for (;; ++next) {
      if (next > n) throw std::out_of_range("ordinal out of range");
      auto block = static_cast<std::uint64_t>(binomial(n - next, degree - i - 1));
      if (ordinal < block) break;
      ordinal -= block;
    }
    s.push_back(next++);
  }
  if (ordinal != 0) throw std::out_of_range("ordinal out of range");
  return s;
}

// -- ExteriorVector ---------------------------------------------------------

void ExteriorVector::add(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != degree_) throw std::invalid_argument("monomial degree mismatch");
  require_increasing(m);
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ExteriorVector::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string ExteriorVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << "e_{";
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
    out << '}';
    first = false;
  }
  return out.str();
}

ExteriorVector boundary(const Monomial& s) {
  if (s.empty()) throw std::invalid_argument("boundary of the unit is not defined here");
  require_increasing(s);
  ExteriorVector out(static_cast<int>(s.size()) - 1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    Monomial face;
    face.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != j) face.push_back(s[i]);
    }
    out.add(face, j % 2 == 0 ? 1 : -1);
  }
  return out;
}

ExteriorVector boundary(const ExteriorVector& v) {
  ExteriorVector out(v.degree() - 1);
  for (const auto& [m, c] : v.terms()) {
    const ExteriorVector faces = boundary(m);
    for (const auto& [face, d] : faces.terms()) out.add(face, c * d);
  }
  return out;
}

ExteriorVector boundary3(const Triple& s) { return boundary(Monomial(s.begin(), s.end())); }

ExteriorVector wedge1(EdgeId t, const ExteriorVector& v) {
  ExteriorVector out(v.degree() + 1);
  for (const auto& [m, c] : v.terms()) {
    if (std::binary_search(m.begin(), m.end(), t)) continue;
    // Moving e_t past every smaller index costs one sign flip each.
    auto pos = std::lower_bound(m.begin(), m.end(), t);
    const auto flips = pos - m.begin();
    Monomial merged(m.begin(), pos);
    merged.push_back(t);
    merged.insert(merged.end(), pos, m.end());
    out.add(merged, flips % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

// -- RationalMatrix ---------------------------------------------------------

void RationalMatrix::add_row(const ExteriorVector& row) {
  if (row.degree() != degree_) throw std::invalid_argument("row degree mismatch");
  SparseRow sparse;
  sparse.reserve(row.terms().size());
  for (const auto& [m, c] : row.terms()) sparse.emplace_back(basis_ordinal(m, n_), c);
  std::sort(sparse.begin(), sparse.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  rows_.push_back(std::move(sparse));
}

std::size_t RationalMatrix::rank() const {
  // Pivot rows keyed by leading column, scaled so the leading entry is 1.
  std::map<std::uint64_t, SparseRow> pivots;
  SparseRow scratch;
  for (SparseRow r : rows_) {
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        const Rational lead = r.front().second;
        for (auto& [col, val] : r) val /= lead;
        const std::uint64_t col = r.front().first;
        pivots.emplace(col, std::move(r));
        break;
      }
      const Rational factor = r.front().second;
      const SparseRow& p = it->second;
      scratch.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
          scratch.push_back(std::move(r[i++]));
        } else if (i == r.size() || p[j].first < r[i].first) {
          scratch.emplace_back(p[j].first, -factor * p[j].second);
          ++j;
        } else {
          Rational v = r[i].second - factor * p[j].second;
          if (v != 0) scratch.emplace_back(r[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      std::swap(r, scratch);
    }
  }
  return pivots.size();
}

// -- dimensions -------------------------------------------------------------

std::size_t dim_I2(int num_edges, std::span<const Triple> dependent) {
  RationalMatrix m(num_edges, 2);
  for (const Triple& s : dependent) m.add_row(boundary3(s));
  return m.rank();
}

std::size_t dim_A2(int num_edges, std::span<const Triple> dependent) {
  return static_cast<std::size_t>(binomial(num_edges, 2)) - dim_I2(num_edges, dependent);
}

SpanF3 span_F3(int num_edges, std::span<const Triple> dependent) {
  RationalMatrix m(num_edges, 3);
  for (const Triple& s : dependent) {
    const ExteriorVector d = boundary3(s);
    for (EdgeId t = 1; t <= num_edges; ++t) {
      if (std::find(s.begin(), s.end(), t) != s.end()) continue;
      m.add_row(wedge1(t, d));
    }
  }
  return SpanF3{m.rows(), m.rank()};
}

std::size_t dim_I3_2(int num_edges, std::span<const Triple> dependent) {
  RationalMatrix m(num_edges, 3);
  for (const Triple& s : dependent) {
    const ExteriorVector d = boundary3(s);
    for (EdgeId t = 1; t <= num_edges; ++t) m.add_row(wedge1(t, d));
  }
  return m.rank();
}

std::vector<Triple> triple_sets(std::span<const Triangle> ts) {
  std::vector<Triple> out;
  out.reserve(ts.size());
  for (const Triangle& t : ts) out.push_back(t.edges);
  return out;
}

}  // namespace falkkit
