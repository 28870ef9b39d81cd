#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qgl3/scalar.hpp"

namespace qgl3 {

// Dense matrix of Laurent scalars.  Column indices are opaque labels
// assigned by the caller.
struct ScalarMatrix {
  std::size_t cols = 0;
  std::vector<std::vector<LaurentScalar>> rows;

  ScalarMatrix() = default;
  explicit ScalarMatrix(std::size_t c) : cols(c) {}

  void add_row(std::vector<LaurentScalar> r) {
    if (r.size() != cols) throw ShapeError("row width mismatch");
    rows.push_back(std::move(r));
  }
};

namespace detail {

// Joint normalization of a row: strip the common monomial factor and
// rescale so the coefficients are coprime integers with positive lead.
inline void normalize_row(std::vector<LaurentScalar>& row) {
  LaurentScalar* first = nullptr;
  for (auto& s : row)
    if (!s.is_zero()) {
      first = &s;
      break;
    }
  if (!first) return;
  Expo content = first->monomial_content();
  mpz_class num_gcd = 0, den_lcm = 1;
  for (auto& s : row) {
    if (s.is_zero()) continue;
    Expo c = s.monomial_content();
    for (int i = 0; i < 4; ++i) content.e[i] = std::min(content.e[i], c.e[i]);
    for (const auto& [x, k] : s.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
              k.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              k.get_den().get_mpz_t());
    }
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  bool negate = first->terms().rbegin()->second < 0;
  if (negate) scale = -scale;
  Expo shift = -content;
  for (auto& s : row) {
    if (s.is_zero()) continue;
    s = s.shifted(shift).scaled(scale);
  }
}

}  // namespace detail

// Echelonized basis of a row space, built fraction-free.  Basis rows are
// kept sorted by pivot column; queries reduce to a canonical remainder
// (up to a nonzero ring scale, which is returned alongside).
class RowBasis {
 public:
  explicit RowBasis(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(r.pivot);
    return p;
  }

  const std::vector<LaurentScalar>& row(std::size_t i) const {
    return rows_[i].data;
  }

  // remainder = scale * (v modulo the row space), scale a nonzero scalar.
  struct Reduced {
    std::vector<LaurentScalar> remainder;
    LaurentScalar scale;
    bool is_zero() const {
      for (const auto& s : remainder)
        if (!s.is_zero()) return false;
      return true;
    }
  };

  Reduced reduce(std::vector<LaurentScalar> v) const {
    if (v.size() != cols_) throw ShapeError("vector width mismatch");
    LaurentScalar scale = LaurentScalar::one();
    for (const auto& b : rows_) {
      const LaurentScalar& c = v[b.pivot];
      if (c.is_zero()) continue;
      const LaurentScalar& p = b.data[b.pivot];
      LaurentScalar coef = c;  // v <- p*v - c*b, zeroing the pivot column
      for (std::size_t j = 0; j < cols_; ++j) {
        v[j] = p * v[j] - coef * b.data[j];
      }
      scale = scale * p;
    }
    return {std::move(v), std::move(scale)};
  }

  bool contains(std::vector<LaurentScalar> v) const {
    return reduce(std::move(v)).is_zero();
  }

  // Inserts v if independent of the current rows; returns true when the
  // rank grew.
  bool insert(std::vector<LaurentScalar> v) {
    auto red = reduce(std::move(v));
    if (red.is_zero()) return false;
    detail::normalize_row(red.remainder);
    std::size_t piv = 0;
    while (red.remainder[piv].is_zero()) ++piv;
    Row r{piv, std::move(red.remainder)};
    auto it = rows_.begin();
    while (it != rows_.end() && it->pivot < piv) ++it;
    rows_.insert(it, std::move(r));
    return true;
  }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<LaurentScalar> data;
  };

  std::size_t cols_;
  std::vector<Row> rows_;  // sorted by pivot column
};

struct RowReduceResult {
  ScalarMatrix basis;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

inline RowReduceResult row_reduce(const ScalarMatrix& m) {
  RowBasis basis(m.cols);
  for (const auto& r : m.rows) basis.insert(r);
  RowReduceResult out;
  out.basis = ScalarMatrix(m.cols);
  for (std::size_t i = 0; i < basis.rank(); ++i) out.basis.add_row(basis.row(i));
  out.rank = basis.rank();
  out.pivots = basis.pivots();
  return out;
}

}  // namespace qgl3
