#include "polyopt/poly_matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace polyopt {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_variables)
    : rows_(rows), cols_(cols), nvars_(num_variables), data_(rows * cols, MultiPoly(num_variables)) {}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols) const {
  PolyMatrix s(rows.size(), cols.size(), nvars_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_) throw std::out_of_range("minor index");
      s(i, j) = (*this)(rows[i], cols[j]);
    }
  return s;
}

PolyMatrix PolyMatrix::stacked(const PolyMatrix& below) const {
  if (rows_ != 0 && below.rows_ != 0 && cols_ != below.cols_)
    throw std::invalid_argument("column mismatch when stacking");
  PolyMatrix s(rows_ + below.rows_, rows_ != 0 ? cols_ : below.cols_,
               std::max(nvars_, below.nvars_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < below.cols_; ++j) s(rows_ + i, j) = below(i, j);
  return s;
}

PolyMatrix jacobian(std::span<const MultiPoly> fs) {
  if (fs.empty()) throw std::invalid_argument("jacobian of an empty list");
  const std::size_t n = fs.front().num_variables();
  PolyMatrix j(fs.size(), n, n);
  for (std::size_t r = 0; r < fs.size(); ++r) {
    if (fs[r].num_variables() != n) throw std::invalid_argument("mixed variable sets");
    for (std::size_t c = 0; c < n; ++c) j(r, c) = fs[r].partial_derivative(c);
  }
  return j;
}

PolyMatrix gradient_row(const MultiPoly& f) { return jacobian(std::span<const MultiPoly>(&f, 1)); }

MultiPoly minor(const PolyMatrix& m, std::span<const std::size_t> rows,
                std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor must be square");
  return determinant(m.submatrix(rows, cols));
}

MultiPoly determinant(const PolyMatrix& m) {
  return m.rows() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

MultiPoly determinant_cofactor(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly::constant(m.num_variables(), 1);
  if (n == 1) return m(0, 0);
  MultiPoly det(m.num_variables());
  std::vector<std::size_t> rest_rows(n - 1);
  std::iota(rest_rows.begin(), rest_rows.end(), 1);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    std::vector<std::size_t> rest_cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) rest_cols.push_back(k);
    MultiPoly term = m(0, c) * determinant_cofactor(m.submatrix(rest_rows, rest_cols));
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

MultiPoly determinant_bareiss(const PolyMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  const std::size_t nv = input.num_variables();
  if (n == 0) return MultiPoly::constant(nv, 1);
  PolyMatrix a = input;
  MultiPoly previous = MultiPoly::constant(nv, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return MultiPoly(nv);
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_quotient(a(i, j) * a(k, k) - a(i, k) * a(k, j), previous);
      a(i, k) = MultiPoly(nv);
    }
    previous = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

std::vector<MultiPoly> maximal_minors(const PolyMatrix& m) {
  std::vector<std::size_t> rows(m.rows());
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<MultiPoly> out;
  for (const auto& cols : combinations(m.cols(), m.rows())) out.push_back(minor(m, rows, cols));
  return out;
}

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const std::size_t nv = std::max(a.num_variables(), b.num_variables());
  const Term& lead = b.terms().front();
  MultiPoly rem = a;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& t = rem.terms().front();
    if (!lead.monomial.divides(t.monomial)) throw std::domain_error("inexact polynomial division");
    Term q{t.monomial / lead.monomial, t.coefficient / lead.coefficient};
    quotient.push_back(q);
    rem -= b * MultiPoly::from_terms(nv, {q});
  }
  return MultiPoly::from_terms(nv, std::move(quotient));
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> current(k);
  std::iota(current.begin(), current.end(), 0);
  for (;;) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace polyopt
