#pragma once

#include "polyopt/multipoly.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace polyopt {

/// Rectangular matrix of polynomials over a shared variable set.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_variables);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t num_variables() const { return nvars_; }

  MultiPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  /// Appends the rows of `below`; column counts must agree.
  PolyMatrix stacked(const PolyMatrix& below) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<MultiPoly> data_;
};

/// (|fs| x n) matrix of partial derivatives.
PolyMatrix jacobian(std::span<const MultiPoly> fs);

/// Row vector of partials of a single polynomial.
PolyMatrix gradient_row(const MultiPoly& f);

/// Determinant of the submatrix on `rows` x `cols`, in the given column order.
MultiPoly minor(const PolyMatrix& m, std::span<const std::size_t> rows,
                std::span<const std::size_t> cols);

/// Square-matrix determinant: cofactor expansion up to 4x4, Bareiss beyond.
MultiPoly determinant(const PolyMatrix& m);
MultiPoly determinant_cofactor(const PolyMatrix& m);
MultiPoly determinant_bareiss(const PolyMatrix& m);

/// All square minors of full row size (rows() x rows()), columns in increasing order.
std::vector<MultiPoly> maximal_minors(const PolyMatrix& m);

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b);

/// Increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace polyopt
