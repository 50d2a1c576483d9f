#pragma once

#include "polyopt/rational.hpp"
#include "polyopt/unipoly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polyopt {

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix operator*(const QMatrix& other) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  QMatrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(QMatrix m);
Rational determinant(QMatrix m);
/// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve(QMatrix a, std::vector<Rational> b);
/// det(T*I - m), monic.
UniPoly characteristic_polynomial(const QMatrix& m);

}  // namespace polyopt
