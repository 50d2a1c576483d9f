#include "polyopt/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace polyopt {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

QMatrix QMatrix::transposed() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::size_t rank(QMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve(QMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve expects a square system");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      std::swap(b[pivot], b[c]);
    }
    const Rational inv = 1 / a(c, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
  return b;
}

UniPoly characteristic_polynomial(const QMatrix& input) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  QMatrix h = input;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t pivot = c + 1;
    while (pivot < n && h(pivot, c) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(pivot, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, pivot), h(i, c + 1));
    }
    for (std::size_t i = c + 2; i < n; ++i) {
      if (h(i, c) == 0) continue;
      const Rational f = h(i, c) / h(c + 1, c);
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= f * h(c + 1, j);
      for (std::size_t r = 0; r < n; ++r) h(r, c + 1) += f * h(r, i);
    }
  }
  // Recurrence on leading principal submatrices of the Hessenberg form.
  std::vector<UniPoly> p(n + 1);
  p[0] = UniPoly::constant(1);
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = UniPoly({-h(m - 1, m - 1), 1}) * p[m - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      if (t == 0) break;
      p[m] = p[m] - p[m - i - 1].scaled(t * h(m - i - 1, m - 1));
    }
  }
  return p[n];
}

}  // namespace polyopt
