#include "polyopt/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace polyopt {

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  if (i >= kMaxVariables) throw std::out_of_range("monomial variable index");
  if (e > std::numeric_limits<std::uint16_t>::max())
    throw std::overflow_error("monomial exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const std::uint32_t e = std::uint32_t{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max())
      throw std::overflow_error("monomial exponent overflow");
    m.exps_[i] = static_cast<std::uint16_t>(e);
  }
  m.degree_ = degree_ + other.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    m.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
  m.degree_ = degree_ - other.degree_;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exps_[i] = std::max(exps_[i], other.exps_[i]);
    d += m.exps_[i];
  }
  m.degree_ = d;
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool GrevlexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = kMaxVariables; i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

}  // namespace polyopt
