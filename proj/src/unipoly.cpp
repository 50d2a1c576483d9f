#include "polyopt/unipoly.hpp"

#include <stdexcept>

namespace polyopt {

UniPoly::UniPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly({-r, 1}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
  std::vector<Rational> v(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) v[i] += other.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& other) const { return *this + (-other); }

UniPoly UniPoly::operator*(const UniPoly& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  UniPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

UniPoly UniPoly::taylor_shift(const Rational& shift) const {
  std::vector<Rational> v = coeffs_;
  const std::size_t n = v.size();
  if (shift == 0 || n <= 1) return UniPoly(std::move(v));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) v[j] += shift * v[j + 1];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::dilate(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  Rational p = 1;
  for (auto& x : v) {
    x *= p;
    p *= c;
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::reversed() const {
  return UniPoly(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + UniPoly::constant(coeffs_[i]);
  return acc;
}

std::size_t UniPoly::sign_variations() const {
  std::size_t count = 0;
  int last = 0;
  for (const auto& c : coeffs_) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = abs_value(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) {
      out += polyopt::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += polyopt::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv = 1 / bc.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    const Rational q = rem[k] * inv;
    quot[k - db] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact univariate division");
  return q;
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return exact_div(p, gcd(p, p.derivative())).monic();
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  // Extended Euclid tracking the cofactor of a.
  UniPoly r0 = m;
  UniPoly r1 = a % m;
  UniPoly s0;
  UniPoly s1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("polynomial not invertible modulo m");
  return (s0.scaled(1 / r0.leading())) % m;
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree();
  const int n = b.degree();
  if (n == 0) {
    Rational out = 1;
    for (int i = 0; i < m; ++i) out *= b.leading();
    return out;
  }
  const UniPoly r = a % b;
  if (r.is_zero()) return 0;
  const int dr = r.degree();
  Rational factor = 1;
  for (int i = 0; i < m - dr; ++i) factor *= b.leading();
  if ((m % 2 == 1) && (n % 2 == 1)) factor = -factor;
  return factor * resultant(b, r);
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolation size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  UniPoly acc;
  for (std::size_t i = n; i-- > 0;) acc = acc * UniPoly({-xs[i], 1}) + UniPoly::constant(dd[i]);
  return acc;
}

}  // namespace polyopt
