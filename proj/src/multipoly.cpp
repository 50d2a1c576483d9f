#include "polyopt/multipoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polyopt {

namespace {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return GrlexLess{}(b, a); }
};

void check_arity(std::size_t n) {
  if (n > kMaxVariables) throw std::invalid_argument("too many variables");
}

}  // namespace

MultiPoly::MultiPoly(std::size_t num_variables) : nvars_(num_variables) {
  check_arity(num_variables);
}

MultiPoly MultiPoly::constant(std::size_t num_variables, const Rational& c) {
  MultiPoly p(num_variables);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_variables, std::size_t index) {
  if (index >= num_variables) throw std::out_of_range("variable index");
  MultiPoly p(num_variables);
  p.terms_.push_back({Monomial::variable(index), Rational(1)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t num_variables, std::vector<Term> terms) {
  std::map<Monomial, Rational, GrlexGreater> acc;
  for (auto& t : terms) {
    t.coefficient.canonicalize();
    if (t.coefficient == 0) continue;
    auto [it, inserted] = acc.try_emplace(t.monomial, t.coefficient);
    if (!inserted) it->second += t.coefficient;
  }
  MultiPoly p(num_variables);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return 0;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

std::uint32_t MultiPoly::degree_in(std::size_t index) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[index]);
  return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly r(std::max(nvars_, other.nvars_));
  r.terms_.reserve(terms_.size() + other.terms_.size());
  GrlexLess less;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && less(b->monomial, a->monomial))) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || less(a->monomial, b->monomial)) {
      r.terms_.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (c != 0) r.terms_.push_back({a->monomial, c});
      ++a;
      ++b;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const { return *this + (-other); }

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      raw.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
  return from_terms(std::max(nvars_, other.nvars_), std::move(raw));
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c == 0) return MultiPoly(nvars_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::partial_derivative(std::size_t index) const {
  if (index >= nvars_) throw std::out_of_range("variable index");
  std::vector<Term> raw;
  for (const auto& t : terms_) {
    const std::uint32_t e = t.monomial[index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(index, e - 1);
    raw.push_back({m, t.coefficient * e});
  }
  return from_terms(nvars_, std::move(raw));
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point has wrong arity");
  struct Ops {
    Rational zero() const { return 0; }
    Rational one() const { return 1; }
    Rational from_rational(const Rational& r) const { return r; }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  };
  return evaluate_with<Rational>(*this, point, Ops{});
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_) throw std::invalid_argument("compose arity");
  std::size_t m = 0;
  for (const auto& img : images) m = std::max(m, img.num_variables());
  struct Ops {
    std::size_t m;
    MultiPoly zero() const { return MultiPoly(m); }
    MultiPoly one() const { return MultiPoly::constant(m, 1); }
    MultiPoly from_rational(const Rational& r) const { return MultiPoly::constant(m, r); }
    MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
  };
  return evaluate_with<MultiPoly>(*this, images, Ops{m});
}

MultiPoly MultiPoly::extended(std::size_t num_variables) const {
  if (num_variables < nvars_) throw std::invalid_argument("cannot shrink variable set");
  check_arity(num_variables);
  MultiPoly r = *this;
  r.nvars_ = num_variables;
  return r;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == other.terms_[i].monomial) ||
        terms_[i].coefficient != other.terms_[i].coefficient)
      return false;
  return true;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    const Rational magnitude = abs_value(t.coefficient);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const auto e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += polyopt::to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += polyopt::to_string(magnitude) + "*" + mono;
    }
  }
  return out;
}

}  // namespace polyopt
