#include "polyopt/real_algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyopt {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p1 = a.lo * b.lo;
  const Rational p2 = a.lo * b.hi;
  const Rational p3 = a.hi * b.lo;
  const Rational p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval evaluate(const UniPoly& p, const Interval& x) {
  const auto& c = p.coefficients();
  Interval acc{0, 0};
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * x;
    acc.lo += c[i];
    acc.hi += c[i];
  }
  return acc;
}

RealAlgebraic::RealAlgebraic(const Rational& value)
    : defining_(UniPoly::linear_root(value)), lo_(value), hi_(value) {}

RealAlgebraic::RealAlgebraic(UniPoly defining, Rational lo, Rational hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("empty isolating interval");
  if (lo_ == hi_) {
    if (defining_.evaluate(lo_) != 0) throw std::invalid_argument("point interval is not a root");
    defining_ = UniPoly::linear_root(lo_);
    return;
  }
  if (sgn(defining_.evaluate(lo_)) * sgn(defining_.evaluate(hi_)) >= 0)
    throw std::invalid_argument("isolating interval without sign change");
}

RealAlgebraic RealAlgebraic::bisected() const {
  if (is_rational()) return *this;
  const Rational mid = (lo_ + hi_) / 2;
  const int sm = sgn(defining_.evaluate(mid));
  if (sm == 0) return RealAlgebraic(mid);
  RealAlgebraic out = *this;
  if (sgn(defining_.evaluate(lo_)) == sm) {
    out.lo_ = mid;
  } else {
    out.hi_ = mid;
  }
  return out;
}

std::string RealAlgebraic::approx(int digits) const {
  if (is_rational()) return to_decimal(lo_, digits);
  Rational width = 1;
  for (int i = 0; i < digits + 2; ++i) width /= 10;
  const RealAlgebraic r = refine(*this, width);
  return to_decimal((r.lo_ + r.hi_) / 2, digits);
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UniPoly d = p.derivative();
  while (!d.is_zero()) {
    seq.push_back(d);
    const std::size_t k = seq.size();
    d = -(seq[k - 2] % seq[k - 1]);
    // Positive rescaling keeps sign variations intact and tames coefficients.
    if (!d.is_zero()) d = d.scaled(1 / abs_value(d.leading()));
  }
  return seq;
}

namespace {

std::size_t variations_at(const std::vector<UniPoly>& seq, const Rational& x) {
  std::size_t count = 0;
  int last = 0;
  for (const auto& s : seq) {
    const int v = sgn(s.evaluate(x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

std::size_t variations_at_infinity(const std::vector<UniPoly>& seq, bool positive) {
  std::size_t count = 0;
  int last = 0;
  for (const auto& s : seq) {
    int v = sgn(s.leading());
    if (!positive && s.degree() % 2 == 1) v = -v;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

// Upper bound on roots in the open interval (a, b), exact when 0 or 1.
std::size_t descartes_bound(const UniPoly& p, const Rational& a, const Rational& b) {
  const UniPoly q = p.taylor_shift(a).dilate(b - a);
  return q.reversed().taylor_shift(1).sign_variations();
}

}  // namespace

std::size_t sturm_count(const std::vector<UniPoly>& sequence, const Rational& lo, const Rational& hi) {
  if (sequence.empty() || lo >= hi) return 0;
  return variations_at(sequence, lo) - variations_at(sequence, hi);
}

std::size_t real_root_count(const UniPoly& p) {
  const auto seq = sturm_sequence(p);
  if (seq.empty()) throw std::invalid_argument("root count of the zero polynomial");
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

Rational cauchy_bound(const UniPoly& p) {
  Rational m = 0;
  const Rational lead = abs_value(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs_value(p.coefficient(static_cast<std::size_t>(i))) / lead));
  return 1 + m;
}

std::vector<RealAlgebraic> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
  const UniPoly s = square_free_part(p);
  std::vector<RealAlgebraic> out;
  if (s.degree() <= 0) return out;

  struct Open {
    Rational a;
    Rational b;
  };
  std::vector<std::pair<Open, bool>> items;  // (interval, is_point)
  const Rational bound = cauchy_bound(s);
  std::vector<Open> stack{{-bound, bound}};
  while (!stack.empty()) {
    const Open cur = stack.back();
    stack.pop_back();
    const std::size_t v = descartes_bound(s, cur.a, cur.b);
    if (v == 0) continue;
    if (v == 1) {
      items.push_back({cur, false});
      continue;
    }
    const Rational mid = (cur.a + cur.b) / 2;
    if (s.evaluate(mid) == 0) items.push_back({{mid, mid}, true});
    stack.push_back({mid, cur.b});
    stack.push_back({cur.a, mid});
  }
  for (auto& [iv, is_point] : items) {
    if (is_point) {
      out.emplace_back(iv.a);
      continue;
    }
    Rational a = iv.a;
    Rational b = iv.b;
    // Push endpoints that are themselves roots inward until both are clean.
    bool found_exact = false;
    while (s.evaluate(a) == 0 || s.evaluate(b) == 0) {
      const Rational mid = (a + b) / 2;
      if (s.evaluate(mid) == 0) {
        out.emplace_back(mid);
        found_exact = true;
        break;
      }
      if (descartes_bound(s, a, mid) == 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    if (!found_exact) out.emplace_back(s, a, b);
  }
  std::sort(out.begin(), out.end(), [](const RealAlgebraic& x, const RealAlgebraic& y) {
    return x.hi() < y.lo() || (x.hi() == y.lo() && x.lo() < y.hi());
  });

  // Closed intervals may touch at a shared non-root endpoint; pull them apart.
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    while (!(out[i].hi() < out[i + 1].lo())) {
      out[i] = out[i].bisected();
      out[i + 1] = out[i + 1].bisected();
    }

  // Certify with Sturm: each interval holds one root and the total matches.
  const auto seq = sturm_sequence(s);
  for (const auto& r : out) {
    if (r.is_rational()) continue;
    if (sturm_count(seq, r.lo(), r.hi()) != 1) throw std::logic_error("isolation certificate failed");
  }
  if (out.size() != real_root_count(s)) throw std::logic_error("isolation missed a root");
  return out;
}

RealAlgebraic refine(const RealAlgebraic& a, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refinement width must be positive");
  RealAlgebraic r = a;
  while (!r.is_rational() && r.hi() - r.lo() > width) r = r.bisected();
  return r;
}

int sign_at(const UniPoly& p, const RealAlgebraic& a) {
  if (p.is_zero()) return 0;
  if (a.is_rational()) return sgn(p.evaluate(a.rational_value()));
  const UniPoly g = gcd(p, a.defining());
  // g divides the defining polynomial, so it changes sign on the interval
  // exactly when it vanishes at the isolated root.
  if (g.degree() > 0 && sgn(g.evaluate(a.lo())) * sgn(g.evaluate(a.hi())) < 0) return 0;
  RealAlgebraic r = a;
  for (;;) {
    const Interval v = evaluate(p, r.interval());
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    r = r.bisected();
    if (r.is_rational()) return sgn(p.evaluate(r.rational_value()));
  }
}

namespace {

bool root_in(const UniPoly& g, const RealAlgebraic& a) {
  if (a.is_rational()) return g.evaluate(a.rational_value()) == 0;
  return sgn(g.evaluate(a.lo())) * sgn(g.evaluate(a.hi())) < 0;
}

}  // namespace

std::strong_ordering compare(const RealAlgebraic& a_in, const RealAlgebraic& b_in) {
  RealAlgebraic a = a_in;
  RealAlgebraic b = b_in;
  if (a.is_rational() && b.is_rational()) return cmp(a.rational_value(), b.rational_value()) <=> 0;
  if (a.hi() < b.lo()) return std::strong_ordering::less;
  if (b.hi() < a.lo()) return std::strong_ordering::greater;
  const UniPoly g = gcd(a.defining(), b.defining());
  const bool distinct = g.degree() <= 0 || !root_in(g, a) || !root_in(g, b);
  const auto seq = distinct ? std::vector<UniPoly>{} : sturm_sequence(g);
  for (;;) {
    if (a.hi() < b.lo()) return std::strong_ordering::less;
    if (b.hi() < a.lo()) return std::strong_ordering::greater;
    if (a.is_rational() && b.is_rational()) return cmp(a.rational_value(), b.rational_value()) <=> 0;
    if (!distinct) {
      // Both are roots of g; they coincide when the union holds a single one.
      const Rational lo = std::min(a.lo(), b.lo());
      const Rational hi = std::max(a.hi(), b.hi());
      const std::size_t count = sturm_count(seq, lo, hi) + (g.evaluate(lo) == 0 ? 1 : 0);
      if (count == 1) return std::strong_ordering::equal;
    }
    a = a.bisected();
    b = b.bisected();
  }
}

std::optional<RealAlgebraic> smallest_positive_root(const UniPoly& p) {
  const RealAlgebraic zero(Rational(0));
  for (const auto& r : isolate_real_roots(p))
    if (compare(r, zero) == std::strong_ordering::greater) return r;
  return std::nullopt;
}

Rational rational_strictly_below(const RealAlgebraic& a) {
  if (a.is_rational()) {
    if (a.rational_value() <= 0) throw std::invalid_argument("rational_strictly_below expects a positive number");
    return a.rational_value() / 2;
  }
  RealAlgebraic r = a;
  while (!r.is_rational() && r.lo() <= 0) {
    if (r.hi() <= 0) throw std::invalid_argument("rational_strictly_below expects a positive number");
    r = r.bisected();
  }
  if (r.is_rational()) return r.rational_value() / 2;
  return r.lo();
}

RealAlgebraic simplified(const RealAlgebraic& a, int bisections) {
  RealAlgebraic t = a;
  for (int step = 0; step <= bisections; ++step) {
    if (t.is_rational()) return t;
    if (step % 8 == 0) {
      const Rational s = simplest_between(t.lo(), t.hi());
      if (a.defining().evaluate(s) == 0) return RealAlgebraic(s);
    }
    t = t.bisected();
  }
  return a;
}

}  // namespace polyopt
