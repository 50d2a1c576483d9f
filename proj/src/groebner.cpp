#include "polyopt/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polyopt {
namespace {

using Poly = GroebnerBasis::Poly;

const GrevlexLess kLess{};

// f + c * m * g, all ascending.
Poly axpy(const Poly& f, const Rational& c, const Monomial& m, const Poly& g) {
  Poly out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].monomial * m;
    if (i == f.size() || kLess(gm, f[i].monomial)) {
      out.push_back({gm, c * g[j].coefficient});
      ++j;
    } else if (kLess(f[i].monomial, gm)) {
      out.push_back(f[i++]);
    } else {
      Rational s = f[i].coefficient + c * g[j].coefficient;
      if (s != 0) out.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Poly& f) {
  if (f.empty()) return;
  const Rational inv = 1 / f.back().coefficient;
  if (inv == 1) return;
  for (auto& t : f) t.coefficient *= inv;
}

// Full reduction of f by the polynomials at `active` positions of `pool`.
Poly reduce(Poly f, const std::vector<Poly>& pool, const std::vector<std::size_t>& active) {
  Poly rest;  // irreducible terms, collected descending
  while (!f.empty()) {
    const Term& lead = f.back();
    const Poly* divisor = nullptr;
    for (std::size_t k : active) {
      if (pool[k].back().monomial.divides(lead.monomial)) {
        divisor = &pool[k];
        break;
      }
    }
    if (divisor == nullptr) {
      rest.push_back(lead);
      f.pop_back();
      continue;
    }
    const Rational c = -lead.coefficient / divisor->back().coefficient;
    const Monomial m = lead.monomial / divisor->back().monomial;
    // The leading terms cancel exactly; drop them before merging.
    Poly g(divisor->begin(), divisor->end() - 1);
    f.pop_back();
    f = axpy(f, c, m, g);
  }
  std::reverse(rest.begin(), rest.end());
  return rest;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Monomial l = f.back().monomial.lcm(g.back().monomial);
  Poly a(f.begin(), f.end() - 1);
  Poly b(g.begin(), g.end() - 1);
  Poly left = axpy(Poly{}, 1 / f.back().coefficient, l / f.back().monomial, a);
  return axpy(left, -1 / g.back().coefficient, l / g.back().monomial, b);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

Poly GroebnerBasis::to_poly(const MultiPoly& f) {
  Poly out(f.terms().begin(), f.terms().end());
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return kLess(a.monomial, b.monomial); });
  return out;
}

MultiPoly GroebnerBasis::from_poly(const Poly& f, std::size_t num_variables) {
  return MultiPoly::from_terms(num_variables, std::vector<Term>(f.begin(), f.end()));
}

GroebnerBasis::GroebnerBasis(std::span<const MultiPoly> generators, std::size_t num_variables)
    : nvars_(num_variables) {
  std::vector<Poly> pool;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  // Gebauer–Möller criteria on insertion of a new element.
  auto insert = [&](Poly h) {
    make_monic(h);
    const std::size_t hi = pool.size();
    pool.push_back(std::move(h));
    const Monomial& lh = pool[hi].back().monomial;

    std::vector<Pair> fresh;
    for (std::size_t g : active) fresh.push_back({g, hi, pool[g].back().monomial.lcm(lh)});
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Monomial& lg = pool[fresh[a].i].back().monomial;
      if (lg.coprime(lh)) {
        kept.push_back(fresh[a]);
        continue;
      }
      bool redundant = false;
      for (std::size_t b = 0; b < fresh.size() && !redundant; ++b) {
        if (b == a) continue;
        const bool divides = fresh[b].lcm.divides(fresh[a].lcm);
        if (!divides) continue;
        // Strict divisibility, or equal lcm with a tie broken by position.
        if (!(fresh[b].lcm == fresh[a].lcm) || b < a) redundant = true;
      }
      if (!redundant) kept.push_back(fresh[a]);
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      const bool drop = lh.divides(p.lcm) && !(pool[p.i].back().monomial.lcm(lh) == p.lcm) &&
                        !(pool[p.j].back().monomial.lcm(lh) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!pool[p.i].back().monomial.coprime(lh)) next.push_back(std::move(p));
    pairs = std::move(next);
    std::vector<std::size_t> still;
    for (std::size_t g : active)
      if (!lh.divides(pool[g].back().monomial)) still.push_back(g);
    still.push_back(hi);
    active = std::move(still);
  };

  for (const auto& g : generators) {
    if (g.num_variables() != nvars_) throw std::invalid_argument("generator ring mismatch");
    Poly h = reduce(to_poly(g), pool, active);
    if (h.empty()) continue;
    if (h.back().monomial.is_one()) {
      basis_ = {Poly{{Monomial(), Rational(1)}}};
      return;
    }
    insert(std::move(h));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [](const Pair& a, const Pair& b) { return kLess(a.lcm, b.lcm); });
    const Pair p = *best;
    pairs.erase(best);
    Poly h = reduce(s_polynomial(pool[p.i], pool[p.j]), pool, active);
    if (h.empty()) continue;
    if (h.back().monomial.is_one()) {
      basis_ = {Poly{{Monomial(), Rational(1)}}};
      return;
    }
    insert(std::move(h));
  }

  // Interreduce the minimal basis.
  std::vector<Poly> minimal;
  for (std::size_t g : active) minimal.push_back(pool[g]);
  std::sort(minimal.begin(), minimal.end(),
            [](const Poly& a, const Poly& b) { return kLess(a.back().monomial, b.back().monomial); });
  std::vector<std::size_t> all(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) all[k] = k;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<std::size_t> others;
    for (std::size_t o : all)
      if (o != k) others.push_back(o);
    Term lead = minimal[k].back();
    Poly tail(minimal[k].begin(), minimal[k].end() - 1);
    Poly reduced = reduce(std::move(tail), minimal, others);
    reduced.push_back(std::move(lead));
    minimal[k] = std::move(reduced);
    make_monic(minimal[k]);
  }
  basis_ = std::move(minimal);
}

bool GroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_[0].size() == 1 && basis_[0][0].monomial.is_one();
}

std::vector<MultiPoly> GroebnerBasis::polynomials() const {
  std::vector<MultiPoly> out;
  for (const auto& g : basis_) out.push_back(from_poly(g, nvars_));
  return out;
}

Poly GroebnerBasis::normal_form(Poly f) const {
  std::vector<std::size_t> all(basis_.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return reduce(std::move(f), basis_, all);
}

MultiPoly GroebnerBasis::normal_form(const MultiPoly& f) const {
  return from_poly(normal_form(to_poly(f)), nvars_);
}

std::optional<std::vector<Monomial>> GroebnerBasis::standard_monomials() const {
  if (is_unit()) return std::vector<Monomial>{};
  std::vector<std::uint32_t> bound(nvars_, 0);
  for (std::size_t v = 0; v < nvars_; ++v) {
    for (const auto& g : basis_) {
      const Monomial& lm = g.back().monomial;
      if (lm.degree() == lm[v]) {
        bound[v] = bound[v] == 0 ? lm[v] : std::min(bound[v], lm[v]);
      }
    }
    if (bound[v] == 0) return std::nullopt;
  }
  auto reducible = [&](const Monomial& m) {
    for (const auto& g : basis_)
      if (g.back().monomial.divides(m)) return true;
    return false;
  };
  // Order ideal walk: extend standard monomials one variable at a time.
  std::set<Monomial, GrevlexLess> found{Monomial()};
  std::vector<Monomial> frontier{Monomial()};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (std::size_t v = 0; v < nvars_; ++v) {
        if (m[v] + 1 >= bound[v]) continue;
        Monomial e = m * Monomial::variable(v);
        if (reducible(e) || found.count(e)) continue;
        found.insert(e);
        next.push_back(e);
      }
    frontier = std::move(next);
  }
  return std::vector<Monomial>(found.begin(), found.end());
}

}  // namespace polyopt
