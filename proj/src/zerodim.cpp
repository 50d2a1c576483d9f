#include "polyopt/zerodim.hpp"

#include "polyopt/errors.hpp"
#include "polyopt/groebner.hpp"
#include "polyopt/linalg.hpp"
#include "polyopt/random.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace polyopt {

std::size_t SolveRequest::num_variables() const {
  if (equations.empty()) throw std::invalid_argument("solve request without equations");
  return equations.front().num_variables();
}

MultiPoly SolveRequest::effective_inequation() const {
  const std::size_t n = num_variables();
  if (inequation.num_variables() == 0) {
    if (inequation.is_zero() && !inequation.terms().empty()) return MultiPoly::constant(n, 0);
    return MultiPoly::constant(n, inequation.is_zero() ? Rational(1) : inequation.constant_term());
  }
  return inequation;
}

namespace {

// Vectors in the quotient algebra, expressed in the standard-monomial basis.
using Vec = std::vector<Rational>;

// Finite-dimensional quotient Q[X]/I with its multiplication matrices.
struct Quotient {
  std::size_t nvars = 0;
  std::vector<Monomial> basis;
  std::vector<QMatrix> mult;  // one per variable

  std::size_t dim() const { return basis.size(); }
};

Quotient build_quotient(const GroebnerBasis& gb, const std::vector<Monomial>& basis) {
  Quotient out;
  out.nvars = gb.num_variables();
  out.basis = basis;
  std::map<Monomial, std::size_t, GrevlexLess> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
  const std::size_t d = basis.size();
  for (std::size_t v = 0; v < out.nvars; ++v) {
    QMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const Monomial shifted = basis[j] * Monomial::variable(v);
      auto it = index.find(shifted);
      if (it != index.end()) {
        m(it->second, j) = 1;
        continue;
      }
      const auto nf = gb.normal_form(GroebnerBasis::Poly{{shifted, Rational(1)}});
      for (const auto& t : nf) m(index.at(t.monomial), j) = t.coefficient;
    }
    out.mult.push_back(std::move(m));
  }
  return out;
}

// Incremental echelon form of Krylov vectors M^k e, each row remembering
// the polynomial in M that produced it.
class KrylovEchelon {
 public:
  explicit KrylovEchelon(std::size_t dim) : dim_(dim) {}

  // Reduces w (known to equal e(M) applied to the start vector).
  // Returns true and stores the row if w is independent of the rows so far.
  bool add(Vec w, UniPoly e, UniPoly* relation) {
    reduce(w, e);
    std::size_t pivot = 0;
    while (pivot < dim_ && w[pivot] == 0) ++pivot;
    if (pivot == dim_) {
      if (relation != nullptr) *relation = std::move(e);
      return false;
    }
    const Rational inv = 1 / w[pivot];
    for (auto& x : w) x *= inv;
    rows_.push_back(std::move(w));
    exprs_.push_back(e.scaled(inv));
    pivots_.push_back(pivot);
    return true;
  }

  // Expresses w as a polynomial in M applied to the start vector, if possible.
  std::optional<UniPoly> express(Vec w) const {
    UniPoly e;
    reduce(w, e);
    for (const auto& x : w)
      if (x != 0) return std::nullopt;
    return -e;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  void reduce(Vec& w, UniPoly& e) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational a = w[pivots_[k]];
      if (a == 0) continue;
      for (std::size_t i = 0; i < dim_; ++i)
        if (rows_[k][i] != 0) w[i] -= a * rows_[k][i];
      e = e - exprs_[k].scaled(a);
    }
  }

  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<UniPoly> exprs_;
  std::vector<std::size_t> pivots_;
};

Vec unit_vector(std::size_t dim) {
  Vec e(dim);
  e[0] = 1;
  return e;
}

// Minimal polynomial of m acting on the vector 1 of the quotient, which is
// the minimal polynomial of m since 1 generates the algebra.
UniPoly minimal_polynomial(const QMatrix& m) {
  const std::size_t d = m.rows();
  KrylovEchelon ech(d);
  Vec v = unit_vector(d);
  UniPoly relation;
  for (std::size_t k = 0;; ++k) {
    if (!ech.add(v, UniPoly::monomial(1, k), &relation)) break;
    v = m.apply(v);
  }
  return relation.monic();
}

MultiPoly univariate_in(const UniPoly& f, std::size_t nvars, std::size_t var) {
  MultiPoly out(nvars);
  const MultiPoly x = MultiPoly::variable(nvars, var);
  for (std::size_t i = f.coefficients().size(); i-- > 0;)
    out = out * x + MultiPoly::constant(nvars, f.coefficients()[i]);
  return out;
}

struct Radical {
  std::size_t nvars = 0;
  bool lifted = false;  // Rabinowitsch variable appended
  bool empty = false;
  Quotient quotient;
};

// Radical of the (possibly Rabinowitsch-lifted) ideal and its quotient.
Radical radical_quotient(const std::vector<MultiPoly>& equations, const MultiPoly& inequation, std::size_t n) {
  Radical out;
  std::vector<MultiPoly> gens = equations;
  std::size_t nvars = n;
  auto gb = std::make_unique<GroebnerBasis>(gens, nvars);
  if (gb->is_unit()) {
    out.empty = true;
    return out;
  }
  auto basis = gb->standard_monomials();
  if (!basis) {
    if (inequation.is_constant()) throw NotZeroDimensional("the equations define a positive-dimensional set");
    if (n + 1 > kMaxVariables) throw InvalidInput("too many variables for localization");
    nvars = n + 1;
    gens.clear();
    for (const auto& f : equations) gens.push_back(f.extended(nvars));
    gens.push_back(MultiPoly::variable(nvars, n) * inequation.extended(nvars) - MultiPoly::constant(nvars, 1));
    gb = std::make_unique<GroebnerBasis>(gens, nvars);
    if (gb->is_unit()) {
      out.empty = true;
      return out;
    }
    basis = gb->standard_monomials();
    if (!basis) throw NotZeroDimensional("the localized set is positive-dimensional");
    out.lifted = true;
  }
  Quotient quot = build_quotient(*gb, *basis);
  bool changed = false;
  for (std::size_t v = 0; v < nvars; ++v) {
    const UniPoly mp = minimal_polynomial(quot.mult[v]);
    const UniPoly sq = square_free_part(mp);
    if (sq.degree() < mp.degree()) {
      gens.push_back(univariate_in(sq, nvars, v));
      changed = true;
    }
  }
  if (changed) {
    gb = std::make_unique<GroebnerBasis>(gens, nvars);
    basis = gb->standard_monomials();
    if (!basis) throw std::logic_error("radical of a zero-dimensional ideal is not zero-dimensional");
    quot = build_quotient(*gb, *basis);
  }
  out.nvars = nvars;
  out.quotient = std::move(quot);
  return out;
}

RUR empty_rur(std::size_t n) {
  RUR r;
  r.primitive_form.assign(n, Rational(0));
  if (n > 0) r.primitive_form[0] = 1;
  r.q = UniPoly::constant(1);
  r.numerators.assign(n, UniPoly{});
  r.coordinates.assign(n, UniPoly{});
  return r;
}

// One attempt with a fresh primitive form; throws GenericityFailure when it does not separate.
RUR rur_attempt(const Radical& rad, std::size_t n, const MultiPoly& inequation, Rng& rng) {
  const Quotient& quot = rad.quotient;
  const std::size_t d = quot.dim();
  std::vector<Rational> lambda(n);
  for (auto& l : lambda) l = rng.coefficient();
  QMatrix m(d, d);
  for (std::size_t v = 0; v < n; ++v) {
    if (lambda[v] == 0) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (quot.mult[v](i, j) != 0) m(i, j) += lambda[v] * quot.mult[v](i, j);
  }
  KrylovEchelon ech(d);
  Vec v = unit_vector(d);
  UniPoly relation;
  for (std::size_t k = 0;; ++k) {
    if (!ech.add(v, UniPoly::monomial(1, k), &relation)) break;
    v = m.apply(v);
  }
  if (ech.size() != d) throw GenericityFailure("primitive form does not separate the solutions");
  RUR r;
  r.primitive_form = lambda;
  r.q = relation.monic();
  const Vec one = unit_vector(d);
  for (std::size_t i = 0; i < n; ++i) {
    auto h = ech.express(quot.mult[i].apply(one));
    if (!h) throw std::logic_error("Krylov basis does not span the quotient");
    r.coordinates.push_back(*h % r.q);
  }
  if (!rad.lifted && !inequation.is_constant()) {
    const UniPoly qh = substitute(inequation, r);
    const UniPoly g = gcd(r.q, qh);
    if (g.degree() > 0) {
      r.q = exact_div(r.q, g).monic();
      for (auto& h : r.coordinates) h = h % r.q;
    }
  }
  if (r.q.degree() <= 0) return empty_rur(n);
  const UniPoly dq = r.q.derivative();
  for (const auto& h : r.coordinates) r.numerators.push_back((h * dq) % r.q);
  return r;
}

}  // namespace

UniPoly substitute(const MultiPoly& p, const RUR& rur) {
  struct Ops {
    const UniPoly& q;
    UniPoly zero() const { return {}; }
    UniPoly one() const { return UniPoly::constant(1); }
    UniPoly from_rational(const Rational& r) const { return UniPoly::constant(r); }
    UniPoly add(const UniPoly& a, const UniPoly& b) const { return a + b; }
    UniPoly mul(const UniPoly& a, const UniPoly& b) const { return (a * b) % q; }
  };
  if (p.num_variables() > rur.num_variables()) throw std::invalid_argument("polynomial has more variables than the point");
  std::vector<UniPoly> images(rur.coordinates.begin(), rur.coordinates.begin() + static_cast<std::ptrdiff_t>(p.num_variables()));
  const Ops ops{rur.q};
  return evaluate_with<UniPoly>(p, std::span<const UniPoly>(images), ops) % rur.q;
}

std::shared_ptr<const RUR> solve_rur(const SolveRequest& request) {
  const std::size_t n = request.num_variables();
  for (const auto& f : request.equations)
    if (f.num_variables() != n) throw std::invalid_argument("equations over different variable sets");
  const MultiPoly q = request.effective_inequation();
  if (q.is_zero()) return std::make_shared<const RUR>(empty_rur(n));
  const Radical rad = radical_quotient(request.equations, q, n);
  if (rad.empty || rad.quotient.dim() == 0) return std::make_shared<const RUR>(empty_rur(n));
  const std::size_t budget = std::max<std::size_t>(request.retries, 1);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Rng rng(derive_seed(request.seed, attempt));
    try {
      RUR r = rur_attempt(rad, n, q, rng);
      if (verify_rur(r, request)) return std::make_shared<const RUR>(std::move(r));
    } catch (const GenericityFailure&) {
    }
  }
  throw GenericityFailure("no separating primitive form within the retry budget");
}

SolveResult solve_zero_dim(const SolveRequest& request) {
  SolveResult out;
  out.rur = solve_rur(request);
  if (out.rur->degree() == 0) return out;
  for (auto& root : isolate_real_roots(out.rur->q)) out.real_points.push_back({out.rur, std::move(root)});
  return out;
}

bool verify_rur(const RUR& rur, const SolveRequest& request) {
  const std::size_t n = request.num_variables();
  if (rur.num_variables() != n || rur.primitive_form.size() != n) return false;
  if (rur.q.degree() <= 0) return true;
  for (const auto& v : rur.numerators)
    if (v.degree() >= rur.q.degree()) return false;
  const UniPoly dq = rur.q.derivative();
  if (gcd(rur.q, dq).degree() != 0) return false;
  UniPoly inv;
  try {
    inv = inverse_mod(dq, rur.q);
  } catch (const std::domain_error&) {
    return false;
  }
  RUR check = rur;
  check.coordinates.clear();
  for (const auto& v : rur.numerators) check.coordinates.push_back((v * inv) % rur.q);
  for (const auto& f : request.equations)
    if (!substitute(f, check).is_zero()) return false;
  const UniPoly qh = substitute(request.effective_inequation(), check);
  if (gcd(rur.q, qh).degree() != 0) return false;
  UniPoly t;
  for (std::size_t i = 0; i < n; ++i) t = t + check.coordinates[i].scaled(rur.primitive_form[i]);
  return (t % rur.q) == (UniPoly({0, 1}) % rur.q);
}

namespace {

enum class SectionState { Empty, Finite, Infinite };

SectionState classify(const std::vector<MultiPoly>& equations, const MultiPoly& inequation, std::size_t n) {
  if (n == 0) {
    for (const auto& f : equations)
      if (!f.is_zero()) return SectionState::Empty;
    return inequation.is_zero() ? SectionState::Empty : SectionState::Finite;
  }
  if (inequation.is_zero()) return SectionState::Empty;
  std::vector<MultiPoly> gens = equations;
  std::size_t nvars = n;
  if (!inequation.is_constant()) {
    if (n + 1 > kMaxVariables) throw InvalidInput("too many variables for localization");
    nvars = n + 1;
    gens.clear();
    for (const auto& f : equations) gens.push_back(f.extended(nvars));
    gens.push_back(MultiPoly::variable(nvars, n) * inequation.extended(nvars) - MultiPoly::constant(nvars, 1));
  }
  const GroebnerBasis gb(gens, nvars);
  if (gb.is_unit()) return SectionState::Empty;
  return gb.standard_monomials() ? SectionState::Finite : SectionState::Infinite;
}

// Restriction to the generic affine subspace x = b + A y of dimension m.
struct Slice {
  std::vector<MultiPoly> equations;
  MultiPoly inequation;
};

Slice random_slice(std::span<const MultiPoly> equations, const MultiPoly& inequation, std::size_t n,
                   std::size_t m, Rng& rng) {
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly img = MultiPoly::constant(m, rng.coefficient());
    for (std::size_t k = 0; k < m; ++k) img += MultiPoly::variable(m, k).scaled(rng.coefficient());
    images.push_back(std::move(img));
  }
  Slice s;
  for (const auto& f : equations) s.equations.push_back(f.compose(images));
  s.inequation = inequation.compose(images);
  return s;
}

MultiPoly normalized_inequation(std::span<const MultiPoly> equations, const MultiPoly& inequation) {
  const std::size_t n = equations.front().num_variables();
  if (inequation.num_variables() == 0) {
    return MultiPoly::constant(n, inequation.is_zero() ? Rational(1) : inequation.constant_term());
  }
  return inequation;
}

}  // namespace

int dimension_of(std::span<const MultiPoly> equations, const MultiPoly& inequation, std::uint64_t seed,
                 std::size_t retries) {
  if (equations.empty()) throw std::invalid_argument("dimension_of without equations");
  const std::size_t n = equations.front().num_variables();
  const MultiPoly q = normalized_inequation(equations, inequation);
  const std::size_t budget = std::max<std::size_t>(retries, 1);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Rng rng(derive_seed(seed, 0x100 + attempt));
    bool failed = false;
    for (std::size_t m = 0; m <= n && !failed; ++m) {
      const Slice s = random_slice(equations, q, n, m, rng);
      switch (classify(s.equations, s.inequation, m)) {
        case SectionState::Empty:
          break;
        case SectionState::Finite:
          return static_cast<int>(n - m);
        case SectionState::Infinite:
          failed = true;
          break;
      }
    }
    if (!failed) return -1;
  }
  throw GenericityFailure("hyperplane sections were never finite");
}

std::size_t degree_of_closure(std::span<const MultiPoly> equations, const MultiPoly& inequation,
                              std::uint64_t seed, std::size_t retries) {
  const int dim = dimension_of(equations, inequation, seed, retries);
  if (dim < 0) return 0;
  const std::size_t n = equations.front().num_variables();
  if (static_cast<std::size_t>(dim) == n) return 1;
  const MultiPoly q = normalized_inequation(equations, inequation);
  const std::size_t m = n - static_cast<std::size_t>(dim);
  std::vector<std::size_t> seen;
  const std::size_t budget = std::max<std::size_t>(retries, 2) + 1;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Rng rng(derive_seed(seed, 0x200 + attempt));
    const Slice s = random_slice(equations, q, n, m, rng);
    std::size_t count;
    try {
      SolveRequest req{s.equations, s.inequation, derive_seed(seed, 0x300 + attempt), retries};
      if (req.equations.empty()) continue;
      count = solve_rur(req)->degree();
    } catch (const NotZeroDimensional&) {
      continue;
    } catch (const GenericityFailure&) {
      continue;
    }
    if (std::find(seen.begin(), seen.end(), count) != seen.end()) return count;
    seen.push_back(count);
  }
  throw GenericityFailure("independent hyperplane sections never agreed on a degree");
}

std::uint64_t bezout_bound(std::span<const MultiPoly> equations) {
  std::uint64_t out = 1;
  for (const auto& f : equations)
    if (f.total_degree() > 0) out *= static_cast<std::uint64_t>(f.total_degree());
  return out;
}

namespace {

RealAlgebraic affine_image(const RealAlgebraic& t, const Rational& a, const Rational& b) {
  if (b == 0) return RealAlgebraic(a);
  if (t.is_rational()) return RealAlgebraic(a + b * t.rational_value());
  const UniPoly def = t.defining().compose(UniPoly({-a / b, 1 / b})).monic();
  Rational lo = a + b * t.lo();
  Rational hi = a + b * t.hi();
  if (lo > hi) std::swap(lo, hi);
  return RealAlgebraic(def, lo, hi);
}

bool overlaps(const RealAlgebraic& c, const Interval& iv) { return c.lo() <= iv.hi && c.hi() >= iv.lo; }

RealAlgebraic image_at_root(const UniPoly& g_in, const RealAlgebraic& root) {
  if (root.is_rational()) return RealAlgebraic(g_in.evaluate(root.rational_value()));
  const UniPoly& m = root.defining();
  const UniPoly g = g_in % m;
  if (g.degree() <= 0) return RealAlgebraic(g.coefficient(0));
  if (g.degree() == 1) return affine_image(root, g.coefficient(0), g.coefficient(1));
  // Characteristic polynomial of multiplication by g in Q[T]/(m).
  const std::size_t d = static_cast<std::size_t>(m.degree());
  QMatrix mat(d, d);
  UniPoly col = g;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) mat(i, j) = col.coefficient(i);
    col = (col * UniPoly({0, 1})) % m;
  }
  std::vector<RealAlgebraic> candidates = isolate_real_roots(characteristic_polynomial(mat));
  RealAlgebraic t = root;
  for (;;) {
    const Interval iv = evaluate(g, t.interval());
    std::vector<std::size_t> hits;
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (overlaps(candidates[k], iv)) hits.push_back(k);
    if (hits.size() == 1) return candidates[hits[0]];
    if (hits.empty()) throw std::logic_error("value of a polynomial at a root not among the candidates");
    t = t.bisected();
    if (t.is_rational()) return RealAlgebraic(g.evaluate(t.rational_value()));
    for (std::size_t k : hits) candidates[k] = candidates[k].bisected();
  }
}

}  // namespace

int sign_of(const MultiPoly& p, const AlgebraicPoint& x) { return sign_at(substitute(p, *x.rur), x.root); }

RealAlgebraic evaluate_at_root(const UniPoly& g, const RealAlgebraic& root) {
  return simplified(image_at_root(g, root));
}

RealAlgebraic value_of(const MultiPoly& p, const AlgebraicPoint& x) {
  return evaluate_at_root(substitute(p, *x.rur), x.root);
}

RealAlgebraic coordinate(const AlgebraicPoint& x, std::size_t index) {
  return evaluate_at_root(x.rur->coordinates.at(index), x.root);
}

std::vector<RealAlgebraic> coordinates(const AlgebraicPoint& x, std::size_t count) {
  std::vector<RealAlgebraic> out;
  const std::size_t n = std::min(count, x.num_variables());
  for (std::size_t i = 0; i < n; ++i) out.push_back(coordinate(x, i));
  return out;
}

bool same_point(const AlgebraicPoint& a, const AlgebraicPoint& b, std::size_t count) {
  const std::size_t n = std::min({count, a.num_variables(), b.num_variables()});
  if (a.rur == b.rur && a.root == b.root) return true;
  for (std::size_t i = 0; i < n; ++i) {
    // Cheap separation by interval hulls before exact comparison.
    const Interval ia = evaluate(a.rur->coordinates[i], a.root.interval());
    const Interval ib = evaluate(b.rur->coordinates[i], b.root.interval());
    if (ia.hi < ib.lo || ib.hi < ia.lo) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (coordinate(a, i) != coordinate(b, i)) return false;
  return true;
}

AlgebraicPoint rational_point(std::span<const Rational> coords) {
  const std::size_t n = coords.size();
  if (n == 0) throw std::invalid_argument("point without coordinates");
  RUR r;
  r.primitive_form.assign(n, Rational(0));
  r.primitive_form[0] = 1;
  r.q = UniPoly::linear_root(coords[0]);
  for (const auto& c : coords) {
    r.coordinates.push_back(UniPoly::constant(c));
    r.numerators.push_back(UniPoly::constant(c));
  }
  return {std::make_shared<const RUR>(std::move(r)), RealAlgebraic(coords[0])};
}

AlgebraicPoint translated(const AlgebraicPoint& x, const Rational& r, std::span<const Rational> mu) {
  const RUR& src = *x.rur;
  const std::size_t n = src.num_variables();
  if (mu.size() > n) throw std::invalid_argument("direction has too many entries");
  Rational c0 = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) c0 += r * src.primitive_form[i] * mu[i];
  RUR out;
  out.primitive_form = src.primitive_form;
  out.q = src.q.taylor_shift(-c0);
  const UniPoly dq = out.q.derivative();
  for (std::size_t i = 0; i < n; ++i) {
    UniPoly h = src.coordinates[i].taylor_shift(-c0);
    if (i < mu.size()) h = h + UniPoly::constant(r * mu[i]);
    out.numerators.push_back((h * dq) % out.q);
    out.coordinates.push_back(std::move(h));
  }
  RealAlgebraic root = x.root.is_rational()
                           ? RealAlgebraic(x.root.rational_value() + c0)
                           : RealAlgebraic(x.root.defining().taylor_shift(-c0), x.root.lo() + c0, x.root.hi() + c0);
  return {std::make_shared<const RUR>(std::move(out)), std::move(root)};
}

}  // namespace polyopt
