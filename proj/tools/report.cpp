#include "report.hpp"

namespace report {

ordered_json rational(const polyopt::Rational& r) { return polyopt::to_string(r); }

ordered_json poly(const polyopt::UniPoly& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p.coefficients()) out.push_back(rational(c));
  return out;
}

ordered_json real_algebraic(const polyopt::RealAlgebraic& a, int digits) {
  ordered_json out;
  out["poly"] = poly(a.defining());
  out["interval"] = ordered_json::array({rational(a.lo()), rational(a.hi())});
  out["approx"] = a.approx(digits);
  return out;
}

ordered_json rur(const polyopt::RUR& r) {
  ordered_json out;
  ordered_json form = ordered_json::array();
  for (const auto& c : r.primitive_form) form.push_back(rational(c));
  out["primitive_form"] = form;
  out["q"] = poly(r.q);
  ordered_json nums = ordered_json::array();
  for (const auto& v : r.numerators) nums.push_back(poly(v));
  out["numerators"] = nums;
  return out;
}

ordered_json point(const polyopt::AlgebraicPoint& x, std::size_t count, int digits) {
  ordered_json out;
  ordered_json approx = ordered_json::array();
  ordered_json coords = ordered_json::array();
  for (const auto& c : polyopt::coordinates(x, count)) {
    approx.push_back(c.approx(digits));
    coords.push_back(real_algebraic(c, digits));
  }
  out["approx"] = approx;
  out["coordinates"] = coords;
  out["root"] = real_algebraic(x.root, digits);
  out["rur"] = rur(*x.rur);
  return out;
}

ordered_json sample_report(const polyopt::SampleReport& r, std::size_t n, int digits) {
  ordered_json out;
  out["condition"] = r.condition.epsilons;
  ordered_json active = ordered_json::array();
  for (auto j : r.active) active.push_back(j + 1);
  out["active"] = active;
  out["witness"] = point(r.witness, n, digits);
  return out;
}

ordered_json critical_point(const polyopt::CriticalPoint& c, std::size_t n, int digits) {
  ordered_json out;
  out["classification"] =
      c.classification == polyopt::Classification::IsolatedLocalMin ? "IsolatedLocalMin" : "Rejected";
  ordered_json chart = ordered_json::array();
  for (auto j : c.chart) chart.push_back(j + 1);
  out["chart"] = chart;
  out["value"] = real_algebraic(c.value, digits);
  out["point"] = point(c.point, n, digits);
  return out;
}

ordered_json global_minimum(const polyopt::GlobalMinimum& g, std::size_t n, int digits) {
  ordered_json out;
  out["value"] = real_algebraic(g.value, digits);
  ordered_json pts = ordered_json::array();
  for (const auto& x : g.minimizers) pts.push_back(point(x, n, digits));
  out["minimizers"] = pts;
  ordered_json sizes = ordered_json::array();
  for (const auto& level : g.levels) sizes.push_back(level.size());
  out["candidates_per_level"] = sizes;
  return out;
}

ordered_json degree(const polyopt::DegreeReport& d) {
  ordered_json out;
  out["delta"] = d.delta;
  out["bezout_bound"] = d.bezout_bound;
  return out;
}

ordered_json diagnostic(const char* kind, const std::string& message) {
  ordered_json out;
  out["kind"] = kind;
  out["message"] = message;
  return out;
}

}  // namespace report
