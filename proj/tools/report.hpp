#pragma once

#include "polyopt/kkt.hpp"
#include "polyopt/real_algebraic.hpp"
#include "polyopt/semialg.hpp"
#include "polyopt/zerodim.hpp"

#include <json.hpp>

#include <cstddef>
#include <vector>

namespace report {

using nlohmann::ordered_json;

ordered_json rational(const polyopt::Rational& r);
ordered_json poly(const polyopt::UniPoly& p);
/// {"poly", "interval", "approx"}.
ordered_json real_algebraic(const polyopt::RealAlgebraic& a, int digits);
ordered_json rur(const polyopt::RUR& r);
/// The first `count` coordinates with their RUR.
ordered_json point(const polyopt::AlgebraicPoint& x, std::size_t count, int digits);

ordered_json sample_report(const polyopt::SampleReport& r, std::size_t n, int digits);
ordered_json critical_point(const polyopt::CriticalPoint& c, std::size_t n, int digits);
ordered_json global_minimum(const polyopt::GlobalMinimum& g, std::size_t n, int digits);
ordered_json degree(const polyopt::DegreeReport& d);
ordered_json diagnostic(const char* kind, const std::string& message);

}  // namespace report
