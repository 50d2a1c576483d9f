#pragma once

#include "polyopt/multipoly.hpp"
#include "polyopt/polar.hpp"
#include "polyopt/zerodim.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace polyopt {

/// Prescribed signs (-1, 0, +1) of F_1..F_s.
struct SignCondition {
  std::vector<int> epsilons;

  bool is_strict() const;
  std::vector<std::size_t> zero_set() const;
  bool operator==(const SignCondition& other) const { return epsilons == other.epsilons; }
  bool operator<(const SignCondition& other) const { return epsilons < other.epsilons; }
};

struct SampleReport {
  SignCondition condition;
  /// May carry extra trailing coordinates (a localization variable); the
  /// first n coordinates are the sample point.
  AlgebraicPoint witness;
  std::vector<std::size_t> active;
};

struct SubsetVerdict {
  std::vector<std::size_t> subset;
  std::size_t points_checked = 0;
  bool regular = true;
};

/// Facts verified while sampling; never a claim about Condition A as a whole.
struct ConditionAProfile {
  std::size_t p = 0;
  std::vector<SubsetVerdict> verdicts;
};

struct SignOptions {
  std::uint64_t seed = 0;
  std::size_t retries = 5;
  /// Raise the subset size limit from p to n.
  bool relaxed_subsets = false;
  RegularityMode regularity = RegularityMode::Strict;
};

/// Every realized sign condition: one pass per nonempty subset of size at most p,
/// plus the strict conditions.
std::vector<SampleReport> consistent_nonstrict_conditions(std::span<const MultiPoly> fs, std::size_t p,
                                                          const SignOptions& options,
                                                          ConditionAProfile* profile = nullptr);

/// Moves x off the active constraints into the requested strict signs.
/// Throws NoDirection when no admissible direction is found in 200 draws.
AlgebraicPoint make_strict(const AlgebraicPoint& x, std::span<const std::size_t> active, std::span<const int> targets,
                           std::span<const MultiPoly> fs, std::uint64_t seed = 0);

/// Strict conditions, one witness each.
std::vector<SampleReport> consistent_strict_conditions(std::span<const MultiPoly> fs, std::size_t p,
                                                       const SignOptions& options);

/// Same as consistent_nonstrict_conditions.
std::vector<SampleReport> consistent_conditions(std::span<const MultiPoly> fs, std::size_t p,
                                                const SignOptions& options, ConditionAProfile* profile = nullptr);

struct DegreeReport {
  std::size_t delta = 0;
  std::uint64_t bezout_bound = 0;
};

DegreeReport sample_degree(std::span<const MultiPoly> fs, std::size_t p, const SignOptions& options);

}  // namespace polyopt
