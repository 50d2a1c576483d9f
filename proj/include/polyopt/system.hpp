#pragma once

#include "polyopt/multipoly.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyopt {

/// Division-free expression DAG as read from an input file. Divisions by
/// rational constants are folded into literals while parsing.
class ExprDag {
 public:
  enum class Kind { Constant, Variable, Add, Sub, Mul, Neg, Pow };

  struct Node {
    Kind kind;
    Rational value;          // Constant
    std::size_t index = 0;   // Variable
    std::uint32_t exponent = 0;  // Pow
    std::size_t lhs = 0;
    std::size_t rhs = 0;
  };

  std::size_t constant(const Rational& value);
  std::size_t variable(std::size_t index);
  std::size_t binary(Kind kind, std::size_t lhs, std::size_t rhs);
  std::size_t negate(std::size_t operand);
  std::size_t power(std::size_t base, std::uint32_t exponent);

  const Node& node(std::size_t id) const { return nodes_[id]; }
  /// Circuit size L.
  std::size_t size() const { return nodes_.size(); }

  MultiPoly expand(std::size_t root, std::size_t num_variables) const;

 private:
  std::vector<Node> nodes_;
};

enum class Role { Objective, Equation, SignPolynomial };

struct ParsedSystem {
  std::vector<std::string> variables;
  std::optional<MultiPoly> objective;
  std::vector<MultiPoly> equations;
  std::vector<MultiPoly> sign_polynomials;
  ExprDag circuit;
  std::vector<std::pair<Role, std::size_t>> outputs;  // role tag and DAG root per directive

  std::size_t num_variables() const { return variables.size(); }
  std::size_t circuit_size() const { return circuit.size(); }
  bool poly_mode() const { return !sign_polynomials.empty(); }
};

/// Reads the line-oriented "vars:/minimize:/eq:/poly:" format.
/// Throws ParseError with 1-based line and column.
ParsedSystem parse_system(std::string_view text);

/// Parses a single expression over the given variable names.
MultiPoly parse_polynomial(std::string_view expr, std::span<const std::string> variables);

/// Canonical text form; parse_system(print_system(s)) reproduces every polynomial.
std::string print_system(const ParsedSystem& system);

}  // namespace polyopt
