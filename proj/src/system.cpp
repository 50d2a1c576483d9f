#include "polyopt/system.hpp"

#include "polyopt/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace polyopt {

std::size_t ExprDag::constant(const Rational& value) {
  nodes_.push_back({Kind::Constant, value});
  return nodes_.size() - 1;
}

std::size_t ExprDag::variable(std::size_t index) {
  Node n{Kind::Variable, 0};
  n.index = index;
  nodes_.push_back(n);
  return nodes_.size() - 1;
}

std::size_t ExprDag::binary(Kind kind, std::size_t lhs, std::size_t rhs) {
  Node n{kind, 0};
  n.lhs = lhs;
  n.rhs = rhs;
  nodes_.push_back(n);
  return nodes_.size() - 1;
}

std::size_t ExprDag::negate(std::size_t operand) {
  Node n{Kind::Neg, 0};
  n.lhs = operand;
  nodes_.push_back(n);
  return nodes_.size() - 1;
}

std::size_t ExprDag::power(std::size_t base, std::uint32_t exponent) {
  Node n{Kind::Pow, 0};
  n.lhs = base;
  n.exponent = exponent;
  nodes_.push_back(n);
  return nodes_.size() - 1;
}

MultiPoly ExprDag::expand(std::size_t root, std::size_t num_variables) const {
  // Children always precede parents, so a forward sweep suffices.
  std::vector<MultiPoly> value(root + 1);
  for (std::size_t id = 0; id <= root; ++id) {
    const Node& n = nodes_[id];
    switch (n.kind) {
      case Kind::Constant: value[id] = MultiPoly::constant(num_variables, n.value); break;
      case Kind::Variable: value[id] = MultiPoly::variable(num_variables, n.index); break;
      case Kind::Add: value[id] = value[n.lhs] + value[n.rhs]; break;
      case Kind::Sub: value[id] = value[n.lhs] - value[n.rhs]; break;
      case Kind::Mul: value[id] = value[n.lhs] * value[n.rhs]; break;
      case Kind::Neg: value[id] = -value[n.lhs]; break;
      case Kind::Pow: value[id] = value[n.lhs].pow(n.exponent); break;
    }
  }
  return value[root];
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t line, std::size_t column_offset,
             std::span<const std::string> variables, ExprDag& dag)
      : text_(text), line_(line), offset_(column_offset), variables_(variables), dag_(dag) {}

  std::size_t parse() {
    const std::size_t root = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, offset_ + pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t parse_sum() {
    std::size_t lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = dag_.binary(ExprDag::Kind::Add, lhs, parse_product());
      } else if (accept('-')) {
        lhs = dag_.binary(ExprDag::Kind::Sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  std::size_t parse_product() {
    std::size_t lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = dag_.binary(ExprDag::Kind::Mul, lhs, parse_unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const std::size_t rhs = parse_unary();
        const MultiPoly divisor = dag_.expand(rhs, variables_.size());
        if (!divisor.is_constant() || divisor.is_zero()) {
          pos_ = at;
          fail("division only by nonzero rational constants");
        }
        const std::size_t inverse = dag_.constant(1 / divisor.constant_term());
        lhs = dag_.binary(ExprDag::Kind::Mul, lhs, inverse);
      } else {
        return lhs;
      }
    }
  }

  std::size_t parse_unary() {
    if (accept('-')) return dag_.negate(parse_unary());
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  std::size_t parse_power() {
    const std::size_t base = parse_atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a nonnegative integer literal");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 4) fail("exponent too large");
    return dag_.power(base, static_cast<std::uint32_t>(std::stoul(digits)));
  }

  std::size_t parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      const std::size_t inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
        pos_ = start;
        fail("non-rational constant");
      }
      return dag_.constant(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name) return dag_.variable(i);
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    if (c == '.') fail("non-rational constant");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::span<const std::string> variables_;
  ExprDag& dag_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ParsedSystem parse_system(std::string_view text) {
  ParsedSystem sys;
  bool have_vars = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected a directive 'vars:', 'minimize:', 'eq:' or 'poly:'", line_no, 1);
    const std::string_view directive = trim(line.substr(0, colon));
    const std::string_view body = line.substr(colon + 1);
    const std::size_t body_col = colon + 1;

    if (directive == "vars") {
      if (have_vars) throw ParseError("duplicate 'vars:' line", line_no, 1);
      std::size_t pos = 0;
      while (pos < body.size()) {
        while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
        if (pos >= body.size()) break;
        const std::size_t start = pos;
        while (pos < body.size() && !std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
        std::string name(body.substr(start, pos - start));
        bool valid = std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_';
        for (char ch : name) valid = valid && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
        if (!valid) throw ParseError("invalid variable name '" + name + "'", line_no, body_col + start + 1);
        for (const auto& v : sys.variables)
          if (v == name) throw ParseError("duplicate variable '" + name + "'", line_no, body_col + start + 1);
        sys.variables.push_back(std::move(name));
      }
      if (sys.variables.empty()) throw ParseError("'vars:' needs at least one name", line_no, body_col + 1);
      if (sys.variables.size() > kMaxVariables)
        throw ParseError("too many variables", line_no, body_col + 1);
      have_vars = true;
      continue;
    }

    Role role;
    if (directive == "minimize") {
      role = Role::Objective;
    } else if (directive == "eq") {
      role = Role::Equation;
    } else if (directive == "poly") {
      role = Role::SignPolynomial;
    } else {
      throw ParseError("unknown directive '" + std::string(directive) + "'", line_no, 1);
    }
    if (!have_vars) throw ParseError("'vars:' must precede expressions", line_no, 1);

    ExprParser parser(body, line_no, body_col, sys.variables, sys.circuit);
    const std::size_t root = parser.parse();
    MultiPoly poly = sys.circuit.expand(root, sys.variables.size());
    sys.outputs.emplace_back(role, root);
    switch (role) {
      case Role::Objective:
        if (sys.objective) throw ParseError("more than one 'minimize:' line", line_no, 1);
        sys.objective = std::move(poly);
        break;
      case Role::Equation: sys.equations.push_back(std::move(poly)); break;
      case Role::SignPolynomial: sys.sign_polynomials.push_back(std::move(poly)); break;
    }
    const bool optimize_mode = sys.objective.has_value() || !sys.equations.empty();
    if (optimize_mode && !sys.sign_polynomials.empty())
      throw ParseError("'poly:' lines cannot be mixed with 'minimize:'/'eq:' lines", line_no, 1);
  }
  if (!have_vars) throw ParseError("missing 'vars:' line", line_no == 0 ? 1 : line_no, 1);
  return sys;
}

MultiPoly parse_polynomial(std::string_view expr, std::span<const std::string> variables) {
  ExprDag dag;
  ExprParser parser(expr, 1, 0, variables, dag);
  const std::size_t root = parser.parse();
  return dag.expand(root, variables.size());
}

std::string print_system(const ParsedSystem& system) {
  std::string out = "vars:";
  for (const auto& v : system.variables) out += " " + v;
  out += "\n";
  if (system.objective) out += "minimize: " + system.objective->to_string(system.variables) + "\n";
  for (const auto& f : system.equations) out += "eq: " + f.to_string(system.variables) + "\n";
  for (const auto& f : system.sign_polynomials) out += "poly: " + f.to_string(system.variables) + "\n";
  return out;
}

}  // namespace polyopt
