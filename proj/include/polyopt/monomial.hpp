#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace polyopt {

inline constexpr std::size_t kMaxVariables = 12;

/// Exponent vector over at most kMaxVariables variables, total degree cached.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::uint32_t e);
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const {
    return degree_ == other.degree_ && exps_ == other.exps_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order: total degree first, then x1 > x2 > ... lexicographically.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Graded reverse lexicographic order, used internally by the Gröbner engine.
struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace polyopt
