#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace detgb {

/// Upper bound on ring size; wide:5 with an elimination variable needs 36.
inline constexpr std::size_t kMaxVars = 48;

/// A power product over the variables of a ring, stored densely by variable
/// index. Zero exponents are implicit; the all-zero vector is 1.
class Monomial {
 public:
  using Exponent = std::uint8_t;
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t index) const { return exps_[index]; }
  void set(std::size_t index, unsigned power);

  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// One past the highest variable index with a nonzero exponent.
  std::size_t support_end() const;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// Exact quotient; precondition: divisor divides *this.
  Monomial divided_by(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  /// Graded lexicographic order over variable indices (index 0 largest).
  /// This is the storage order of Polynomial, not a user-facing term order.
  friend std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    return a.exps_ <=> b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
};

}  // namespace detgb

template <>
struct std::hash<detgb::Monomial> {
  std::size_t operator()(const detgb::Monomial& m) const noexcept { return m.hash(); }
};
