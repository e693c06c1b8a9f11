#include "detgb/monomial.hpp"

#include <string>

#include "detgb/errors.hpp"

namespace detgb {

namespace {

Monomial::Exponent checked_exponent(unsigned value) {
  if (value > Monomial::kMaxExponent) {
    throw DomainError("exponent " + std::to_string(value) + " exceeds the supported maximum");
  }
  return static_cast<Monomial::Exponent>(value);
}

}  // namespace

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t index, unsigned power) {
  if (index >= kMaxVars) throw DomainError("variable index out of range");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[index] + power);
  exps_[index] = checked_exponent(power);
}

std::size_t Monomial::support_end() const {
  for (std::size_t i = kMaxVars; i > 0; --i) {
    if (exps_[i - 1] != 0) return i;
  }
  return 0;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (divisor.exps_[i] > exps_[i]) throw InvariantError("monomial division is not exact");
    out.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
  }
  out.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    out.exps_[i] = checked_exponent(static_cast<unsigned>(a.exps_[i]) + b.exps_[i]);
  }
  out.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  unsigned deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    deg += out.exps_[i];
  }
  out.degree_ = static_cast<std::uint16_t>(deg);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  unsigned deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    deg += out.exps_[i];
  }
  out.degree_ = static_cast<std::uint16_t>(deg);
  return out;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace detgb
