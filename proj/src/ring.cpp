#include "detgb/ring.hpp"

#include <charconv>

#include "detgb/errors.hpp"
#include "detgb/monomial.hpp"

namespace detgb {

MatrixShape::MatrixShape(Kind kind, int n) : kind_(kind), n_(n) {
  if (n < 1) throw DomainError("matrix shape needs n >= 1, got " + std::to_string(n));
}

MatrixShape::Kind parse_shape_kind(std::string_view text) {
  if (text == "square") return MatrixShape::Kind::Square;
  if (text == "symmetric") return MatrixShape::Kind::Symmetric;
  if (text == "wide") return MatrixShape::Kind::Wide;
  throw ParseError("unknown shape kind '" + std::string(text) + "'");
}

MatrixShape MatrixShape::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("shape must look like 'square:3', got '" + std::string(text) + "'");
  }
  Kind kind = parse_shape_kind(text.substr(0, colon));
  auto digits = text.substr(colon + 1);
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw ParseError("bad size in shape '" + std::string(text) + "'");
  }
  if (n < 1) throw ParseError("shape size must be positive in '" + std::string(text) + "'");
  return {kind, n};
}

std::string MatrixShape::kind_name() const {
  switch (kind_) {
    case Kind::Square: return "square";
    case Kind::Symmetric: return "symmetric";
    case Kind::Wide: return "wide";
  }
  return "?";
}

std::string MatrixShape::to_string() const { return kind_name() + ":" + std::to_string(n_); }

std::string Variable::name() const {
  switch (kind) {
    case Kind::X: return "x[" + std::to_string(row) + "][" + std::to_string(col) + "]";
    case Kind::Y: return "y[" + std::to_string(col) + "]";
    case Kind::T: return "t";
  }
  return "?";
}

RingContext::RingContext(MatrixShape shape, bool with_elim_var) : shape_(shape), has_t_(with_elim_var) {
  const int rows = shape.rows();
  const int cols = shape.cols();
  const bool sym = shape.kind() == MatrixShape::Kind::Symmetric;
  x_index_.assign(static_cast<std::size_t>(rows * cols), 0);
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      if (sym && j < i) continue;
      x_index_[static_cast<std::size_t>((i - 1) * cols + (j - 1))] = vars_.size();
      vars_.push_back(Variable::x(i, j));
    }
  }
  if (sym) {
    for (int i = 1; i <= rows; ++i) {
      for (int j = 1; j < i; ++j) {
        x_index_[static_cast<std::size_t>((i - 1) * cols + (j - 1))] =
            x_index_[static_cast<std::size_t>((j - 1) * cols + (i - 1))];
      }
    }
  }
  num_x_ = vars_.size();
  for (int j = 1; j <= cols; ++j) vars_.push_back(Variable::y(j));
  if (has_t_) vars_.push_back(Variable::t());
  if (vars_.size() > kMaxVars) {
    throw DomainError("ring for " + shape.to_string() + " needs " + std::to_string(vars_.size()) +
                      " variables; at most " + std::to_string(kMaxVars) + " are supported");
  }
  names_.reserve(vars_.size());
  for (const auto& v : vars_) names_.push_back(v.name());
}

RingPtr RingContext::make(MatrixShape shape, bool with_elim_var) {
  return RingPtr(new RingContext(shape, with_elim_var));
}

std::optional<std::size_t> RingContext::index_of(const Variable& v) const {
  switch (v.kind) {
    case Variable::Kind::X:
      if (v.row < 1 || v.row > shape_.rows() || v.col < 1 || v.col > shape_.cols()) return std::nullopt;
      return x_index_[static_cast<std::size_t>((v.row - 1) * shape_.cols() + (v.col - 1))];
    case Variable::Kind::Y:
      if (v.col < 1 || v.col > shape_.cols()) return std::nullopt;
      return num_x_ + static_cast<std::size_t>(v.col - 1);
    case Variable::Kind::T:
      if (!has_t_) return std::nullopt;
      return vars_.size() - 1;
  }
  return std::nullopt;
}

std::size_t RingContext::x(int i, int j) const {
  auto idx = index_of(Variable::x(i, j));
  if (!idx) throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + shape_.to_string());
  return *idx;
}

std::size_t RingContext::y(int j) const {
  auto idx = index_of(Variable::y(j));
  if (!idx) throw DomainError("y[" + std::to_string(j) + "] outside " + shape_.to_string());
  return *idx;
}

std::size_t RingContext::t() const {
  if (!has_t_) throw DomainError("ring has no elimination variable");
  return vars_.size() - 1;
}

void require_same_ring(const RingContext& a, const RingContext& b, std::string_view op) {
  if (&a == &b || a.same_ring(b)) return;
  throw ContextError(std::string(op) + ": operands live in different rings (" + a.shape().to_string() +
                     (a.has_elim_var() ? "+t" : "") + " vs " + b.shape().to_string() +
                     (b.has_elim_var() ? "+t" : "") + ")");
}

}  // namespace detgb
