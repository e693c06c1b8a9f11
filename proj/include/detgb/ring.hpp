#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace detgb {

/// The three matrix families: generic n x n, generic symmetric n x n and
/// generic (n+1) x n.
class MatrixShape {
 public:
  enum class Kind { Square, Symmetric, Wide };

  MatrixShape(Kind kind, int n);

  static MatrixShape square(int n) { return {Kind::Square, n}; }
  static MatrixShape symmetric(int n) { return {Kind::Symmetric, n}; }
  static MatrixShape wide(int n) { return {Kind::Wide, n}; }

  /// Parses "square:3", "symmetric:2", "wide:4".
  static MatrixShape parse(std::string_view text);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int rows() const { return kind_ == Kind::Wide ? n_ + 1 : n_; }
  int cols() const { return n_; }

  std::string kind_name() const;
  std::string to_string() const;

  friend bool operator==(const MatrixShape&, const MatrixShape&) = default;

 private:
  Kind kind_;
  int n_;
};

/// Parses the kind part alone ("square", "symmetric", "wide").
MatrixShape::Kind parse_shape_kind(std::string_view text);

struct Variable {
  enum class Kind { X, Y, T };
  Kind kind = Kind::X;
  int row = 0;  // X only
  int col = 0;  // X and Y

  static Variable x(int i, int j) { return {Kind::X, i, j}; }
  static Variable y(int j) { return {Kind::Y, 0, j}; }
  static Variable t() { return {Kind::T, 0, 0}; }

  std::string name() const;

  friend bool operator==(const Variable&, const Variable&) = default;
};

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// The polynomial ring K[x_ij, y_j] (optionally with an extra elimination
/// variable t) attached to a matrix shape.
///
/// Variables are laid out as: x-entries row-major (only i <= j for the
/// symmetric shape), then y_1..y_n, then t when present. The layout is fixed
/// for the lifetime of the context.
class RingContext {
 public:
  static RingPtr make(MatrixShape shape, bool with_elim_var = false);

  const MatrixShape& shape() const { return shape_; }
  std::span<const Variable> variables() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  bool has_elim_var() const { return has_t_; }

  /// Index of a variable; symmetric entries are folded to i <= j.
  std::optional<std::size_t> index_of(const Variable& v) const;

  /// Index of the matrix entry (i, j), 1-based; throws DomainError if out of range.
  std::size_t x(int i, int j) const;
  std::size_t y(int j) const;
  std::size_t t() const;

  std::size_t num_x_vars() const { return num_x_; }

  const std::string& variable_name(std::size_t index) const { return names_.at(index); }

  /// Same shape and same elimination-variable flag.
  bool same_ring(const RingContext& other) const {
    return shape_ == other.shape_ && has_t_ == other.has_t_;
  }

  RingPtr with_elim_var() const { return make(shape_, true); }
  RingPtr without_elim_var() const { return make(shape_, false); }

 private:
  RingContext(MatrixShape shape, bool with_elim_var);

  MatrixShape shape_;
  bool has_t_;
  std::size_t num_x_ = 0;
  std::vector<Variable> vars_;
  std::vector<std::string> names_;
  std::vector<std::size_t> x_index_;  // rows*cols, folded for symmetric
};

/// Throws ContextError unless both rings agree.
void require_same_ring(const RingContext& a, const RingContext& b, std::string_view op);

}  // namespace detgb
