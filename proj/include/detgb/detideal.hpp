#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "detgb/polynomial.hpp"
#include "detgb/ring.hpp"

namespace detgb {

/// Strictly increasing sequence of 1-based row indices (an element of C_k).
class RowTuple {
 public:
  RowTuple() = default;
  explicit RowTuple(std::vector<int> rows);

  /// Parses "(1,3,4,5)".
  static RowTuple parse(std::string_view text);

  std::size_t size() const { return rows_.size(); }
  int operator[](std::size_t i) const { return rows_[i]; }
  const std::vector<int>& rows() const { return rows_; }
  auto begin() const { return rows_.begin(); }
  auto end() const { return rows_.end(); }

  /// The tuple with the r-th entry (1-based) removed.
  RowTuple without(std::size_t r) const;

  std::string to_string() const;

  friend auto operator<=>(const RowTuple&, const RowTuple&) = default;
  friend bool operator==(const RowTuple&, const RowTuple&) = default;

 private:
  std::vector<int> rows_;
};

/// All k-subsets of {1..n} in lexicographic order.
std::vector<RowTuple> tuples(int n, int k);

/// Position (0-based) of a tuple in the lex enumeration of C_k over {1..n}.
std::size_t tuple_position(const RowTuple& a, int n);

/// The matrix entry (i, j) as a polynomial of the ring.
Polynomial entry(const RingPtr& ring, int i, int j);

/// g_1 .. g_rows with g_i = sum_j entry(i, j) y_j.
std::vector<Polynomial> generators(const RingPtr& ring);

/// Determinant of the submatrix on `rows` x `cols`. Columns may repeat or be
/// unordered (the sign follows the column permutation).
Polynomial minor(const RingPtr& ring, const std::vector<int>& rows, const std::vector<int>& cols);

/// X^{a,m} = [a_1..a_k | 1..k-1, m]; requires m >= k.
Polynomial x_am(const RingPtr& ring, const RowTuple& a, int m);

/// X^a = [a | 1..k].
Polynomial leading_minor(const RingPtr& ring, const RowTuple& a);

/// Twisted minor sum_{m >= k} X^{a,m} y_m.
Polynomial tilde(const RingPtr& ring, const RowTuple& a);

/// det of the top n x n block.
Polynomial determinant(const RingPtr& ring);

/// A_ji = (-1)^(i+j) [rows != j | cols != i] in the top n x n block.
Polynomial cofactor(const RingPtr& ring, int j, int i);

struct FamilyMember {
  RowTuple rows;
  Polynomial poly;
};

/// S_k = {X^a : a in C_k}, lex order of a (the position is sigma(X^a) - 1).
std::vector<FamilyMember> family_S(const RingPtr& ring, int k);
/// S~_k = {X~^a : a in C_k}.
std::vector<FamilyMember> family_S_tilde(const RingPtr& ring, int k);
/// G_k = S~_k, S~_{k+1}, ..., S~_n concatenated.
std::vector<FamilyMember> family_G(const RingPtr& ring, int k);

std::vector<Polynomial> polys(const std::vector<FamilyMember>& family);

/// Eagon-Northcott first syzygy phi(j, a) of S_k, k = |a| - 1: the vector
/// alpha of length |C_k| with alpha(sigma(X^a_r)) = (-1)^(r+1) x_{a_r, j}.
std::vector<Polynomial> syzygy_phi(const RingPtr& ring, int j, const RowTuple& a);

/// Coefficients of the generalized Laplace expansion of X^a (|a| = k') along
/// its first k columns: X^a = sum_b beta_b X^b over k-subsets b of a.
std::map<RowTuple, Polynomial> laplace_coeffs(const RingPtr& ring, const RowTuple& a, int k);

}  // namespace detgb
