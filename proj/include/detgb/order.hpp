#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "detgb/monomial.hpp"
#include "detgb/ring.hpp"

namespace detgb {

/// A monomial order given by a ranking of the ring's variables.
///
/// OrderA and OrderB are lexicographic for their ranking. A block order puts a
/// set of elimination variables first: monomials are compared by total degree
/// in those variables, then lexicographically along the ranking (elimination
/// variables, then the inner order's ranking of the rest).
class MonomialOrder {
 public:
  enum class Kind { OrderA, OrderB, Block };

  /// x_11 > x_22 > ... > x_nn > y_1 > ... > y_n > off-diagonal x (row-major) > t.
  static MonomialOrder order_a(const RingPtr& ring);
  /// y_1 > ... > y_n > x-variables row-major > t.
  static MonomialOrder order_b(const RingPtr& ring);
  static MonomialOrder block(std::vector<std::size_t> elim_vars, const MonomialOrder& inner);

  /// Parses "A" or "B".
  static MonomialOrder by_name(std::string_view name, const RingPtr& ring);

  Kind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }
  /// Variable indices, highest rank first.
  std::span<const std::size_t> ranking() const { return rank_; }
  std::size_t num_elim_vars() const { return num_elim_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (num_elim_ != 0) {
      unsigned da = 0, db = 0;
      for (std::size_t i = 0; i < num_elim_; ++i) {
        da += a[rank_[i]];
        db += b[rank_[i]];
      }
      if (da != db) return da <=> db;
    }
    for (std::size_t v : rank_) {
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }

  /// Like compare() but first checks that both monomials fit the order's ring.
  std::strong_ordering compare_checked(const Monomial& a, const Monomial& b) const;

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Same ranking rule rebuilt over another ring (e.g. R -> R[t]).
  MonomialOrder rebased(const RingPtr& ring) const;

  /// True if both orders rank the same ring identically.
  bool same_as(const MonomialOrder& other) const;

 private:
  MonomialOrder(Kind kind, RingPtr ring, std::vector<std::size_t> rank, std::size_t num_elim);

  Kind kind_;
  RingPtr ring_;
  std::vector<std::size_t> rank_;
  std::size_t num_elim_ = 0;
  Kind inner_kind_ = Kind::OrderB;
  std::vector<Variable> elim_;  // block orders only
};

/// Three-way comparison result used by the CLI and bindings.
enum class Cmp { LT, EQ, GT };
Cmp compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

}  // namespace detgb
