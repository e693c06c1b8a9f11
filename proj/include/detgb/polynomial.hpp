#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detgb/monomial.hpp"
#include "detgb/ring.hpp"

namespace detgb {

using Rational = mpq_class;

struct Term {
  Rational coeff;
  Monomial mono;
};

class MonomialOrder;

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept in descending canonical (graded lex) order with distinct
/// monomials and nonzero coefficients, so structural equality is
/// mathematical equality.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Normalizes: sorts, merges equal monomials and drops zero coefficients.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Rational& c, const Monomial& m);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Maximal total degree of a term; -1 for zero.
  int degree() const;
  bool involves(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Rational& c, const Monomial& m) const;

  /// Same coefficients in another ring whose variable layout extends (or is
  /// extended by) this one, e.g. R <-> R[t]. Throws if a variable is lost.
  Polynomial moved_to(RingPtr ring) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Text form, terms in canonical order.
  std::string to_string() const;
  /// Text form, terms in descending order under `ord`.
  std::string to_string(const MonomialOrder& ord) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses the text grammar
///   poly   := term (('+'|'-') term)*
///   term   := [integer['/'integer]'*']? factor('*'factor)* | integer['/'integer]
///   factor := 'x['i']['j']' | 'y['j']' | 't'
/// Whitespace is ignored. Symmetric-shape entries x[i][j] with i > j fold to x[j][i].
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

std::string format_terms(std::span<const Term> terms, const RingContext& ring);

/// Exact quotient p / d; throws InvariantError when d does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);

}  // namespace detgb
