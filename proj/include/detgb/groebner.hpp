#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "detgb/order.hpp"
#include "detgb/polynomial.hpp"

namespace detgb {

/// Maximal term of p under ord. Throws DomainError for p == 0.
Term leading_term(const Polynomial& p, const MonomialOrder& ord);
Monomial leading_monomial(const Polynomial& p, const MonomialOrder& ord);

/// p scaled so that its leading coefficient under ord is 1 (zero stays zero).
Polynomial make_monic(const Polynomial& p, const MonomialOrder& ord);

/// S(f, g) = (L / lt f) f - (L / lt g) g with L = lcm(lm f, lm g); lt includes the coefficient.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division. At every step the first divisor (in sequence
/// order) whose leading monomial divides the current leading term is used;
/// terms that no divisor reduces move to the remainder.
Division reduce(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord);

/// Remainder of reduce() without tracking quotients.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord);

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
};

/// Buchberger's algorithm with normal pair selection and the Gebauer-Moeller
/// criteria (including the coprime criterion). The result starts with the
/// monic, nonzero inputs followed by every nonzero S-polynomial remainder.
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, const MonomialOrder& ord,
                                   BuchbergerStats* stats = nullptr);

/// Minimalizes and interreduces a Groebner basis: every element monic, no
/// term of an element divisible by another element's leading monomial,
/// sorted by leading monomial descending.
std::vector<Polynomial> auto_reduce(std::span<const Polynomial> basis, const MonomialOrder& ord);

/// The unique reduced Groebner basis of <generators> under ord.
std::vector<Polynomial> reduced_gb(std::span<const Polynomial> generators, const MonomialOrder& ord);

/// Buchberger criterion: every S-pair of G reduces to zero against G.
bool is_groebner(std::span<const Polynomial> basis, const MonomialOrder& ord);

/// Monic and auto-reduced (no term of any element divisible by the leading
/// monomial of another element).
bool is_reduced(std::span<const Polynomial> basis, const MonomialOrder& ord);

/// An ideal given by generators, with a per-order cache of its reduced
/// Groebner basis. Copies share the cache; the cache is thread safe.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  std::span<const Polynomial> generators() const { return gens_; }

  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord) const;

  /// Adds generators, returning a new ideal (fresh cache).
  Ideal plus(std::span<const Polynomial> more) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> by_order;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_member(const Polynomial& f, const Ideal& ideal, const MonomialOrder& ord);
bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& ord);
/// a is contained in b.
bool ideal_contains(const Ideal& b, const Ideal& a, const MonomialOrder& ord);

}  // namespace detgb
