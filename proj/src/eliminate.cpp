#include "detgb/eliminate.hpp"

#include "detgb/errors.hpp"

namespace detgb {

Ideal intersect(const Ideal& a, const Ideal& b, const MonomialOrder& ord) {
  require_same_ring(*a.ring(), *b.ring(), "intersect");
  require_same_ring(*a.ring(), *ord.ring(), "intersect");
  const RingPtr& base = a.ring();
  if (base->has_elim_var()) throw DomainError("intersect: ring already carries an elimination variable");
  RingPtr ext = base->with_elim_var();
  MonomialOrder elim = MonomialOrder::block({ext->t()}, ord.rebased(ext));

  Polynomial t = Polynomial::variable(ext, ext->t());
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.moved_to(ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.moved_to(ext));

  std::vector<Polynomial> out;
  for (const auto& g : reduced_gb(gens, elim)) {
    if (!g.involves(ext->t())) out.push_back(g.moved_to(base));
  }
  return Ideal(base, std::move(out));
}

Ideal colon(const Ideal& ideal, const Polynomial& f, const MonomialOrder& ord) {
  require_same_ring(*ideal.ring(), *f.ring(), "colon");
  if (f.is_zero()) throw DomainError("colon by the zero polynomial");
  if (f.is_constant()) return ideal;
  Ideal both = intersect(ideal, Ideal(ideal.ring(), {f}), ord);
  std::vector<Polynomial> out;
  for (const auto& g : both.generators()) out.push_back(divide_exact(g, f));
  return Ideal(ideal.ring(), std::move(out));
}

}  // namespace detgb
