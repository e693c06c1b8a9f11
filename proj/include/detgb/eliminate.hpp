#pragma once

#include "detgb/groebner.hpp"

namespace detgb {

/// I ∩ J via elimination of an auxiliary variable t from
/// <t·gens(I), (1-t)·gens(J)> under a block order with t on top.
/// The result is generated by the reduced basis elements free of t.
Ideal intersect(const Ideal& a, const Ideal& b, const MonomialOrder& ord);

/// (I : f) = (I ∩ <f>) / f. Throws DomainError for f == 0 and InvariantError
/// if a generator of the intersection is not divisible by f.
Ideal colon(const Ideal& ideal, const Polynomial& f, const MonomialOrder& ord);

}  // namespace detgb
