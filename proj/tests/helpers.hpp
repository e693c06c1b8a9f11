#pragma once

#include <string>
#include <vector>

#include "detgb/polynomial.hpp"
#include "detgb/ring.hpp"

namespace detgb::testing {

inline RingPtr ring(const std::string& shape, bool with_t = false) {
  return RingContext::make(MatrixShape::parse(shape), with_t);
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline std::vector<Polynomial> Ps(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, r));
  return out;
}

}  // namespace detgb::testing
