#include "detgb/order.hpp"

#include <algorithm>

#include "detgb/errors.hpp"

namespace detgb {

MonomialOrder::MonomialOrder(Kind kind, RingPtr ring, std::vector<std::size_t> rank, std::size_t num_elim)
    : kind_(kind), ring_(std::move(ring)), rank_(std::move(rank)), num_elim_(num_elim) {}

MonomialOrder MonomialOrder::order_a(const RingPtr& ring) {
  const auto& shape = ring->shape();
  std::vector<std::size_t> rank;
  std::vector<bool> used(ring->num_vars(), false);
  auto push = [&](std::size_t v) {
    if (!used[v]) {
      used[v] = true;
      rank.push_back(v);
    }
  };
  for (int i = 1; i <= shape.n(); ++i) push(ring->x(i, i));
  for (int j = 1; j <= shape.cols(); ++j) push(ring->y(j));
  for (std::size_t v = 0; v < ring->num_x_vars(); ++v) push(v);
  if (ring->has_elim_var()) push(ring->t());
  return {Kind::OrderA, ring, std::move(rank), 0};
}

MonomialOrder MonomialOrder::order_b(const RingPtr& ring) {
  std::vector<std::size_t> rank;
  for (int j = 1; j <= ring->shape().cols(); ++j) rank.push_back(ring->y(j));
  for (std::size_t v = 0; v < ring->num_x_vars(); ++v) rank.push_back(v);
  if (ring->has_elim_var()) rank.push_back(ring->t());
  return {Kind::OrderB, ring, std::move(rank), 0};
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> elim_vars, const MonomialOrder& inner) {
  if (inner.kind_ == Kind::Block) throw DomainError("nested block orders are not supported");
  std::vector<bool> is_elim(inner.ring_->num_vars(), false);
  for (auto v : elim_vars) {
    if (v >= is_elim.size()) throw DomainError("elimination variable outside ring");
    is_elim[v] = true;
  }
  std::vector<std::size_t> rank;
  for (auto v : inner.rank_) {
    if (is_elim[v]) rank.push_back(v);
  }
  std::size_t num_elim = rank.size();
  for (auto v : inner.rank_) {
    if (!is_elim[v]) rank.push_back(v);
  }
  MonomialOrder out(Kind::Block, inner.ring_, std::move(rank), num_elim);
  out.inner_kind_ = inner.kind_;
  for (std::size_t i = 0; i < num_elim; ++i) out.elim_.push_back(inner.ring_->variables()[out.rank_[i]]);
  return out;
}

MonomialOrder MonomialOrder::by_name(std::string_view name, const RingPtr& ring) {
  if (name == "A" || name == "a") return order_a(ring);
  if (name == "B" || name == "b") return order_b(ring);
  throw ParseError("unknown monomial order '" + std::string(name) + "' (expected A or B)");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::OrderA: return "A";
    case Kind::OrderB: return "B";
    case Kind::Block: {
      std::string s = "block(";
      for (std::size_t i = 0; i < elim_.size(); ++i) s += (i ? "," : "") + elim_[i].name();
      return s + ";" + (inner_kind_ == Kind::OrderA ? "A" : "B") + ")";
    }
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare_checked(const Monomial& a, const Monomial& b) const {
  if (a.support_end() > ring_->num_vars() || b.support_end() > ring_->num_vars()) {
    throw ContextError("monomial does not belong to the order's ring " + ring_->shape().to_string());
  }
  return compare(a, b);
}

MonomialOrder MonomialOrder::rebased(const RingPtr& ring) const {
  if (kind_ == Kind::OrderA) return order_a(ring);
  if (kind_ == Kind::OrderB) return order_b(ring);
  MonomialOrder inner = inner_kind_ == Kind::OrderA ? order_a(ring) : order_b(ring);
  std::vector<std::size_t> elim;
  for (const auto& v : elim_) {
    auto idx = ring->index_of(v);
    if (!idx) throw ContextError("elimination variable " + v.name() + " missing from target ring");
    elim.push_back(*idx);
  }
  return block(std::move(elim), inner);
}

bool MonomialOrder::same_as(const MonomialOrder& other) const {
  return ring_->same_ring(*other.ring_) && rank_ == other.rank_ && num_elim_ == other.num_elim_;
}

Cmp compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  auto c = ord.compare_checked(a, b);
  if (c < 0) return Cmp::LT;
  if (c > 0) return Cmp::GT;
  return Cmp::EQ;
}

}  // namespace detgb
