#include "detgb/groebner.hpp"

#include <algorithm>

#include "detgb/budget.hpp"
#include "detgb/errors.hpp"

namespace detgb {

namespace {

// Term list sorted descending under the active order.
using TermList = std::vector<Term>;

TermList sorted_terms(const Polynomial& p, const MonomialOrder& ord) {
  TermList terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&ord](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  return terms;
}

// f[from..] - c * m * g[1..]; the caller has already cancelled the leading terms.
TermList sub_scaled_tail(const TermList& f, std::size_t from, const Rational& c, const Monomial& m, const TermList& g,
                         const MonomialOrder& ord) {
  TermList out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 1;
  Monomial gm;
  bool have_gm = false;
  while (i < f.size() && j < g.size()) {
    if (!have_gm) {
      gm = g[j].mono * m;
      have_gm = true;
    }
    auto cmp = ord.compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({-(c * g[j].coeff), gm});
      ++j;
      have_gm = false;
    } else {
      Rational s = f[i].coeff - c * g[j].coeff;
      if (s != 0) out.push_back({std::move(s), gm});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({-(c * g[j].coeff), g[j].mono * m});
  return out;
}

void make_monic_terms(TermList& terms) {
  if (terms.empty() || terms[0].coeff == 1) return;
  Rational inv = 1 / terms[0].coeff;
  for (auto& t : terms) t.coeff *= inv;
}

struct Divisor {
  const TermList* terms;
  const Monomial* lead;
};

// Full reduction of f against the divisors; returns the remainder (sorted by ord).
TermList reduce_terms(TermList f, std::span<const Divisor> divisors, const MonomialOrder& ord,
                      std::vector<TermList>* quotients = nullptr) {
  TermList remainder;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Term& lt = f[pos];
    std::size_t hit = divisors.size();
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i].lead->divides(lt.mono)) {
        hit = i;
        break;
      }
    }
    if (hit == divisors.size()) {
      remainder.push_back(lt);
      ++pos;
      continue;
    }
    const TermList& g = *divisors[hit].terms;
    Rational c = lt.coeff / g[0].coeff;
    Monomial m = lt.mono.divided_by(g[0].mono);
    if (quotients) (*quotients)[hit].push_back({c, m});
    f = sub_scaled_tail(f, pos + 1, c, m, g, ord);
    pos = 0;
  }
  return remainder;
}

Polynomial to_polynomial(const RingPtr& ring, TermList terms) { return Polynomial(ring, std::move(terms)); }

void require_order_ring(const Polynomial& p, const MonomialOrder& ord, std::string_view op) {
  require_same_ring(*p.ring(), *ord.ring(), op);
}

TermList spoly_terms(const TermList& f, const TermList& g, const MonomialOrder& ord) {
  Monomial l = lcm(f[0].mono, g[0].mono);
  Monomial mf = l.divided_by(f[0].mono);
  Monomial mg = l.divided_by(g[0].mono);
  // (mf / lc f) f - (mg / lc g) g, leading terms cancel exactly
  TermList scaled_f;
  scaled_f.reserve(f.size());
  Rational cf = 1 / f[0].coeff;
  for (std::size_t i = 1; i < f.size(); ++i) scaled_f.push_back({f[i].coeff * cf, f[i].mono * mf});
  Rational cg = 1 / g[0].coeff;
  return sub_scaled_tail(scaled_f, 0, cg, mg, g, ord);
}

}  // namespace

Term leading_term(const Polynomial& p, const MonomialOrder& ord) {
  require_order_ring(p, ord, "leading_term");
  if (p.is_zero()) throw DomainError("leading term of the zero polynomial");
  const Term* best = &p.terms()[0];
  for (const auto& t : p.terms()) {
    if (ord.greater(t.mono, best->mono)) best = &t;
  }
  return *best;
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& ord) { return leading_term(p, ord).mono; }

Polynomial make_monic(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  return p.scaled(1 / leading_term(p, ord).coeff);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  require_order_ring(f, ord, "s_polynomial");
  require_order_ring(g, ord, "s_polynomial");
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of a zero polynomial");
  return to_polynomial(f.ring(), spoly_terms(sorted_terms(f, ord), sorted_terms(g, ord), ord));
}

Division reduce(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord) {
  require_order_ring(f, ord, "reduce");
  std::vector<TermList> sorted;
  std::vector<Divisor> divs;
  sorted.reserve(divisors.size());
  for (const auto& g : divisors) {
    require_order_ring(g, ord, "reduce");
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    sorted.push_back(sorted_terms(g, ord));
  }
  for (const auto& s : sorted) divs.push_back({&s, &s[0].mono});
  std::vector<TermList> quotients(divisors.size());
  TermList r = reduce_terms(sorted_terms(f, ord), divs, ord, &quotients);
  Division out{{}, to_polynomial(f.ring(), std::move(r))};
  for (auto& q : quotients) out.quotients.push_back(to_polynomial(f.ring(), std::move(q)));
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord) {
  require_order_ring(f, ord, "normal_form");
  std::vector<TermList> sorted;
  std::vector<Divisor> divs;
  sorted.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    require_order_ring(g, ord, "normal_form");
    sorted.push_back(sorted_terms(g, ord));
  }
  for (const auto& s : sorted) divs.push_back({&s, &s[0].mono});
  return to_polynomial(f.ring(), reduce_terms(sorted_terms(f, ord), divs, ord));
}

namespace {

class Engine {
 public:
  Engine(const MonomialOrder& ord, BuchbergerStats* stats) : ord_(ord), stats_(stats ? stats : &local_stats_) {}

  void insert(TermList h) {
    make_monic_terms(h);
    std::size_t hidx = basis_.size();
    basis_.push_back(std::move(h));
    active_.push_back(true);
    update(hidx);
  }

  void run() {
    while (!pairs_.empty()) {
      check_deadline();
      std::size_t best = 0;
      for (std::size_t p = 1; p < pairs_.size(); ++p) {
        if (pair_less(pairs_[p], pairs_[best])) best = p;
      }
      Pair pair = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();

      ++stats_->pairs_reduced;
      TermList s = spoly_terms(basis_[pair.i], basis_[pair.j], ord_);
      TermList r = reduce_terms(std::move(s), active_divisors(), ord_);
      if (r.empty()) {
        ++stats_->zero_reductions;
        continue;
      }
      insert(std::move(r));
    }
  }

  std::vector<TermList>& basis() { return basis_; }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };

  bool pair_less(const Pair& a, const Pair& b) const {
    auto c = ord_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  const Monomial& lead(std::size_t i) const { return basis_[i][0].mono; }

  std::vector<Divisor> active_divisors() const {
    std::vector<Divisor> divs;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (active_[i]) divs.push_back({&basis_[i], &basis_[i][0].mono});
    }
    return divs;
  }

  // Gebauer-Moeller update for a new basis element h.
  void update(std::size_t h) {
    const Monomial& lh = lead(h);
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) candidates.push_back({g, h, lcm(lead(g), lh)});
    }
    stats_->pairs_created += candidates.size();

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = coprime(lead(p.i), lh);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d) {
          if (candidates[d].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t d = 0; d < kept.size() && keep; ++d) {
          if (kept[d].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) {
        kept.push_back(p);
      } else {
        ++stats_->chain_skipped;
      }
    }

    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && lcm(lead(p.i), lh) != p.lcm && lcm(lead(p.j), lh) != p.lcm;
      if (drop) {
        ++stats_->chain_skipped;
      } else {
        next.push_back(p);
      }
    }
    for (const auto& p : kept) {
      if (coprime(lead(p.i), lh)) {
        ++stats_->coprime_skipped;
      } else {
        next.push_back(p);
      }
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(lead(g))) active_[g] = false;
    }
  }

  const MonomialOrder& ord_;
  BuchbergerStats local_stats_;
  BuchbergerStats* stats_;
  std::vector<TermList> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, const MonomialOrder& ord,
                                   BuchbergerStats* stats) {
  Engine engine(ord, stats);
  for (const auto& f : generators) {
    require_order_ring(f, ord, "buchberger");
    if (f.is_zero()) continue;
    engine.insert(sorted_terms(f, ord));
  }
  engine.run();
  std::vector<Polynomial> out;
  for (auto& terms : engine.basis()) out.push_back(to_polynomial(ord.ring(), std::move(terms)));
  return out;
}

std::vector<Polynomial> auto_reduce(std::span<const Polynomial> basis, const MonomialOrder& ord) {
  std::vector<TermList> elems;
  for (const auto& g : basis) {
    require_order_ring(g, ord, "auto_reduce");
    if (g.is_zero()) continue;
    elems.push_back(sorted_terms(g, ord));
    make_monic_terms(elems.back());
  }
  // smallest leading monomials first, so that kept elements are minimal
  std::stable_sort(elems.begin(), elems.end(),
                   [&ord](const TermList& a, const TermList& b) { return ord.compare(a[0].mono, b[0].mono) < 0; });
  std::vector<TermList> minimal;
  for (auto& e : elems) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&e](const TermList& m) { return m[0].mono.divides(e[0].mono); });
    if (!redundant) minimal.push_back(std::move(e));
  }
  std::vector<TermList> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Divisor> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back({&minimal[j], &minimal[j][0].mono});
    }
    TermList tail(minimal[i].begin() + 1, minimal[i].end());
    TermList r = reduce_terms(std::move(tail), others, ord);
    r.insert(r.begin(), minimal[i][0]);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&ord](const TermList& a, const TermList& b) { return ord.greater(a[0].mono, b[0].mono); });
  std::vector<Polynomial> out;
  for (auto& r : reduced) out.push_back(to_polynomial(ord.ring(), std::move(r)));
  return out;
}

std::vector<Polynomial> reduced_gb(std::span<const Polynomial> generators, const MonomialOrder& ord) {
  auto gb = buchberger(generators, ord);
  return auto_reduce(gb, ord);
}

bool is_groebner(std::span<const Polynomial> basis, const MonomialOrder& ord) {
  std::vector<TermList> elems;
  for (const auto& g : basis) {
    require_order_ring(g, ord, "is_groebner");
    if (!g.is_zero()) elems.push_back(sorted_terms(g, ord));
  }
  std::vector<Divisor> divs;
  for (const auto& e : elems) divs.push_back({&e, &e[0].mono});
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      check_deadline();
      if (!reduce_terms(spoly_terms(elems[i], elems[j], ord), divs, ord).empty()) return false;
    }
  }
  return true;
}

bool is_reduced(std::span<const Polynomial> basis, const MonomialOrder& ord) {
  std::vector<TermList> elems;
  for (const auto& g : basis) {
    require_order_ring(g, ord, "is_reduced");
    if (g.is_zero()) return false;
    elems.push_back(sorted_terms(g, ord));
    if (elems.back()[0].coeff != 1) return false;
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      const Monomial& lj = elems[j][0].mono;
      for (const auto& t : elems[i]) {
        if (lj.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) require_same_ring(*ring_, *g.ring(), "Ideal");
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord) const {
  require_same_ring(*ring_, *ord.ring(), "Ideal::groebner_basis");
  const std::string key = ord.name();
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->by_order.find(key);
    if (it != cache_->by_order.end()) return *it->second;
  }
  auto gb = std::make_shared<const std::vector<Polynomial>>(reduced_gb(gens_, ord));
  std::lock_guard lock(cache_->mu);
  auto [it, inserted] = cache_->by_order.emplace(key, std::move(gb));
  return *it->second;
}

Ideal Ideal::plus(std::span<const Polynomial> more) const {
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), more.begin(), more.end());
  return Ideal(ring_, std::move(gens));
}

bool ideal_member(const Polynomial& f, const Ideal& ideal, const MonomialOrder& ord) {
  require_same_ring(*f.ring(), *ideal.ring(), "ideal_member");
  return normal_form(f, ideal.groebner_basis(ord), ord).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& ord) {
  require_same_ring(*a.ring(), *b.ring(), "ideal_equal");
  return a.groebner_basis(ord) == b.groebner_basis(ord);
}

bool ideal_contains(const Ideal& b, const Ideal& a, const MonomialOrder& ord) {
  require_same_ring(*a.ring(), *b.ring(), "ideal_contains");
  const auto& gb = b.groebner_basis(ord);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Polynomial& f) { return normal_form(f, gb, ord).is_zero(); });
}

}  // namespace detgb
