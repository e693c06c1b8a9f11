#include "detgb/betti.hpp"

#include <algorithm>
#include <sstream>

#include "detgb/detideal.hpp"
#include "detgb/errors.hpp"
#include "detgb/groebner.hpp"
#include "detgb/order.hpp"

namespace detgb {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t GradedBettiTable::rank(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void GradedBettiTable::add(int i, int j, std::int64_t rank) {
  if (i < 0) throw DomainError("negative homological index");
  auto& slot = entries_[{i, j}];
  slot += rank;
  if (slot < 0) throw DomainError("negative Betti number at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (slot == 0) entries_.erase({i, j});
}

int GradedBettiTable::projdim() const {
  int p = -1;
  for (const auto& [key, r] : entries_) p = std::max(p, key.first);
  return p;
}

std::vector<std::int64_t> GradedBettiTable::totals() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(projdim() + 1), 0);
  for (const auto& [key, r] : entries_) out[static_cast<std::size_t>(key.first)] += r;
  return out;
}

std::string GradedBettiTable::to_string() const {
  if (entries_.empty()) return "(empty)\n";
  int pd = projdim();
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [key, r] : entries_) {
    int row = key.second - key.first;
    if (first) {
      lo = hi = row;
      first = false;
    }
    lo = std::min(lo, row);
    hi = std::max(hi, row);
  }
  std::ostringstream os;
  auto cell = [&os](const std::string& s) {
    os << ' ';
    for (std::size_t pad = s.size(); pad < 4; ++pad) os << ' ';
    os << s;
  };
  os << "       ";
  for (int i = 0; i <= pd; ++i) cell(std::to_string(i));
  os << "\ntotal:";
  auto tot = totals();
  os << ' ';
  for (auto v : tot) cell(std::to_string(v));
  os << '\n';
  for (int row = lo; row <= hi; ++row) {
    std::string label = std::to_string(row) + ":";
    os << std::string(label.size() < 7 ? 7 - label.size() : 0, ' ') << label;
    for (int i = 0; i <= pd; ++i) {
      auto r = rank(i, row + i);
      cell(r == 0 ? "." : std::to_string(r));
    }
    os << '\n';
  }
  return os.str();
}

std::int64_t HilbertNumerator::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs) s += c;
  return s;
}

std::string HilbertNumerator::to_string() const {
  std::string out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    auto c = coeffs[d];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    auto a = c < 0 ? -c : c;
    if (a != 1 || d == 0) out += std::to_string(a);
    if (d >= 1) out += (a != 1 ? "*t" : "t");
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

Poly shift(const Poly& p, unsigned by) {
  if (p.empty()) return p;
  Poly out(by, 0);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&g](const Monomial& m) { return m.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

Poly numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};

  // pairwise coprime generators form a regular sequence
  bool all_coprime = true;
  std::array<int, kMaxVars> count{};
  for (const auto& g : gens) {
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (g[v] != 0 && ++count[v] > 1) all_coprime = false;
    }
  }
  if (all_coprime) {
    Poly out{1};
    for (const auto& g : gens) {
      Poly factor(g.degree() + 1, 0);
      factor[0] = 1;
      factor[g.degree()] = -1;
      out = mul(out, factor);
    }
    return out;
  }

  std::size_t pivot = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<Monomial> with_pivot, colon;
  for (const auto& g : gens) {
    if (g[pivot] == 0) with_pivot.push_back(g);
    Monomial q = g;
    if (q[pivot] > 0) q.set(pivot, q[pivot] - 1);
    colon.push_back(q);
  }
  with_pivot.push_back(Monomial::variable(pivot));
  return add(numerator(std::move(with_pivot)), shift(numerator(std::move(colon)), 1));
}

}  // namespace

HilbertNumerator hilbert_numerator(std::span<const Monomial> monomials, std::size_t numvars) {
  for (const auto& m : monomials) {
    if (m.support_end() > numvars) throw DomainError("monomial uses more variables than numvars");
  }
  return {numerator(std::vector<Monomial>(monomials.begin(), monomials.end())), numvars};
}

HilbertNumerator table_numerator(const GradedBettiTable& table, std::size_t numvars) {
  Poly out;
  for (const auto& [key, r] : table.entries()) {
    auto [i, j] = key;
    if (j < 0) throw DomainError("negative internal degree in Betti table");
    if (out.size() <= static_cast<std::size_t>(j)) out.resize(static_cast<std::size_t>(j) + 1, 0);
    out[static_cast<std::size_t>(j)] += (i % 2 == 0 ? r : -r);
  }
  trim(out);
  return {std::move(out), numvars};
}

int dimension(const HilbertNumerator& n) {
  Poly p = n.coeffs;
  trim(p);
  if (p.empty()) return -1;
  int mult = 0;
  for (;;) {
    std::int64_t s = 0;
    for (auto c : p) s += c;
    if (s != 0) break;
    // p = (1 - t) q
    Poly q(p.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      acc += p[k];
      q[k] = acc;
    }
    p = std::move(q);
    trim(p);
    ++mult;
  }
  return static_cast<int>(n.numvars) - mult;
}

GradedBettiTable koszul_table(int g, int d) {
  if (g < 0 || d < 0) throw DomainError("koszul_table needs g, d >= 0");
  GradedBettiTable t;
  for (int i = 0; i <= g; ++i) t.add(i, d * i, binomial(g, i));
  return t;
}

GradedBettiTable mapping_cone(const GradedBettiTable& target, const GradedBettiTable& source, int twist,
                              std::span<const std::pair<int, int>> cancel) {
  GradedBettiTable tgt = target;
  GradedBettiTable src;  // source placed at cone positions
  for (const auto& [key, r] : source.entries()) src.add(key.first + 1, key.second - twist, r);
  for (const auto& [i, j] : cancel) {
    if (tgt.rank(i, j) <= 0 || src.rank(i + 1, j) <= 0) {
      throw DomainError("cannot cancel at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    tgt.add(i, j, -1);
    src.add(i + 1, j, -1);
  }
  GradedBettiTable out = tgt;
  for (const auto& [key, r] : src.entries()) out.add(key.first, key.second, r);
  return out;
}

GradedBettiTable northcott_table(int n) {
  if (n < 1) throw DomainError("northcott_table needs n >= 1");
  // the degree-(2n) summand F_n (Koszul on y twisted by -n) maps isomorphically onto G_n
  const std::pair<int, int> cancel[] = {{n, 2 * n}};
  return mapping_cone(koszul_table(n, 2), koszul_table(n, 1), -n, cancel);
}

std::vector<std::int64_t> betti_J_totals(int n) {
  if (n < 1) throw DomainError("betti_J_totals needs n >= 1");
  std::vector<std::int64_t> b(static_cast<std::size_t>(n + 2), 0);
  b[0] = 1;
  b[1] = n + 1;
  for (int k = 1; k < n; ++k) {
    b[static_cast<std::size_t>(k + 1)] = binomial(n, k) + binomial(n, k - 1) + binomial(n, k + 1);
  }
  b[static_cast<std::size_t>(n + 1)] = n;
  return b;
}

GradedBettiTable betti_J_graded(int n) { return mapping_cone(koszul_table(n, 2), northcott_table(n), -2); }

GradedBettiTable predicted_table(const MatrixShape& shape) {
  if (shape.kind() == MatrixShape::Kind::Wide) return betti_J_graded(shape.n());
  return koszul_table(shape.n(), 2);
}

CmReport cm_report(const MatrixShape& shape) {
  RingPtr ring = RingContext::make(shape);
  MonomialOrder ord = MonomialOrder::order_b(ring);
  auto gens = generators(ring);
  std::vector<Monomial> leads;
  for (const auto& g : reduced_gb(gens, ord)) leads.push_back(leading_monomial(g, ord));
  HilbertNumerator computed = hilbert_numerator(leads, ring->num_vars());
  GradedBettiTable table = predicted_table(shape);

  CmReport r;
  r.numvars = ring->num_vars();
  r.projdim = table.projdim();
  r.depth = static_cast<int>(r.numvars) - r.projdim;
  r.dim = dimension(computed);
  r.is_cm = r.depth == r.dim;
  r.hilbert_consistent = table_numerator(table, ring->num_vars()) == computed;
  return r;
}

}  // namespace detgb
