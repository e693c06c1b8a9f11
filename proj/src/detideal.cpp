#include "detgb/detideal.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <optional>

#include "detgb/errors.hpp"

namespace detgb {

RowTuple::RowTuple(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1) throw DomainError("row indices are 1-based");
    if (i > 0 && rows_[i] <= rows_[i - 1]) throw DomainError("row tuple must be strictly increasing: " + to_string());
  }
}

RowTuple RowTuple::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("row tuple must look like (1,3,4)");
  std::vector<int> rows;
  std::string_view body(s.data() + 1, s.size() - 2);
  while (!body.empty()) {
    auto comma = body.find(',');
    auto piece = body.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
      throw ParseError("bad row index in '" + std::string(text) + "'");
    }
    rows.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw ParseError("trailing comma in '" + std::string(text) + "'");
  }
  try {
    return RowTuple(std::move(rows));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

RowTuple RowTuple::without(std::size_t r) const {
  if (r < 1 || r > rows_.size()) throw DomainError("row position out of range");
  std::vector<int> rest = rows_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(r - 1));
  return RowTuple(std::move(rest));
}

std::string RowTuple::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) s += (i ? "," : "") + std::to_string(rows_[i]);
  return s + ")";
}

std::vector<RowTuple> tuples(int n, int k) {
  std::vector<RowTuple> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.emplace_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

void check_tuple(const RingPtr& ring, const RowTuple& a) {
  if (a.size() == 0) throw DomainError("empty row tuple");
  if (a.rows().back() > ring->shape().rows()) {
    throw DomainError("row tuple " + a.to_string() + " exceeds the rows of " + ring->shape().to_string());
  }
}

}  // namespace

std::size_t tuple_position(const RowTuple& a, int n) {
  // number of k-subsets lexicographically before a
  const int k = static_cast<int>(a.size());
  std::size_t pos = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < a[static_cast<std::size_t>(i)]; ++v) pos += binom(n - v, k - i - 1);
    prev = a[static_cast<std::size_t>(i)];
  }
  return pos;
}

Polynomial entry(const RingPtr& ring, int i, int j) { return Polynomial::variable(ring, ring->x(i, j)); }

std::vector<Polynomial> generators(const RingPtr& ring) {
  const auto& shape = ring->shape();
  std::vector<Polynomial> out;
  for (int i = 1; i <= shape.rows(); ++i) {
    std::vector<Term> terms;
    for (int j = 1; j <= shape.cols(); ++j) {
      Monomial m = Monomial::variable(ring->x(i, j));
      m.set(ring->y(j), 1);
      terms.push_back({1, m});
    }
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

Polynomial minor(const RingPtr& ring, const std::vector<int>& rows, const std::vector<int>& cols) {
  const auto& shape = ring->shape();
  if (rows.size() != cols.size()) throw DomainError("minor needs as many rows as columns");
  if (rows.size() > 20) throw DomainError("minor too large");
  for (int r : rows) {
    if (r < 1 || r > shape.rows()) throw DomainError("row index out of range in minor");
  }
  for (int c : cols) {
    if (c < 1 || c > shape.cols()) throw DomainError("column index out of range in minor");
  }
  const std::size_t k = rows.size();
  if (k == 0) return Polynomial::constant(ring, 1);

  // expansion along rows in order; memo keyed by the set of used column positions
  std::vector<std::optional<Polynomial>> memo(std::size_t{1} << k);
  auto det = [&](auto& self, std::uint32_t used) -> const Polynomial& {
    auto& slot = memo[used];
    if (slot) return *slot;
    const auto depth = static_cast<std::size_t>(std::popcount(used));
    if (depth == k) {
      slot = Polynomial::constant(ring, 1);
      return *slot;
    }
    Polynomial acc(ring);
    int sign = 1;
    for (std::size_t p = 0; p < k; ++p) {
      if (used & (1u << p)) continue;
      Polynomial term = entry(ring, rows[depth], cols[p]) * self(self, used | (1u << p));
      if (sign > 0) {
        acc += term;
      } else {
        acc -= term;
      }
      sign = -sign;
    }
    slot = std::move(acc);
    return *slot;
  };
  return det(det, 0);
}

Polynomial x_am(const RingPtr& ring, const RowTuple& a, int m) {
  check_tuple(ring, a);
  const int k = static_cast<int>(a.size());
  if (m < k) throw DomainError("X^{a,m} needs m >= k");
  std::vector<int> cols;
  for (int c = 1; c < k; ++c) cols.push_back(c);
  cols.push_back(m);
  return minor(ring, a.rows(), cols);
}

Polynomial leading_minor(const RingPtr& ring, const RowTuple& a) { return x_am(ring, a, static_cast<int>(a.size())); }

Polynomial tilde(const RingPtr& ring, const RowTuple& a) {
  check_tuple(ring, a);
  const int k = static_cast<int>(a.size());
  Polynomial acc(ring);
  for (int m = k; m <= ring->shape().cols(); ++m) {
    acc += x_am(ring, a, m) * Polynomial::variable(ring, ring->y(m));
  }
  return acc;
}

Polynomial determinant(const RingPtr& ring) {
  std::vector<int> idx;
  for (int i = 1; i <= ring->shape().n(); ++i) idx.push_back(i);
  return minor(ring, idx, idx);
}

Polynomial cofactor(const RingPtr& ring, int j, int i) {
  const int n = ring->shape().n();
  if (j < 1 || j > n || i < 1 || i > n) throw DomainError("cofactor index out of range");
  std::vector<int> rows, cols;
  for (int r = 1; r <= n; ++r) {
    if (r != j) rows.push_back(r);
    if (r != i) cols.push_back(r);
  }
  Polynomial m = minor(ring, rows, cols);
  return ((i + j) % 2 == 0) ? m : -m;
}

std::vector<FamilyMember> family_S(const RingPtr& ring, int k) {
  if (k < 1 || k > ring->shape().cols()) throw DomainError("family index k out of range");
  std::vector<FamilyMember> out;
  for (auto& a : tuples(ring->shape().rows(), k)) {
    Polynomial p = leading_minor(ring, a);
    out.push_back({std::move(a), std::move(p)});
  }
  return out;
}

std::vector<FamilyMember> family_S_tilde(const RingPtr& ring, int k) {
  if (k < 1 || k > ring->shape().cols()) throw DomainError("family index k out of range");
  std::vector<FamilyMember> out;
  for (auto& a : tuples(ring->shape().rows(), k)) {
    Polynomial p = tilde(ring, a);
    out.push_back({std::move(a), std::move(p)});
  }
  return out;
}

std::vector<FamilyMember> family_G(const RingPtr& ring, int k) {
  if (k < 1 || k > ring->shape().cols()) throw DomainError("family index k out of range");
  std::vector<FamilyMember> out;
  for (int i = k; i <= ring->shape().cols(); ++i) {
    auto part = family_S_tilde(ring, i);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<Polynomial> polys(const std::vector<FamilyMember>& family) {
  std::vector<Polynomial> out;
  out.reserve(family.size());
  for (const auto& m : family) out.push_back(m.poly);
  return out;
}

std::vector<Polynomial> syzygy_phi(const RingPtr& ring, int j, const RowTuple& a) {
  check_tuple(ring, a);
  const int k = static_cast<int>(a.size()) - 1;
  if (k < 1) throw DomainError("syzygy_phi needs a tuple of length >= 2");
  if (j < 1 || j > k) throw DomainError("syzygy_phi needs 1 <= j <= k");
  const int rows = ring->shape().rows();
  std::vector<Polynomial> alpha(binom(rows, k), Polynomial(ring));
  for (std::size_t r = 1; r <= a.size(); ++r) {
    std::size_t pos = tuple_position(a.without(r), rows);
    Polynomial x = entry(ring, a[r - 1], j);
    alpha[pos] = (r % 2 == 1) ? x : -x;  // (-1)^(r+1)
  }
  return alpha;
}

std::map<RowTuple, Polynomial> laplace_coeffs(const RingPtr& ring, const RowTuple& a, int k) {
  check_tuple(ring, a);
  const int kp = static_cast<int>(a.size());
  if (k < 1 || k >= kp) throw DomainError("laplace_coeffs needs 1 <= k < |a|");
  if (kp > ring->shape().cols()) throw DomainError("tuple longer than the number of columns");
  std::vector<int> right_cols;
  for (int c = k + 1; c <= kp; ++c) right_cols.push_back(c);
  std::map<RowTuple, Polynomial> out;
  for (const auto& pick : tuples(kp, k)) {
    // pick holds positions (1-based) into a
    std::vector<int> chosen, rest;
    int parity = 0;
    for (int p : pick) parity += p;
    for (int c = 1; c <= k; ++c) parity += c;
    std::size_t next = 0;
    for (int p = 1; p <= kp; ++p) {
      if (next < pick.size() && pick[next] == p) {
        chosen.push_back(a[static_cast<std::size_t>(p - 1)]);
        ++next;
      } else {
        rest.push_back(a[static_cast<std::size_t>(p - 1)]);
      }
    }
    Polynomial comp = minor(ring, rest, right_cols);
    out.emplace(RowTuple(std::move(chosen)), parity % 2 == 0 ? comp : -comp);
  }
  return out;
}

}  // namespace detgb
