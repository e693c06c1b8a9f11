#include "detgb/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "detgb/errors.hpp"
#include "detgb/order.hpp"

namespace detgb {

namespace {

bool canonical_greater(const Term& a, const Term& b) { return canonical_compare(a.mono, b.mono) > 0; }

void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), canonical_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == acc.mono) {
      acc.coeff += terms[j].coeff;
      ++j;
    }
    if (acc.coeff != 0) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonically sorted term lists: a + sign*b.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = canonical_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw ContextError("polynomial needs a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw ContextError("polynomial needs a ring");
  for (const auto& t : terms_) {
    if (t.mono.support_end() > ring_->num_vars()) throw ContextError("monomial uses a variable outside the ring");
  }
  normalize(terms_);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  return monomial(std::move(ring), c, Monomial{});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_vars()) throw DomainError("variable index outside ring");
  return monomial(std::move(ring), 1, Monomial::variable(index));
}

Polynomial Polynomial::monomial(RingPtr ring, const Rational& c, const Monomial& m) {
  std::vector<Term> terms;
  if (c != 0) terms.push_back({c, m});
  return Polynomial(std::move(ring), std::move(terms));
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(*ring_, *other.ring_, "add");
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(*ring_, *other.ring_, "subtract");
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_, "multiply");
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.coeff * t.coeff, s.mono * t.mono});
  }
  Polynomial out(a.ring_);
  normalize(prod);
  out.terms_ = std::move(prod);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::times(const Rational& c, const Monomial& m) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial out = *this;
  // multiplication by a monomial preserves the canonical order
  for (auto& t : out.terms_) {
    t.coeff *= c;
    t.mono = t.mono * m;
  }
  if (m.support_end() > ring_->num_vars()) throw ContextError("monomial uses a variable outside the ring");
  return out;
}

Polynomial Polynomial::moved_to(RingPtr ring) const {
  const auto& from = ring_->variables();
  const auto& to = ring->variables();
  std::size_t common = std::min(from.size(), to.size());
  if (!std::equal(from.begin(), from.begin() + static_cast<std::ptrdiff_t>(common), to.begin())) {
    throw ContextError("rings have incompatible variable layouts");
  }
  for (const auto& t : terms_) {
    if (t.mono.support_end() > to.size()) throw ContextError("polynomial uses a variable missing from the target ring");
  }
  Polynomial out(std::move(ring));
  out.terms_ = terms_;
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->same_ring(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string format_terms(std::span<const Term> terms, const RingContext& ring) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      out += c.get_str();
      wrote = true;
    }
    for (std::size_t v = 0; v < ring.num_vars(); ++v) {
      for (unsigned e = 0; e < t.mono[v]; ++e) {
        if (wrote) out += "*";
        out += ring.variable_name(v);
        wrote = true;
      }
    }
  }
  return out;
}

std::string Polynomial::to_string() const { return format_terms(terms_, *ring_); }

std::string Polynomial::to_string(const MonomialOrder& ord) const {
  std::vector<Term> sorted = terms_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&ord](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  return format_terms(sorted, *ring_);
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : ring_(ring) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
    }
  }

  Polynomial parse() {
    if (text_.empty()) fail("empty polynomial");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = (next() == '-');
    terms.push_back(term(negative));
    while (pos_ < text_.size()) {
      char op = next();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      terms.push_back(term(op == '-'));
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char next() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_++];
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }
  void expect(char ch) {
    if (next() != ch) {
      --pos_;
      fail(std::string("expected '") + ch + "'");
    }
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(text_[pos_++]);
    if (d.empty()) fail("expected digits");
    return d;
  }

  int index() {
    expect('[');
    auto d = digits();
    expect(']');
    if (d.size() > 6) fail("index too large");
    return std::stoi(d);
  }

  Term term(bool negative) {
    Term t{1, Monomial{}};
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      if (peek() == '/') {
        ++pos_;
        den = digits();
      }
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      Rational c{mpz_class(num), mpz_class(den)};
      c.canonicalize();
      t.coeff = c;
      if (peek() != '*') {
        if (negative) t.coeff = -t.coeff;
        return t;
      }
      ++pos_;
    }
    for (;;) {
      factor(t.mono);
      have_factor = true;
      if (peek() != '*') break;
      ++pos_;
    }
    if (!have_factor) fail("expected a factor");
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  void factor(Monomial& m) {
    char ch = next();
    std::optional<std::size_t> idx;
    if (ch == 'x') {
      int i = index();
      int j = index();
      idx = ring_->index_of(Variable::x(i, j));
    } else if (ch == 'y') {
      idx = ring_->index_of(Variable::y(index()));
    } else if (ch == 't') {
      idx = ring_->index_of(Variable::t());
    } else {
      --pos_;
      fail("expected x[i][j], y[j] or t");
    }
    if (!idx) fail("variable not in ring " + ring_->shape().to_string());
    m.set(*idx, m[*idx] + 1);
  }

  RingPtr ring_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
  require_same_ring(*p.ring(), *d.ring(), "divide_exact");
  if (d.is_zero()) throw DomainError("division by zero polynomial");
  // Canonical order is a monomial order, so plain long division works.
  const Term& lead = d.terms()[0];
  Polynomial rest = p;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& top = rest.terms()[0];
    if (!lead.mono.divides(top.mono)) {
      throw InvariantError("exact division failed: " + d.to_string() + " does not divide " + p.to_string());
    }
    Rational c = top.coeff / lead.coeff;
    Monomial m = top.mono.divided_by(lead.mono);
    rest -= d.times(c, m);
    quotient.push_back({c, m});
  }
  return Polynomial(p.ring(), std::move(quotient));
}

}  // namespace detgb
