#include "detgb/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <string>

#include "detgb/betti.hpp"
#include "detgb/budget.hpp"
#include "detgb/detideal.hpp"
#include "detgb/eliminate.hpp"
#include "detgb/errors.hpp"
#include "detgb/groebner.hpp"

namespace detgb {

namespace {

struct Outcome {
  bool passed = true;
  std::string witness;

  static Outcome pass() { return {}; }
  static Outcome fail(std::string w) { return {false, std::move(w)}; }
};

struct Check {
  std::string name;
  std::function<Outcome()> run;
};

using Polys = std::vector<Polynomial>;

struct Setting {
  MatrixShape shape;
  RingPtr ring;
  MonomialOrder ord;

  explicit Setting(const MatrixShape& s)
      : shape(s), ring(RingContext::make(s)), ord(MonomialOrder::order_b(ring)) {}
};

std::string kname(const char* suite, int k) { return std::string(suite) + "/k=" + std::to_string(k); }

// Generators of I~_{k}; empty (the zero ideal) when k exceeds the column count.
Polys tilde_ideal(const RingPtr& ring, int k) {
  if (k > ring->shape().cols()) return {};
  return polys(family_S_tilde(ring, k));
}

Polys top_generators(const RingPtr& ring) {
  auto g = generators(ring);
  g.resize(static_cast<std::size_t>(ring->shape().n()), Polynomial(ring));
  return g;
}

std::string list_to_string(const Polys& ps, const MonomialOrder& ord) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string(ord);
  return s + "}";
}

// First S-pair that does not reduce to zero, as a witness string.
std::optional<std::string> nonreducing_pair(const Polys& basis, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      check_deadline();
      auto r = normal_form(s_polynomial(basis[i], basis[j], ord), basis, ord);
      if (!r.is_zero()) {
        return "S(" + basis[i].to_string(ord) + ", " + basis[j].to_string(ord) + ") -> " + r.to_string(ord);
      }
    }
  }
  return std::nullopt;
}

void gb_checks(const Setting& s, std::vector<Check>& out) {
  for (int k = 1; k <= s.shape.n(); ++k) {
    out.push_back({kname("gb", k), [s, k] {
                     auto computed = reduced_gb(polys(family_S_tilde(s.ring, k)), s.ord);
                     auto expected = auto_reduce(polys(family_G(s.ring, k)), s.ord);
                     if (computed == expected) return Outcome::pass();
                     return Outcome::fail("reduced_gb(S~_k) = " + list_to_string(computed, s.ord) +
                                          " but G_k reduces to " + list_to_string(expected, s.ord));
                   }});
    out.push_back({kname("gb", k) + "/is-groebner", [s, k] {
                     if (auto w = nonreducing_pair(polys(family_G(s.ring, k)), s.ord)) return Outcome::fail(*w);
                     return Outcome::pass();
                   }});
  }
}

void skgb_checks(const Setting& s, std::vector<Check>& out) {
  for (int k = 1; k <= s.shape.n(); ++k) {
    out.push_back({kname("sk-gb", k), [s, k] {
                     if (auto w = nonreducing_pair(polys(family_S(s.ring, k)), s.ord)) return Outcome::fail(*w);
                     return Outcome::pass();
                   }});
  }
}

void reduced_checks(const Setting& s, std::vector<Check>& out) {
  for (int k = 1; k <= s.shape.n(); ++k) {
    out.push_back({kname("reduced", k), [s, k] {
                     Polys monic;
                     for (const auto& m : family_G(s.ring, k)) {
                       // leading monomial is the diagonal product times y_{|a|}
                       const int len = static_cast<int>(m.rows.size());
                       Monomial diag = Monomial::variable(s.ring->y(len));
                       for (int t = 1; t <= len; ++t) {
                         auto v = s.ring->x(m.rows[static_cast<std::size_t>(t - 1)], t);
                         diag.set(v, diag[v] + 1);
                       }
                       auto lt = leading_term(m.poly, s.ord);
                       if (!(lt.mono == diag) || lt.coeff != 1) {
                         return Outcome::fail("leading term of X~^" + m.rows.to_string() + " = " +
                                              m.poly.to_string(s.ord) + " is not the monic diagonal term");
                       }
                       monic.push_back(m.poly);
                     }
                     if (!is_reduced(monic, s.ord)) return Outcome::fail("G_k not auto-reduced: " + list_to_string(monic, s.ord));
                     return Outcome::pass();
                   }});
  }
}

void regseq_checks(const Setting& s, std::vector<Check>& out) {
  out.push_back({"regseq/leading-terms", [s] {
                   auto ord = MonomialOrder::order_a(s.ring);
                   auto g = top_generators(s.ring);
                   for (int i = 1; i <= s.shape.n(); ++i) {
                     Monomial want = Monomial::variable(s.ring->x(i, i));
                     want.set(s.ring->y(i), 1);
                     auto lt = leading_term(g[static_cast<std::size_t>(i - 1)], ord);
                     if (!(lt.mono == want) || lt.coeff != 1) {
                       return Outcome::fail("Lt(g_" + std::to_string(i) + ") under order A is not x_ii*y_i: " +
                                            g[static_cast<std::size_t>(i - 1)].to_string(ord));
                     }
                   }
                   for (std::size_t i = 0; i < g.size(); ++i) {
                     for (std::size_t j = i + 1; j < g.size(); ++j) {
                       if (!coprime(leading_monomial(g[i], ord), leading_monomial(g[j], ord))) {
                         return Outcome::fail("leading terms not coprime: " + g[i].to_string(ord) + ", " + g[j].to_string(ord));
                       }
                     }
                   }
                   return Outcome::pass();
                 }});
  out.push_back({"regseq/is-groebner", [s] {
                   auto ord = MonomialOrder::order_a(s.ring);
                   if (auto w = nonreducing_pair(top_generators(s.ring), ord)) return Outcome::fail(*w);
                   return Outcome::pass();
                 }});
}

void syzygy_checks(const Setting& s, std::vector<Check>& out) {
  out.push_back({"syzygy/worked-example", [] {
                   auto ring = RingContext::make(MatrixShape::square(5));
                   auto alpha = syzygy_phi(ring, 2, RowTuple({1, 3, 4, 5}));
                   const char* expected[] = {"0", "0", "0", "-x[5][2]", "x[4][2]", "-x[3][2]", "0", "0", "0", "x[1][2]"};
                   if (alpha.size() != 10) return Outcome::fail("phi(2,(1,3,4,5)) has length " + std::to_string(alpha.size()));
                   for (std::size_t i = 0; i < 10; ++i) {
                     if (!(alpha[i] == parse_polynomial(expected[i], ring))) {
                       return Outcome::fail("alpha(" + std::to_string(i + 1) + ") = " + alpha[i].to_string());
                     }
                   }
                   return Outcome::pass();
                 }});
  const int top = std::min(s.shape.rows() - 1, s.shape.n());
  for (int k = 1; k <= top; ++k) {
    out.push_back({kname("syzygy", k), [s, k] {
                     auto minors = family_S(s.ring, k);
                     auto twisted = family_S_tilde(s.ring, k);
                     Ideal next(s.ring, tilde_ideal(s.ring, k + 1));
                     for (const auto& a : tuples(s.shape.rows(), k + 1)) {
                       for (int j = 1; j <= k; ++j) {
                         check_deadline();
                         auto alpha = syzygy_phi(s.ring, j, a);
                         Polynomial plain(s.ring), tw(s.ring);
                         for (std::size_t i = 0; i < alpha.size(); ++i) {
                           if (alpha[i].is_zero()) continue;
                           plain += alpha[i] * minors[i].poly;
                           tw += alpha[i] * twisted[i].poly;
                         }
                         std::string at = "phi(" + std::to_string(j) + ", " + a.to_string() + ")";
                         if (!plain.is_zero()) return Outcome::fail(at + ": sum alpha X = " + plain.to_string(s.ord));
                         if (!ideal_member(tw, next, s.ord)) {
                           return Outcome::fail(at + ": sum alpha X~ = " + tw.to_string(s.ord) + " not in I~_{k+1}");
                         }
                       }
                     }
                     return Outcome::pass();
                   }});
  }
}

void spair_checks(const Setting& s, std::vector<Check>& out) {
  for (int k = 1; k <= s.shape.n(); ++k) {
    out.push_back({kname("spair-descent", k), [s, k] {
                     auto sk = polys(family_S_tilde(s.ring, k));
                     Ideal next(s.ring, tilde_ideal(s.ring, k + 1));
                     auto descend = [&](const Polynomial& f, const Polynomial& g) -> std::optional<std::string> {
                       check_deadline();
                       auto r = reduce(s_polynomial(f, g, s.ord), sk, s.ord).remainder;
                       if (ideal_member(r, next, s.ord)) return std::nullopt;
                       return "S(" + f.to_string(s.ord) + ", " + g.to_string(s.ord) + ") leaves " + r.to_string(s.ord) +
                              " outside I~_{k+1}";
                     };
                     for (std::size_t i = 0; i < sk.size(); ++i) {
                       for (std::size_t j = i + 1; j < sk.size(); ++j) {
                         if (auto w = descend(sk[i], sk[j])) return Outcome::fail(*w);
                       }
                     }
                     for (int kp = k + 1; kp <= s.shape.n(); ++kp) {
                       for (const auto& a : family_S_tilde(s.ring, kp)) {
                         for (const auto& b : sk) {
                           if (auto w = descend(a.poly, b)) return Outcome::fail(*w);
                         }
                       }
                     }
                     return Outcome::pass();
                   }});
  }
}

void laplace_checks(const Setting& s, std::vector<Check>& out) {
  for (int kp = 2; kp <= s.shape.n(); ++kp) {
    for (int k = 1; k < kp; ++k) {
      out.push_back({"laplace/k'=" + std::to_string(kp) + "/k=" + std::to_string(k), [s, kp, k] {
                       for (const auto& a : tuples(s.shape.rows(), kp)) {
                         auto beta = laplace_coeffs(s.ring, a, k);
                         Polynomial sum(s.ring);
                         for (const auto& [b, coeff] : beta) sum += coeff * leading_minor(s.ring, b);
                         Polynomial xa = leading_minor(s.ring, a);
                         if (!(sum == xa)) {
                           return Outcome::fail("Laplace expansion of X^" + a.to_string() + " gives " + sum.to_string(s.ord));
                         }
                         // column k of the k-minors replaced by column i
                         for (int i = k; i <= s.shape.cols(); ++i) {
                           Polynomial lhs(s.ring);
                           for (const auto& [b, coeff] : beta) lhs += coeff * x_am(s.ring, b, i);
                           std::vector<int> cols;
                           for (int c = 1; c <= kp; ++c) cols.push_back(c == k ? i : c);
                           Polynomial rhs = minor(s.ring, a.rows(), cols);
                           if (!(lhs == rhs)) {
                             return Outcome::fail("sum beta_b X^{b," + std::to_string(i) + "} for a=" + a.to_string() +
                                                  " is " + lhs.to_string(s.ord) + ", expected " + rhs.to_string(s.ord));
                           }
                         }
                       }
                       return Outcome::pass();
                     }});
    }
  }
}

void cofactor_checks(const Setting& s, std::vector<Check>& out) {
  for (int i = 1; i <= s.shape.n(); ++i) {
    out.push_back({"cofactor/i=" + std::to_string(i), [s, i] {
                     auto g = top_generators(s.ring);
                     Polynomial lhs = determinant(s.ring) * Polynomial::variable(s.ring, s.ring->y(i));
                     for (int j = 1; j <= s.shape.n(); ++j) lhs -= cofactor(s.ring, j, i) * g[static_cast<std::size_t>(j - 1)];
                     if (lhs.is_zero()) return Outcome::pass();
                     return Outcome::fail("Delta*y_i - sum A_ji g_j = " + lhs.to_string(s.ord));
                   }});
  }
}

// (I : f) == expected, together with I ⊆ (I:f), f (I:f) ⊆ I and ((I:f):f) == (I:f).
Outcome colon_outcome(const Ideal& ideal, const Polynomial& f, const Ideal& expected, const MonomialOrder& ord) {
  Ideal c = colon(ideal, f, ord);
  if (!ideal_contains(c, ideal, ord)) return Outcome::fail("I not contained in (I : f)");
  for (const auto& h : c.generators()) {
    if (!ideal_member(h * f, ideal, ord)) return Outcome::fail("f * " + h.to_string(ord) + " not in I");
  }
  if (!ideal_equal(c, expected, ord)) {
    return Outcome::fail("(I : f) has reduced basis " + list_to_string(c.groebner_basis(ord), ord));
  }
  Ideal twice = colon(c, f, ord);
  if (!ideal_equal(twice, c, ord)) return Outcome::fail("((I : f) : f) differs from (I : f)");
  return Outcome::pass();
}

void colon_checks(const Setting& s, std::vector<Check>& out) {
  const int n = s.shape.n();
  // <g_1..g_n : Delta> = <y_1..y_n>, in the shape's own ring
  out.push_back({"colon/delta", [s, n] {
                   Ideal ideal(s.ring, top_generators(s.ring));
                   Polys ys;
                   for (int j = 1; j <= n; ++j) ys.push_back(Polynomial::variable(s.ring, s.ring->y(j)));
                   return colon_outcome(ideal, determinant(s.ring), Ideal(s.ring, ys), s.ord);
                 }});
  if (s.shape.kind() == MatrixShape::Kind::Symmetric) return;
  // <g_1..g_n : g_{n+1}> = <g_1..g_n, Delta>, in the ring of the (n+1) x n matrix
  out.push_back({"colon/g_{n+1}", [n] {
                   Setting w(MatrixShape::wide(n));
                   auto g = generators(w.ring);
                   Ideal ideal(w.ring, top_generators(w.ring));
                   Ideal expected = ideal.plus(Polys{determinant(w.ring)});
                   return colon_outcome(ideal, g[static_cast<std::size_t>(n)], expected, w.ord);
                 }});
}

HilbertNumerator initial_numerator(const RingPtr& ring, const Polys& gens) {
  auto ord = MonomialOrder::order_b(ring);
  std::vector<Monomial> leads;
  for (const auto& g : reduced_gb(gens, ord)) leads.push_back(leading_monomial(g, ord));
  return hilbert_numerator(leads, ring->num_vars());
}

Outcome numerator_outcome(const GradedBettiTable& table, const RingPtr& ring, const Polys& gens) {
  auto predicted = table_numerator(table, ring->num_vars());
  auto computed = initial_numerator(ring, gens);
  if (predicted == computed) return Outcome::pass();
  return Outcome::fail("table gives " + predicted.to_string() + ", initial ideal gives " + computed.to_string());
}

void hilbert_checks(const Setting& s, std::vector<Check>& out) {
  const int n = s.shape.n();
  if (s.shape.kind() == MatrixShape::Kind::Wide) {
    out.push_back({"hilbert/J", [s, n] { return numerator_outcome(betti_J_graded(n), s.ring, generators(s.ring)); }});
  } else {
    out.push_back({"hilbert/koszul", [s, n] { return numerator_outcome(koszul_table(n, 2), s.ring, top_generators(s.ring)); }});
  }
  out.push_back({"hilbert/northcott", [s, n] {
                   auto gens = top_generators(s.ring);
                   gens.push_back(determinant(s.ring));
                   return numerator_outcome(northcott_table(n), s.ring, gens);
                 }});
  if (s.shape.kind() == MatrixShape::Kind::Square) {
    for (int k = 1; k <= n; ++k) {
      out.push_back({kname("hilbert/height", k), [s, n, k] {
                       auto num = initial_numerator(s.ring, polys(family_S(s.ring, k)));
                       int height = static_cast<int>(s.ring->num_vars()) - dimension(num);
                       if (height == n - k + 1) return Outcome::pass();
                       return Outcome::fail("height of I_k is " + std::to_string(height) + ", expected " +
                                            std::to_string(n - k + 1));
                     }});
    }
  }
  out.push_back({"hilbert/cm", [s, n] {
                   auto r = cm_report(s.shape);
                   std::string info = "projdim=" + std::to_string(r.projdim) + " depth=" + std::to_string(r.depth) +
                                      " dim=" + std::to_string(r.dim) + " is_cm=" + (r.is_cm ? "true" : "false");
                   bool wide = s.shape.kind() == MatrixShape::Kind::Wide;
                   bool ok = r.hilbert_consistent && (wide ? (!r.is_cm && r.depth == n * n + n - 1) : r.is_cm);
                   return ok ? Outcome::pass() : Outcome::fail(info);
                 }});
}

std::vector<Check> collect(Suite suite, const Setting& s) {
  std::vector<Check> checks;
  switch (suite) {
    case Suite::Gb: gb_checks(s, checks); break;
    case Suite::SkGb: skgb_checks(s, checks); break;
    case Suite::Reduced: reduced_checks(s, checks); break;
    case Suite::Regseq: regseq_checks(s, checks); break;
    case Suite::Syzygy: syzygy_checks(s, checks); break;
    case Suite::SpairDescent: spair_checks(s, checks); break;
    case Suite::Laplace: laplace_checks(s, checks); break;
    case Suite::Cofactor: cofactor_checks(s, checks); break;
    case Suite::Colon: colon_checks(s, checks); break;
    case Suite::Hilbert: hilbert_checks(s, checks); break;
    case Suite::All:
      for (Suite sub : expand_suite(Suite::All)) {
        auto part = collect(sub, s);
        std::move(part.begin(), part.end(), std::back_inserter(checks));
      }
      break;
  }
  return checks;
}

CheckResult execute(const Check& check, const VerifyOptions& options) {
  ScopedDeadline guard(options.deadline);
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = check.run();
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const std::exception& e) {
    o = Outcome::fail(std::string("exception: ") + e.what());
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {check.name, o.passed, o.witness, ms};
}

}  // namespace

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::Gb, Suite::SkGb, Suite::Reduced, Suite::Regseq, Suite::Syzygy, Suite::SpairDescent,
                  Suite::Laplace, Suite::Cofactor, Suite::Colon, Suite::Hilbert, Suite::All}) {
    if (suite_name(s) == name) return s;
  }
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::Gb: return "gb";
    case Suite::SkGb: return "sk-gb";
    case Suite::Reduced: return "reduced";
    case Suite::Regseq: return "regseq";
    case Suite::Syzygy: return "syzygy";
    case Suite::SpairDescent: return "spair-descent";
    case Suite::Laplace: return "laplace";
    case Suite::Cofactor: return "cofactor";
    case Suite::Colon: return "colon";
    case Suite::Hilbert: return "hilbert";
    case Suite::All: return "all";
  }
  return "?";
}

std::vector<Suite> expand_suite(Suite suite) {
  if (suite != Suite::All) return {suite};
  return {Suite::Gb,      Suite::SkGb,     Suite::Reduced, Suite::Regseq, Suite::Syzygy,
          Suite::SpairDescent, Suite::Laplace, Suite::Cofactor, Suite::Colon, Suite::Hilbert};
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SuiteReport run_suite(Suite suite, const MatrixShape& shape, const VerifyOptions& options) {
  Setting setting(shape);
  auto checks = collect(suite, setting);
  SuiteReport report{suite_name(suite), shape, {}};
  if (options.threads <= 1) {
    for (const auto& c : checks) report.checks.push_back(execute(c, options));
  } else {
    for (std::size_t start = 0; start < checks.size(); start += options.threads) {
      std::vector<std::future<CheckResult>> batch;
      for (std::size_t i = start; i < std::min(checks.size(), start + options.threads); ++i) {
        batch.push_back(std::async(std::launch::async, [&checks, i, &options] { return execute(checks[i], options); }));
      }
      for (auto& f : batch) report.checks.push_back(f.get());
    }
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

unsigned threads_from_env() {
  const char* env = std::getenv("DETGB_THREADS");
  if (!env || !*env) return 0;
  try {
    int v = std::stoi(env);
    return v > 0 ? static_cast<unsigned>(v) : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace detgb
