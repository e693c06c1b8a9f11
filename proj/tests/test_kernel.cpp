#include <doctest.h>

#include "detgb/budget.hpp"
#include "detgb/errors.hpp"
#include "detgb/groebner.hpp"
#include "helpers.hpp"
#include "properties.hpp"

using namespace detgb;
using detgb::testing::P;
using detgb::testing::Ps;
using detgb::testing::ring;

TEST_CASE("ring layout and shapes") {
  auto r = ring("square:2");
  CHECK(r->num_vars() == 6);
  CHECK(r->variable_name(r->x(2, 1)) == "x[2][1]");
  CHECK(r->variable_name(r->y(2)) == "y[2]");
  CHECK_THROWS_AS(r->t(), DomainError);
  CHECK_THROWS_AS(r->x(3, 1), DomainError);

  auto s = ring("symmetric:3");
  CHECK(s->num_vars() == 6 + 3);
  CHECK(s->x(2, 1) == s->x(1, 2));

  auto w = ring("wide:2", true);
  CHECK(w->shape().rows() == 3);
  CHECK(w->num_vars() == 6 + 2 + 1);
  CHECK(w->variable_name(w->t()) == "t");

  CHECK(MatrixShape::parse("wide:4").to_string() == "wide:4");
  CHECK_THROWS_AS(MatrixShape::parse("round:2"), ParseError);
  CHECK_THROWS_AS(MatrixShape::parse("square:0"), ParseError);
  CHECK_THROWS_AS(MatrixShape::parse("square"), ParseError);
}

TEST_CASE("monomials") {
  auto a = Monomial::variable(0, 2) * Monomial::variable(3);
  auto b = Monomial::variable(0) * Monomial::variable(5);
  CHECK(a.degree() == 3);
  CHECK(lcm(a, b) == Monomial::variable(0, 2) * Monomial::variable(3) * Monomial::variable(5));
  CHECK(gcd(a, b) == Monomial::variable(0));
  CHECK_FALSE(coprime(a, b));
  CHECK(coprime(Monomial::variable(1), Monomial::variable(2)));
  CHECK(Monomial::variable(0).divides(a));
  CHECK(a.divided_by(Monomial::variable(0)) == b.divided_by(Monomial::variable(5)) * Monomial::variable(3));
  CHECK_THROWS_AS(a.divided_by(b), InvariantError);
  CHECK_THROWS_AS(Monomial::variable(0, 200) * Monomial::variable(0, 100), DomainError);
  CHECK_THROWS_AS(Monomial::variable(kMaxVars), DomainError);
}

TEST_CASE("polynomial text grammar") {
  auto r = ring("square:2");
  auto g1 = P(r, "x[1][1]*y[1] + x[1][2]*y[2]");
  CHECK(g1.to_string() == "x[1][1]*y[1] + x[1][2]*y[2]");
  CHECK(P(r, " x[1][2] * y[2]+x[1][1]*y[1] ") == g1);
  CHECK(P(r, "-3/6*x[1][1]*x[1][1]").to_string() == "-1/2*x[1][1]*x[1][1]");
  CHECK(P(r, "2 - 2").is_zero());
  CHECK(P(r, "2 - 2").to_string() == "0");
  CHECK(P(r, "7/3").to_string() == "7/3");

  CHECK_THROWS_AS(P(r, ""), ParseError);
  CHECK_THROWS_AS(P(r, "x[1][3]"), ParseError);
  CHECK_THROWS_AS(P(r, "z"), ParseError);
  CHECK_THROWS_AS(P(r, "1/0*y[1]"), ParseError);
  CHECK_THROWS_AS(P(r, "y[1] +"), ParseError);
  CHECK_THROWS_AS(P(r, "t"), ParseError);  // no elimination variable in R

  auto sym = ring("symmetric:2");
  CHECK(P(sym, "x[2][1]") == P(sym, "x[1][2]"));
}

TEST_CASE("polynomial arithmetic and ring discipline") {
  auto r = ring("square:2");
  auto f = P(r, "x[1][1] + y[1]");
  auto g = P(r, "x[1][1] - y[1]");
  CHECK(f * g == P(r, "x[1][1]*x[1][1] - y[1]*y[1]"));
  CHECK((f - f).is_zero());
  CHECK((-f + f).is_zero());
  CHECK(f.scaled(0).is_zero());
  CHECK(f.degree() == 1);
  CHECK(Polynomial(r).degree() == -1);

  auto other = ring("square:3");
  CHECK_THROWS_AS(f + P(other, "y[1]"), ContextError);
  CHECK_FALSE(f == P(other, "x[1][1] + y[1]"));

  auto rt = r->with_elim_var();
  CHECK(f.moved_to(rt).moved_to(r) == f);
  CHECK_THROWS_AS(P(rt, "t*y[1]").moved_to(r), ContextError);
  CHECK_THROWS_AS(f.moved_to(other), ContextError);

  CHECK(divide_exact(f * g, g) == f);
  CHECK_THROWS_AS(divide_exact(f * g + P(r, "1"), g), InvariantError);
  CHECK_THROWS_AS(divide_exact(f, Polynomial(r)), DomainError);
}

TEST_CASE("monomial orders") {
  auto r = ring("square:2");
  auto B = MonomialOrder::order_b(r);
  auto A = MonomialOrder::order_a(r);
  auto lm = [&](const char* s) { return P(r, s).terms()[0].mono; };

  CHECK(compare(Monomial{}, Monomial{}, B) == Cmp::EQ);
  CHECK(compare(lm("y[1]"), lm("x[1][1]*x[2][2]*y[2]"), B) == Cmp::GT);
  CHECK(compare(lm("x[1][1]*y[1]"), lm("x[2][1]*y[1]"), B) == Cmp::GT);
  // order A: x11 > x22 > y1 > y2 > x12 > x21
  CHECK(compare(lm("x[2][2]"), lm("y[1]*y[1]*y[2]"), A) == Cmp::GT);
  CHECK(compare(lm("y[2]"), lm("x[1][2]*x[2][1]"), A) == Cmp::GT);

  auto rt = r->with_elim_var();
  auto blk = MonomialOrder::block({rt->t()}, MonomialOrder::order_b(rt));
  CHECK(blk.name() == "block(t;B)");
  auto t = P(rt, "t").terms()[0].mono;
  auto big = P(rt, "y[1]*y[1]*y[1]").terms()[0].mono;
  CHECK(blk.compare(t, big) > 0);
  CHECK(MonomialOrder::order_b(rt).compare(t, big) < 0);

  CHECK_THROWS_AS(MonomialOrder::by_name("C", r), ParseError);
  CHECK_THROWS_AS(B.compare_checked(t, Monomial{}), ContextError);
}

TEST_CASE("leading terms and S-polynomials") {
  auto r = ring("square:2");
  auto B = MonomialOrder::order_b(r);
  auto A = MonomialOrder::order_a(r);
  auto g = Ps(r, {"x[1][1]*y[1] + x[1][2]*y[2]", "x[2][1]*y[1] + x[2][2]*y[2]"});
  auto delta_y2 = P(r, "x[1][1]*x[2][2]*y[2] - x[1][2]*x[2][1]*y[2]");

  CHECK(leading_term(g[0], B).mono == P(r, "x[1][1]*y[1]").terms()[0].mono);
  CHECK(leading_term(g[1], A).mono == P(r, "x[2][2]*y[2]").terms()[0].mono);
  CHECK(leading_term(P(r, "5"), B).coeff == 5);
  CHECK_THROWS_AS(leading_term(Polynomial(r), B), DomainError);

  CHECK(s_polynomial(g[0], g[0], B).is_zero());
  CHECK(s_polynomial(g[0], g[1], B) == -delta_y2);
  CHECK_THROWS_AS(s_polynomial(g[0], Polynomial(r), B), DomainError);

  auto d = reduce(s_polynomial(g[0], g[1], B), g, B);
  CHECK(d.remainder == -delta_y2);
  std::vector<Polynomial> with = {g[0], g[1], delta_y2};
  CHECK(reduce(s_polynomial(g[0], g[1], B), with, B).remainder.is_zero());

  auto self = reduce(g[0], std::vector<Polynomial>{g[0]}, B);
  CHECK(self.quotients[0] == P(r, "1"));
  CHECK(self.remainder.is_zero());
  CHECK(reduce(g[0], std::vector<Polynomial>{}, B).remainder == g[0]);
}

TEST_CASE("Buchberger and reduced bases") {
  auto r = ring("square:2");
  auto B = MonomialOrder::order_b(r);
  auto g = Ps(r, {"x[1][1]*y[1] + x[1][2]*y[2]", "x[2][1]*y[1] + x[2][2]*y[2]"});
  auto delta_y2 = P(r, "x[1][1]*x[2][2]*y[2] - x[1][2]*x[2][1]*y[2]");

  auto xy = P(r, "x[1][1]*y[1]");
  CHECK(buchberger(std::vector<Polynomial>{xy}, B) == std::vector<Polynomial>{xy});

  auto ys = Ps(r, {"y[1]", "y[2]"});
  BuchbergerStats stats;
  CHECK(buchberger(ys, B, &stats) == ys);
  CHECK(stats.coprime_skipped == 1);

  auto gb = reduced_gb(g, B);
  CHECK(gb == std::vector<Polynomial>{g[0], g[1], delta_y2});
  CHECK(is_groebner(gb, B));
  CHECK(is_reduced(gb, B));
  CHECK_FALSE(is_groebner(g, B));

  CHECK(reduced_gb(Ps(r, {"2*y[1]", "y[1] + y[2]"}), B) == ys);
  CHECK(is_groebner(ys, B));
  CHECK_FALSE(is_reduced(Ps(r, {"y[1]", "y[1] + y[2]"}), B));
  CHECK_FALSE(is_reduced(Ps(r, {"2*y[1]"}), B));

  CHECK(reduced_gb(Ps(r, {"y[1]", "3"}), B) == Ps(r, {"1"}));
  CHECK(reduced_gb(std::vector<Polynomial>{Polynomial(r)}, B).empty());
}

TEST_CASE("ideal membership and equality") {
  auto r = ring("square:2");
  auto B = MonomialOrder::order_b(r);
  auto g = Ps(r, {"x[1][1]*y[1] + x[1][2]*y[2]", "x[2][1]*y[1] + x[2][2]*y[2]"});
  auto delta = P(r, "x[1][1]*x[2][2] - x[1][2]*x[2][1]");
  Ideal I(r, g);

  CHECK(ideal_member(g[0], I, B));
  CHECK_FALSE(ideal_member(delta, I, B));
  CHECK(ideal_member(delta * P(r, "y[1]"), I, B));

  CHECK(ideal_equal(I, Ideal(r, {g[1], g[0]}), B));
  CHECK(ideal_equal(I, I.plus(std::vector<Polynomial>{delta * P(r, "y[2]")}), B));
  CHECK_FALSE(ideal_equal(I, I.plus(std::vector<Polynomial>{delta}), B));
  CHECK(ideal_contains(I.plus(std::vector<Polynomial>{delta}), I, B));
  CHECK_FALSE(ideal_contains(I, I.plus(std::vector<Polynomial>{delta}), B));

  // cached bases are per order
  CHECK(I.groebner_basis(B).size() == 3);
  CHECK(I.groebner_basis(MonomialOrder::order_a(r)).size() == 2);
}

TEST_CASE("deadlines") {
  auto r = ring("square:3");
  auto B = MonomialOrder::order_b(r);
  auto past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  std::vector<Polynomial> gens = {P(r, "x[1][1]*y[1] + x[1][2]*y[2] + x[1][3]*y[3]"),
                                  P(r, "x[2][1]*y[1] + x[2][2]*y[2] + x[2][3]*y[3]")};
  {
    ScopedDeadline guard(past);
    CHECK_THROWS_AS(reduced_gb(gens, B), BudgetExceeded);
  }
  CHECK_NOTHROW(reduced_gb(gens, B));
  CHECK_FALSE(ScopedDeadline::current().has_value());
}

TEST_CASE("random order axioms") {
  auto t = props::order_axioms(11, 1200);
  INFO(t.first_failure);
  CHECK(t.failures == 0);
}

TEST_CASE("random division invariant") {
  auto t = props::division_invariant(12, 1000);
  INFO(t.first_failure);
  CHECK(t.failures == 0);
}

TEST_CASE("random reduced basis uniqueness and idempotence") {
  auto t = props::reduced_gb_uniqueness(13, 300);
  INFO(t.first_failure);
  CHECK(t.failures == 0);
}

TEST_CASE("random text round trip") {
  props::Gen gen(14);
  auto r = ring("wide:2", true);
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < r->num_vars(); ++v) vars.push_back(v);
  auto B = MonomialOrder::order_b(r);
  for (int i = 0; i < 1000; ++i) {
    auto f = gen.poly(r, vars, 5, 4);
    REQUIRE(parse_polynomial(f.to_string(), r) == f);
    REQUIRE(parse_polynomial(f.to_string(B), r) == f);
  }
}
