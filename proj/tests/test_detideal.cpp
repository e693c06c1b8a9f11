#include <doctest.h>

#include "detgb/detideal.hpp"
#include "detgb/errors.hpp"
#include "detgb/groebner.hpp"
#include "helpers.hpp"

using namespace detgb;
using detgb::testing::P;
using detgb::testing::ring;

TEST_CASE("row tuples") {
  auto a = RowTuple::parse("(1,3,4,5)");
  CHECK(a.size() == 4);
  CHECK(a.to_string() == "(1,3,4,5)");
  CHECK(a.without(2) == RowTuple({1, 4, 5}));
  CHECK(RowTuple::parse(" ( 2 ) ") == RowTuple({2}));
  CHECK_THROWS_AS(RowTuple({2, 1}), DomainError);
  CHECK_THROWS_AS(RowTuple({0, 1}), DomainError);
  CHECK_THROWS_AS(RowTuple::parse("(1,2"), ParseError);
  CHECK_THROWS_AS(RowTuple::parse("1,2"), ParseError);

  auto c = tuples(5, 3);
  CHECK(c.size() == 10);
  CHECK(c.front() == RowTuple({1, 2, 3}));
  CHECK(c.back() == RowTuple({3, 4, 5}));
  CHECK(tuple_position(RowTuple({1, 4, 5}), 5) == 5);
  CHECK(tuples(2, 3).empty());
}

TEST_CASE("generators") {
  auto sq = ring("square:2");
  auto g = generators(sq);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == P(sq, "x[1][1]*y[1] + x[1][2]*y[2]"));
  CHECK(g[1] == P(sq, "x[2][1]*y[1] + x[2][2]*y[2]"));

  auto sym = ring("symmetric:2");
  auto gs = generators(sym);
  CHECK(gs[1] == P(sym, "x[1][2]*y[1] + x[2][2]*y[2]"));

  auto w = ring("wide:2");
  auto gw = generators(w);
  REQUIRE(gw.size() == 3);
  CHECK(gw[2] == P(w, "x[3][1]*y[1] + x[3][2]*y[2]"));

  for (const char* shape : {"square:5", "symmetric:5", "wide:5"}) {
    auto r = ring(shape);
    auto gens = generators(r);
    for (int i = 1; i <= r->shape().rows(); ++i) CHECK(tilde(r, RowTuple({i})) == gens[static_cast<std::size_t>(i - 1)]);
  }
}

TEST_CASE("minors") {
  auto sq = ring("square:2");
  auto delta = P(sq, "x[1][1]*x[2][2] - x[1][2]*x[2][1]");
  CHECK(minor(sq, {1, 2}, {1, 2}) == delta);
  CHECK(minor(sq, {1, 2}, {2, 1}) == -delta);
  CHECK(minor(sq, {1, 2}, {2, 2}).is_zero());
  CHECK(determinant(sq) == delta);
  CHECK_THROWS_AS(minor(sq, {1, 2}, {1}), DomainError);
  CHECK_THROWS_AS(minor(sq, {1, 3}, {1, 2}), DomainError);

  auto sym = ring("symmetric:2");
  CHECK(minor(sym, {1, 2}, {1, 2}) == P(sym, "x[1][1]*x[2][2] - x[1][2]*x[1][2]"));

  CHECK(x_am(sq, RowTuple({2}), 2) == P(sq, "x[2][2]"));
  CHECK(x_am(sq, RowTuple({1, 2}), 2) == delta);
  auto s3 = ring("square:3");
  CHECK(x_am(s3, RowTuple({1, 3}), 3) == minor(s3, {1, 3}, {1, 3}));
  CHECK(x_am(s3, RowTuple({1, 3}), 3) == P(s3, "x[1][1]*x[3][3] - x[1][3]*x[3][1]"));
  CHECK_THROWS_AS(x_am(s3, RowTuple({1, 3}), 1), DomainError);

  CHECK(tilde(sq, RowTuple({1, 2})) == delta * P(sq, "y[2]"));
  auto s4 = ring("square:4");
  CHECK(tilde(s4, RowTuple({1, 2, 3, 4})) == determinant(s4) * P(s4, "y[4]"));

  // wide: determinant of the top n x n block
  auto w = ring("wide:2");
  CHECK(determinant(w) == P(w, "x[1][1]*x[2][2] - x[1][2]*x[2][1]"));
}

TEST_CASE("families") {
  auto s5 = ring("square:5");
  auto s3 = family_S(s5, 3);
  REQUIRE(s3.size() == 10);
  // sigma order: [1,2,3|1,2,3] -> 1, ..., [3,4,5|1,2,3] -> 10
  CHECK(s3[0].rows == RowTuple({1, 2, 3}));
  CHECK(s3[3].rows == RowTuple({1, 3, 4}));
  CHECK(s3[9].rows == RowTuple({3, 4, 5}));
  CHECK(s3[0].poly == minor(s5, {1, 2, 3}, {1, 2, 3}));

  auto sq = ring("square:2");
  auto g1 = polys(family_G(sq, 1));
  auto gens = generators(sq);
  CHECK(g1 == std::vector<Polynomial>{gens[0], gens[1], determinant(sq) * P(sq, "y[2]")});
  CHECK(family_G(ring("wide:2"), 1).size() == 6);
  CHECK(family_S_tilde(ring("wide:2"), 2).size() == 3);
  CHECK_THROWS_AS(family_S(sq, 0), DomainError);
  CHECK_THROWS_AS(family_S(sq, 3), DomainError);

  for (const char* shape : {"square:4", "symmetric:4", "wide:4"}) {
    auto r = ring(shape);
    auto B = MonomialOrder::order_b(r);
    for (int k = 1; k <= r->shape().n(); ++k) {
      for (const auto& m : family_S_tilde(r, k)) {
        Monomial diag;
        for (int t = 1; t <= k; ++t) {
          auto v = r->x(m.rows[static_cast<std::size_t>(t - 1)], t);
          diag.set(v, diag[v] + 1);
        }
        CHECK(leading_monomial(x_am(r, m.rows, k), B) == diag);
        diag.set(r->y(k), 1);
        CHECK(leading_monomial(m.poly, B) == diag);
      }
    }
  }
}

TEST_CASE("syzygy map") {
  auto s5 = ring("square:5");
  auto alpha = syzygy_phi(s5, 2, RowTuple({1, 3, 4, 5}));
  std::vector<Polynomial> expected;
  for (const char* t : {"0", "0", "0", "-x[5][2]", "x[4][2]", "-x[3][2]", "0", "0", "0", "x[1][2]"}) {
    expected.push_back(P(s5, t));
  }
  CHECK(alpha == expected);

  auto sq = ring("square:2");
  auto a2 = syzygy_phi(sq, 1, RowTuple({1, 2}));
  CHECK(a2 == std::vector<Polynomial>{P(sq, "-x[2][1]"), P(sq, "x[1][1]")});
  CHECK_THROWS_AS(syzygy_phi(sq, 2, RowTuple({1, 2})), DomainError);
  CHECK_THROWS_AS(syzygy_phi(sq, 1, RowTuple({1, 2, 3})), DomainError);

  for (const char* shape : {"square:4", "symmetric:4", "wide:3"}) {
    auto r = ring(shape);
    for (int k = 1; k < r->shape().rows() && k <= r->shape().n(); ++k) {
      auto minors = family_S(r, k);
      for (const auto& a : tuples(r->shape().rows(), k + 1)) {
        for (int j = 1; j <= k; ++j) {
          auto al = syzygy_phi(r, j, a);
          Polynomial sum(r);
          for (std::size_t i = 0; i < al.size(); ++i) sum += al[i] * minors[i].poly;
          CHECK(sum.is_zero());
        }
      }
    }
  }
}

TEST_CASE("Laplace coefficients") {
  auto sq = ring("square:2");
  auto beta = laplace_coeffs(sq, RowTuple({1, 2}), 1);
  REQUIRE(beta.size() == 2);
  CHECK(beta.at(RowTuple({1})) == P(sq, "x[2][2]"));
  CHECK(beta.at(RowTuple({2})) == P(sq, "-x[1][2]"));
  Polynomial lhs(sq);
  for (const auto& [b, c] : beta) lhs += c * x_am(sq, b, 2);
  CHECK(lhs.is_zero());
  CHECK(minor(sq, {1, 2}, {2, 2}).is_zero());

  auto s3 = ring("square:3");
  auto b3 = laplace_coeffs(s3, RowTuple({1, 2}), 1);
  Polynomial sum(s3);
  for (const auto& [b, c] : b3) sum += c * x_am(s3, b, 3);
  CHECK(sum == P(s3, "x[2][2]*x[1][3] - x[1][2]*x[2][3]"));
  CHECK(sum == minor(s3, {1, 2}, {3, 2}));
  CHECK_THROWS_AS(laplace_coeffs(s3, RowTuple({1, 2}), 2), DomainError);
}

TEST_CASE("cofactors") {
  auto sq = ring("square:2");
  CHECK(cofactor(sq, 1, 1) == P(sq, "x[2][2]"));
  CHECK(cofactor(sq, 2, 1) == P(sq, "-x[1][2]"));
  auto s3 = ring("square:3");
  CHECK(cofactor(s3, 1, 1) == P(s3, "x[2][2]*x[3][3] - x[2][3]*x[3][2]"));
  auto w = ring("wide:2");  // the top n x n block
  CHECK(cofactor(w, 2, 1) == P(w, "-x[1][2]"));
  CHECK_THROWS_AS(cofactor(w, 3, 1), DomainError);

  for (const char* shape : {"square:4", "symmetric:4"}) {
    auto r = ring(shape);
    auto g = generators(r);
    for (int i = 1; i <= 4; ++i) {
      Polynomial lhs = determinant(r) * Polynomial::variable(r, r->y(i));
      for (int j = 1; j <= 4; ++j) lhs -= cofactor(r, j, i) * g[static_cast<std::size_t>(j - 1)];
      CHECK(lhs.is_zero());
    }
  }
}

TEST_CASE("wide base case: diagonal leading terms of the maximal minors share a variable") {
  // The n = 2 wide matrix has maximal minors on rows (1,3) and (2,3); their
  // diagonal leading monomials x11*x32 and x21*x32 are not coprime, yet the
  // family is still a Groebner basis.
  auto w = ring("wide:2");
  auto B = MonomialOrder::order_b(w);
  auto d13 = minor(w, {1, 3}, {1, 2});
  auto d23 = minor(w, {2, 3}, {1, 2});
  CHECK(leading_monomial(d13, B) == P(w, "x[1][1]*x[3][2]").terms()[0].mono);
  CHECK(leading_monomial(d23, B) == P(w, "x[2][1]*x[3][2]").terms()[0].mono);
  CHECK_FALSE(coprime(leading_monomial(d13, B), leading_monomial(d23, B)));
  CHECK(is_groebner(polys(family_S_tilde(w, 2)), B));
  CHECK(is_groebner(polys(family_G(w, 1)), B));
}
