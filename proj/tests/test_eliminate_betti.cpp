#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "detgb/betti.hpp"
#include "detgb/budget.hpp"
#include "detgb/detideal.hpp"
#include "detgb/eliminate.hpp"
#include "detgb/errors.hpp"
#include "detgb/serialize.hpp"
#include "detgb/verify.hpp"
#include "helpers.hpp"

using namespace detgb;
using detgb::testing::P;
using detgb::testing::Ps;
using detgb::testing::ring;

TEST_CASE("intersection") {
  auto r = ring("square:2");
  auto B = MonomialOrder::order_b(r);
  Ideal y1(r, Ps(r, {"y[1]"})), y2(r, Ps(r, {"y[2]"}));
  CHECK(ideal_equal(intersect(y1, y2, B), Ideal(r, Ps(r, {"y[1]*y[2]"})), B));

  Ideal I(r, generators(r));
  CHECK(ideal_equal(intersect(I, I, B), I, B));

  auto delta = determinant(r);
  auto meet = intersect(I, Ideal(r, {delta}), B);
  CHECK(ideal_equal(meet, Ideal(r, {delta * P(r, "y[1]"), delta * P(r, "y[2]")}), B));
  for (const auto& g : meet.generators()) CHECK_FALSE(g.ring()->has_elim_var());

  CHECK_THROWS_AS(intersect(I, Ideal(ring("square:3"), {}), B), ContextError);
}

TEST_CASE("colon ideals") {
  auto r = ring("square:2");
  auto B = MonomialOrder::order_b(r);
  Ideal I(r, generators(r));
  CHECK(ideal_equal(colon(I, P(r, "1"), B), I, B));
  CHECK(ideal_equal(colon(I, determinant(r), B), Ideal(r, Ps(r, {"y[1]", "y[2]"})), B));
  CHECK_THROWS_AS(colon(I, Polynomial(r), B), DomainError);

  auto w = ring("wide:2");
  auto Bw = MonomialOrder::order_b(w);
  auto g = generators(w);
  Ideal top(w, {g[0], g[1]});
  CHECK(ideal_equal(colon(top, g[2], Bw), top.plus(std::vector<Polynomial>{determinant(w)}), Bw));

  // y1 is a zero divisor modulo <y1*y2>: the colon grows to <y2>
  Ideal mono(r, Ps(r, {"y[1]*y[2]"}));
  CHECK(ideal_equal(colon(mono, P(r, "y[1]"), B), Ideal(r, Ps(r, {"y[2]"})), B));
}

TEST_CASE("Koszul and mapping cones") {
  auto k = koszul_table(2, 2);
  CHECK(k.totals() == std::vector<std::int64_t>{1, 2, 1});
  CHECK(k.rank(1, 2) == 2);
  CHECK(k.rank(2, 4) == 1);
  CHECK(koszul_table(1, 5).totals() == std::vector<std::int64_t>{1, 1});
  auto k3 = koszul_table(3, 1);
  CHECK(k3.totals() == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(k3.rank(3, 3) == 1);

  CHECK(mapping_cone(k, GradedBettiTable{}, -4) == k);

  const std::pair<int, int> bad[] = {{1, 7}};
  CHECK_THROWS_AS(mapping_cone(k, k, 0, bad), DomainError);
  GradedBettiTable t;
  CHECK_THROWS_AS(t.add(0, 0, -1), DomainError);
  CHECK_THROWS_AS(koszul_table(-1, 2), DomainError);
}

TEST_CASE("Northcott and J tables") {
  auto n2 = northcott_table(2);
  CHECK(n2.totals() == std::vector<std::int64_t>{1, 3, 2});
  CHECK(n2.rank(1, 2) == 3);  // g_1, g_2 and Delta are all quadrics
  CHECK(n2.rank(2, 3) == 2);
  CHECK(table_numerator(n2, 6).coeffs == std::vector<std::int64_t>{1, 0, -3, 2});
  // C(3,i) + C(3,i-1) for 0 < i < 3; the alternating sum must vanish
  CHECK(northcott_table(3).totals() == std::vector<std::int64_t>{1, 4, 6, 3});

  for (int n = 1; n <= 8; ++n) {
    auto tbl = northcott_table(n);
    CHECK(tbl.rank(n, 2 * n - 1) == n);
    CHECK(tbl.rank(n, 2 * n) == 0);
    for (int i = 1; i < n; ++i) {
      if (2 * i == n + i - 1) {
        CHECK(tbl.rank(i, 2 * i) == binomial(n, i) + binomial(n, i - 1));
      } else {
        CHECK(tbl.rank(i, 2 * i) == binomial(n, i));
        CHECK(tbl.rank(i, n + i - 1) == binomial(n, i - 1));
      }
    }
  }

  auto j2 = betti_J_graded(2);
  CHECK(j2.rank(1, 2) == 3);
  CHECK(j2.rank(2, 4) == 4);
  CHECK(j2.rank(3, 5) == 2);
  CHECK(table_numerator(j2, 8).coeffs == std::vector<std::int64_t>{1, 0, -3, 0, 4, -2});

  CHECK(betti_J_totals(2) == std::vector<std::int64_t>{1, 3, 4, 2});
  CHECK(betti_J_totals(3) == std::vector<std::int64_t>{1, 4, 7, 7, 3});
  for (int n = 1; n <= 10; ++n) {
    CHECK(betti_J_graded(n).totals() == betti_J_totals(n));
    std::int64_t alt = 0;
    auto tot = betti_J_totals(n);
    for (std::size_t i = 0; i < tot.size(); ++i) alt += (i % 2 ? -1 : 1) * tot[i];
    CHECK(alt == 0);
    CHECK(table_numerator(betti_J_graded(n), 1).at_one() == 0);
  }
}

TEST_CASE("Hilbert numerators and dimension") {
  auto r = ring("square:2");
  auto x = Monomial::variable(0);
  auto y = Monomial::variable(1);
  CHECK(hilbert_numerator(std::vector<Monomial>{x * x}, 1).coeffs == std::vector<std::int64_t>{1, 0, -1});
  CHECK(hilbert_numerator(std::vector<Monomial>{x, y}, 2).coeffs == std::vector<std::int64_t>{1, -2, 1});
  CHECK(hilbert_numerator(std::vector<Monomial>{}, 3).coeffs == std::vector<std::int64_t>{1});
  CHECK(hilbert_numerator(std::vector<Monomial>{Monomial{}}, 3).coeffs.empty());
  CHECK_THROWS_AS(hilbert_numerator(std::vector<Monomial>{Monomial::variable(5)}, 3), DomainError);

  // in(<g1, g2>) under order B: complete intersection numerator (1 - t^2)^2
  auto B = MonomialOrder::order_b(r);
  std::vector<Monomial> leads;
  for (const auto& g : reduced_gb(generators(r), B)) leads.push_back(leading_monomial(g, B));
  auto hn = hilbert_numerator(leads, 6);
  CHECK(hn == table_numerator(koszul_table(2, 2), 6));
  CHECK(hn.to_string() == "1 - 2*t^2 + t^4");
  CHECK(dimension(hn) == 4);

  CHECK(dimension(hilbert_numerator(std::vector<Monomial>{x * x}, 1)) == 0);
  CHECK(dimension(HilbertNumerator{{}, 3}) == -1);
}

TEST_CASE("Cohen-Macaulay reports") {
  auto sq = cm_report(MatrixShape::square(2));
  CHECK(sq.projdim == 2);
  CHECK(sq.numvars == 6);
  CHECK(sq.dim == 4);
  CHECK(sq.depth == 4);
  CHECK(sq.is_cm);
  CHECK(sq.hilbert_consistent);

  auto w = cm_report(MatrixShape::wide(2));
  CHECK(w.projdim == 3);
  CHECK(w.numvars == 8);
  CHECK(w.depth == 5);
  CHECK(w.dim == 6);
  CHECK_FALSE(w.is_cm);
  CHECK(w.hilbert_consistent);
}

TEST_CASE("graded table text") {
  auto text = betti_J_graded(2).to_string();
  CHECK(text.find("total:     1    3    4    2") != std::string::npos);
  CHECK(GradedBettiTable{}.to_string() == "(empty)\n");
}

TEST_CASE("JSON serialization") {
  auto tbl = betti_J_graded(3);
  auto j = to_json(tbl);
  CHECK(j["entries"][0]["i"] == 0);
  CHECK(j["entries"][0]["rank"] == 1);
  CHECK(betti_table_from_json(j) == tbl);
  CHECK_THROWS_AS(betti_table_from_json(Json{{"entries", {{{"i", 0}}}}}), ParseError);
  CHECK(to_json(table_numerator(northcott_table(2), 6)).dump() == "[1,0,-3,2]");

  auto report = run_suite(Suite::Cofactor, MatrixShape::square(2));
  auto rj = to_json(report);
  CHECK(rj["suite"] == "cofactor");
  CHECK(rj["shape"] == "square:2");
  CHECK(rj["n"] == 2);
  CHECK(rj["checks"].size() == 2);
  CHECK(rj["checks"][0]["status"] == "pass");
  CHECK(rj["checks"][0]["witness"] == "");
}

TEST_CASE("ideal files") {
  std::istringstream in("# a comment\n\nshape: square:2\ny[1] + y[2]  # trailing\ny[2]\n");
  auto f = read_ideal_file(in);
  CHECK(f.shape == MatrixShape::square(2));
  REQUIRE(f.generators.size() == 2);
  CHECK(f.generators[1] == P(f.ring, "y[2]"));

  std::istringstream no_header("y[1]\n");
  CHECK_THROWS_AS(read_ideal_file(no_header), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_ideal_file(empty), ParseError);
  std::istringstream bad("shape: square:2\ny[3]\n");
  CHECK_THROWS_WITH_AS(read_ideal_file(bad), doctest::Contains("line 2"), ParseError);
}

TEST_CASE("verification suites") {
  CHECK(parse_suite("spair-descent") == Suite::SpairDescent);
  CHECK(suite_name(Suite::SkGb) == "sk-gb");
  CHECK(expand_suite(Suite::All).size() == 10);
  CHECK_THROWS_AS(parse_suite("everything"), ParseError);

  for (const char* shape : {"square:2", "symmetric:2", "wide:2", "square:3", "symmetric:3", "wide:3"}) {
    auto report = run_suite(Suite::All, MatrixShape::parse(shape));
    for (const auto& c : report.checks) {
      INFO(shape, " ", c.name, ": ", c.witness);
      CHECK(c.passed);
    }
    CHECK(std::is_sorted(report.checks.begin(), report.checks.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; }));
  }

  // threaded runs report the same checks in the same order
  VerifyOptions threaded;
  threaded.threads = 3;
  auto serial = run_suite(Suite::All, MatrixShape::wide(2));
  auto parallel = run_suite(Suite::All, MatrixShape::wide(2), threaded);
  REQUIRE(serial.checks.size() == parallel.checks.size());
  for (std::size_t i = 0; i < serial.checks.size(); ++i) {
    CHECK(serial.checks[i].name == parallel.checks[i].name);
    CHECK(serial.checks[i].passed == parallel.checks[i].passed);
  }

  VerifyOptions expired;
  expired.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(run_suite(Suite::Gb, MatrixShape::square(3), expired), BudgetExceeded);
}
