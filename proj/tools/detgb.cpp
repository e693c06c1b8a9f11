// detgb: construct determinantal ideals I_1(XY), compute Groebner bases and
// run the verification suites.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
// 3 time budget exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "detgb/betti.hpp"
#include "detgb/budget.hpp"
#include "detgb/detideal.hpp"
#include "detgb/errors.hpp"
#include "detgb/groebner.hpp"
#include "detgb/order.hpp"
#include "detgb/serialize.hpp"
#include "detgb/verify.hpp"

using namespace detgb;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct NRange {
  int lo = 2;
  int hi = 3;
};

NRange parse_range(const std::string& text) {
  NRange r;
  auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      std::string a = text.substr(0, dots), b = text.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(text);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw ParseError("bad --n value '" + text + "' (expected N or LO..HI)");
  }
  if (r.lo < 1 || r.hi < r.lo) throw ParseError("bad --n range '" + text + "'");
  return r;
}

// "square:3" is a single shape; a bare kind ("wide") is expanded over the n range;
// an empty selector means every kind.
std::vector<MatrixShape> shapes_for(const std::string& selector, const NRange& range) {
  if (selector.find(':') != std::string::npos) return {MatrixShape::parse(selector)};
  std::vector<MatrixShape::Kind> kinds;
  if (selector.empty()) {
    kinds = {MatrixShape::Kind::Square, MatrixShape::Kind::Symmetric, MatrixShape::Kind::Wide};
  } else {
    kinds = {parse_shape_kind(selector)};
  }
  std::vector<MatrixShape> out;
  for (auto kind : kinds) {
    for (int n = range.lo; n <= range.hi; ++n) out.emplace_back(kind, n);
  }
  return out;
}

std::optional<std::chrono::steady_clock::time_point> deadline_after(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
}

// --- gens ---------------------------------------------------------------

struct GensArgs {
  std::string shape;
  int k = 0;
  bool json = false;
};

Json family_json(const std::vector<FamilyMember>& family, const MonomialOrder& ord) {
  Json out = Json::array();
  for (const auto& m : family) out.push_back({{"rows", m.rows.to_string()}, {"poly", m.poly.to_string(ord)}});
  return out;
}

void print_family(const std::string& title, const char* prefix, const std::vector<FamilyMember>& family,
                  const MonomialOrder& ord) {
  std::cout << title << " (" << family.size() << "):\n";
  for (const auto& m : family) std::cout << "  " << prefix << m.rows.to_string() << " = " << m.poly.to_string(ord) << "\n";
}

int cmd_gens(const GensArgs& args) {
  auto shape = MatrixShape::parse(args.shape);
  if (args.k < 0 || args.k > shape.n()) throw DomainError("--k must lie in 1.." + std::to_string(shape.n()));
  auto ring = RingContext::make(shape);
  auto ord = MonomialOrder::order_b(ring);
  auto gens = generators(ring);
  int lo = args.k ? args.k : 1, hi = args.k ? args.k : shape.n();

  if (args.json) {
    Json out = {{"shape", shape.to_string()}};
    Json g = Json::array();
    for (const auto& p : gens) g.push_back(p.to_string(ord));
    out["generators"] = g;
    Json fams = Json::array();
    for (int k = lo; k <= hi; ++k) {
      fams.push_back({{"k", k},
                      {"S", family_json(family_S(ring, k), ord)},
                      {"S~", family_json(family_S_tilde(ring, k), ord)},
                      {"G", family_json(family_G(ring, k), ord)}});
    }
    out["families"] = fams;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "shape " << shape.to_string() << "\n";
  for (std::size_t i = 0; i < gens.size(); ++i) std::cout << "g_" << i + 1 << " = " << gens[i].to_string(ord) << "\n";
  for (int k = lo; k <= hi; ++k) {
    std::string ks = std::to_string(k);
    print_family("S_" + ks, "X^", family_S(ring, k), ord);
    print_family("S~_" + ks, "X~^", family_S_tilde(ring, k), ord);
    print_family("G_" + ks, "X~^", family_G(ring, k), ord);
  }
  return 0;
}

// --- verify -------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::string shape;
  std::string n = "2..3";
  bool json = false;
  double max_seconds = 0;
};

int cmd_verify(const VerifyArgs& args) {
  Suite suite = parse_suite(args.suite);
  auto shapes = shapes_for(args.shape, parse_range(args.n));
  VerifyOptions options;
  options.threads = threads_from_env();
  options.deadline = deadline_after(args.max_seconds);

  bool all_passed = true;
  for (const auto& shape : shapes) {
    SuiteReport report;
    try {
      report = run_suite(suite, shape, options);
    } catch (const BudgetExceeded&) {
      std::cerr << "detgb: time budget of " << args.max_seconds << " s exceeded during " << suite_name(suite) << " on "
                << shape.to_string() << "\n";
      return kExitBudget;
    }
    all_passed = all_passed && report.passed();
    if (args.json) {
      std::cout << to_json(report).dump() << "\n";
      continue;
    }
    int failed = 0;
    for (const auto& c : report.checks) {
      std::cout << (c.passed ? "pass " : "FAIL ") << shape.to_string() << " " << c.name;
      if (!c.passed) {
        ++failed;
        std::cout << "\n     witness: " << c.witness;
      }
      std::cout << "\n";
    }
    std::cout << "== " << report.suite << " " << shape.to_string() << ": " << report.checks.size() - failed << "/"
              << report.checks.size() << " passed\n";
  }
  return all_passed ? 0 : kExitFail;
}

// --- betti --------------------------------------------------------------

struct BettiArgs {
  std::string shape;
  bool graded = false;
  bool check_hilbert = false;
  bool json = false;
};

int cmd_betti(const BettiArgs& args) {
  auto shape = MatrixShape::parse(args.shape);
  auto ring = RingContext::make(shape);
  auto table = predicted_table(shape);
  auto predicted = table_numerator(table, ring->num_vars());

  std::optional<HilbertNumerator> computed;
  if (args.check_hilbert) {
    auto ord = MonomialOrder::order_b(ring);
    std::vector<Monomial> leads;
    for (const auto& g : reduced_gb(generators(ring), ord)) leads.push_back(leading_monomial(g, ord));
    computed = hilbert_numerator(leads, ring->num_vars());
  }
  bool consistent = !computed || *computed == predicted;

  if (args.json) {
    Json out = {{"shape", shape.to_string()}, {"totals", table.totals()}};
    if (args.graded) out["table"] = to_json(table);
    out["numerator"] = to_json(predicted);
    if (computed) {
      out["computed_numerator"] = to_json(*computed);
      out["hilbert"] = consistent ? "consistent" : "inconsistent";
    }
    std::cout << out.dump() << "\n";
    return consistent ? 0 : kExitFail;
  }

  std::string totals;
  for (auto v : table.totals()) totals += (totals.empty() ? "" : ",") + std::to_string(v);
  std::cout << "totals: " << totals << "\n";
  if (args.graded) {
    std::cout << table.to_string();
    std::cout << "numerator: " << predicted.to_string() << " over " << ring->num_vars() << " variables\n";
  }
  if (computed) {
    if (consistent) {
      std::cout << "hilbert: consistent\n";
    } else {
      std::cout << "hilbert: inconsistent (table " << predicted.to_string() << ", initial ideal " << computed->to_string()
                << ")\n";
    }
  }
  return consistent ? 0 : kExitFail;
}

// --- gb -----------------------------------------------------------------

struct GbArgs {
  std::string file;
  std::string shape;
  std::string order = "B";
  bool json = false;
  double max_seconds = 0;
};

int cmd_gb(const GbArgs& args) {
  if (args.file.empty() == args.shape.empty()) throw ParseError("gb needs exactly one of an ideal file or --shape");
  RingPtr ring;
  std::vector<Polynomial> gens;
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw ParseError("cannot open '" + args.file + "'");
    auto f = read_ideal_file(in);
    ring = f.ring;
    gens = std::move(f.generators);
  } else {
    ring = RingContext::make(MatrixShape::parse(args.shape));
    gens = generators(ring);
  }
  auto ord = MonomialOrder::by_name(args.order, ring);
  std::vector<Polynomial> basis;
  {
    ScopedDeadline guard(deadline_after(args.max_seconds));
    try {
      basis = reduced_gb(gens, ord);
    } catch (const BudgetExceeded&) {
      std::cerr << "detgb: time budget of " << args.max_seconds << " s exceeded\n";
      return kExitBudget;
    }
  }
  if (args.json) {
    Json b = Json::array();
    for (const auto& p : basis) b.push_back(p.to_string(ord));
    std::cout << Json{{"shape", ring->shape().to_string()}, {"order", ord.name()}, {"basis", b}}.dump() << "\n";
  } else {
    for (const auto& p : basis) std::cout << p.to_string(ord) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases and verification for the determinantal ideals I_1(XY)"};
  app.require_subcommand(1);

  GensArgs gens;
  auto* g = app.add_subcommand("gens", "List the generators g_i and the families S_k, S~_k, G_k");
  g->add_option("--shape", gens.shape, "square:n, symmetric:n or wide:n")->required();
  g->add_option("--k", gens.k, "Only this k (default: all)");
  g->add_flag("--json", gens.json, "JSON output");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run verification suites");
  v->add_option("--suite", verify.suite, "gb, sk-gb, reduced, regseq, syzygy, spair-descent, laplace, cofactor, colon, hilbert, all")
      ->capture_default_str();
  v->add_option("--shape", verify.shape, "kind:n, or a bare kind expanded over --n (default: every kind)");
  v->add_option("--n", verify.n, "N or LO..HI")->capture_default_str();
  v->add_flag("--json", verify.json, "One JSON report per line");
  v->add_option("--max-seconds", verify.max_seconds, "Abort with exit 3 after this many seconds");

  BettiArgs betti;
  auto* b = app.add_subcommand("betti", "Predicted Betti numbers of R/I_1(XY)");
  b->add_option("--shape", betti.shape, "square:n, symmetric:n or wide:n")->required();
  b->add_flag("--graded", betti.graded, "Print the graded table");
  b->add_flag("--check-hilbert", betti.check_hilbert, "Compare against the Hilbert series of the initial ideal");
  b->add_flag("--json", betti.json, "JSON output");

  GbArgs gb;
  auto* r = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file or of I_1(XY)");
  r->add_option("file", gb.file, "Ideal file ('shape: kind:n' header, one polynomial per line)");
  r->add_option("--shape", gb.shape, "Use the generators g_i of this shape");
  r->add_option("--order", gb.order, "A or B")->capture_default_str();
  r->add_flag("--json", gb.json, "JSON output");
  r->add_option("--max-seconds", gb.max_seconds, "Abort with exit 3 after this many seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*g) return cmd_gens(gens);
    if (*v) return cmd_verify(verify);
    if (*b) return cmd_betti(betti);
    if (*r) return cmd_gb(gb);
  } catch (const ParseError& e) {
    std::cerr << "detgb: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "detgb: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContextError& e) {
    std::cerr << "detgb: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
