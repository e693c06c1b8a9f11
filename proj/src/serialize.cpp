#include "detgb/serialize.hpp"

#include <algorithm>
#include <cctype>

#include "detgb/errors.hpp"

namespace detgb {

Json to_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"status", c.passed ? "pass" : "fail"},
                      {"witness", c.witness},
                      {"millis", c.millis}});
  }
  return {{"suite", report.suite}, {"shape", report.shape.to_string()}, {"n", report.shape.n()}, {"checks", checks}};
}

Json to_json(const GradedBettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, r] : table.entries()) entries.push_back({{"i", key.first}, {"j", key.second}, {"rank", r}});
  return {{"entries", entries}};
}

Json to_json(const HilbertNumerator& numerator) { return Json(numerator.coeffs); }

GradedBettiTable betti_table_from_json(const Json& j) {
  GradedBettiTable t;
  try {
    for (const auto& e : j.at("entries")) t.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("rank").get<std::int64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed Betti table: ") + e.what());
  }
  return t;
}

namespace {

std::string strip(std::string s) {
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

IdealFile read_ideal_file(std::istream& in) {
  IdealFile out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty()) continue;
    if (!out.ring) {
      if (line.rfind("shape:", 0) != 0) throw ParseError("line " + std::to_string(lineno) + ": expected 'shape: <kind>:<n>' header");
      out.shape = MatrixShape::parse(strip(line.substr(6)));
      out.ring = RingContext::make(out.shape);
      continue;
    }
    try {
      out.generators.push_back(parse_polynomial(line, out.ring));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!out.ring) throw ParseError("missing 'shape:' header");
  return out;
}

}  // namespace detgb
