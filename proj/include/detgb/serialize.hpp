#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "detgb/betti.hpp"
#include "detgb/polynomial.hpp"
#include "detgb/verify.hpp"

namespace detgb {

using Json = nlohmann::ordered_json;

/// {"suite", "shape", "n", "checks": [{"name", "status", "witness", "millis"}]}
Json to_json(const SuiteReport& report);
/// {"entries": [{"i", "j", "rank"}]}
Json to_json(const GradedBettiTable& table);
/// Integer coefficients, index = degree.
Json to_json(const HilbertNumerator& numerator);

GradedBettiTable betti_table_from_json(const Json& j);

struct IdealFile {
  MatrixShape shape = MatrixShape::square(1);
  RingPtr ring;
  std::vector<Polynomial> generators;
};

/// "shape: square:2" header, '#' comments, one polynomial per line.
IdealFile read_ideal_file(std::istream& in);

}  // namespace detgb
